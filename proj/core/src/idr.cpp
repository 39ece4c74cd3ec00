#include "msiimgrid/idr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "msiimgrid/error.hpp"

namespace msiim {

char op_symbol(IdrOp op) {
  switch (op) {
    case IdrOp::MaxOr:
      return '|';
    case IdrOp::MinAnd:
      return '&';
    case IdrOp::NewXor:
      return '^';
  }
  return '?';
}

namespace {

StateValue apply_op(IdrOp op, StateValue a, StateValue b) {
  switch (op) {
    case IdrOp::MaxOr:
      return max_or(a, b);
    case IdrOp::MinAnd:
      return min_and(a, b);
    case IdrOp::NewXor:
      return new_xor(a, b);
  }
  return StateValue::NoOperation;
}

}  // namespace

IdrExpr IdrExpr::leaf(EntityRef entity) {
  IdrExpr e;
  e.repr_ = std::move(entity);
  return e;
}

IdrExpr IdrExpr::node(IdrOp op, std::vector<IdrExpr> children) {
  if (children.size() < 2)
    throw Error(ErrorCode::EmptyChain, "operator node needs at least two children");
  IdrExpr e;
  e.repr_ = OpNode{op, std::move(children)};
  return e;
}

IdrExpr IdrExpr::xor_chain(const std::vector<std::string>& ids) {
  if (ids.empty()) throw Error(ErrorCode::EmptyChain, "empty entity chain");
  if (ids.size() == 1) return leaf(EntityRef::from_id(ids[0]));
  std::vector<IdrExpr> kids;
  kids.reserve(ids.size());
  for (const auto& id : ids) kids.push_back(leaf(EntityRef::from_id(id)));
  return node(IdrOp::NewXor, std::move(kids));
}

void IdrExpr::collect_leaves(std::vector<EntityRef>& out) const {
  if (is_leaf()) {
    out.push_back(entity());
    return;
  }
  for (const auto& kid : children()) kid.collect_leaves(out);
}

std::vector<EntityRef> IdrExpr::leaves() const {
  std::vector<EntityRef> out;
  collect_leaves(out);
  return out;
}

bool IdrExpr::operator==(const IdrExpr& other) const { return repr_ == other.repr_; }

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  std::size_t column() { return pos + 1; }

  bool consume(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool consume_arrow() {
    skip_ws();
    if (pos + 1 < src.size() && src[pos] == '<' && src[pos + 1] == '-') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected entity identifier", column());
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    return src.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;
  const std::set<std::string>* known;

  EntityRef entity() {
    std::size_t col = lex.column();
    std::string id = lex.ident();
    if (known != nullptr && known->find(id) == known->end())
      throw Error(ErrorCode::UnknownEntity,
                  "entity '" + id + "' is not declared in the scenario (at position " +
                      std::to_string(col) + ")");
    return EntityRef::from_id(id);
  }

  IdrExpr primary() {
    if (lex.consume('(')) {
      IdrExpr e = expr();
      if (!lex.consume(')')) throw ParseError("expected ')'", lex.column());
      return e;
    }
    return IdrExpr::leaf(entity());
  }

  IdrExpr chain(IdrOp op, char sym, IdrExpr (Parser::*next)()) {
    std::vector<IdrExpr> items;
    items.push_back((this->*next)());
    while (lex.consume(sym)) items.push_back((this->*next)());
    if (items.size() == 1) return std::move(items[0]);
    return IdrExpr::node(op, std::move(items));
  }

  IdrExpr andseq() { return chain(IdrOp::MinAnd, '&', &Parser::primary); }
  IdrExpr xorseq() { return chain(IdrOp::NewXor, '^', &Parser::andseq); }
  IdrExpr expr() { return chain(IdrOp::MaxOr, '|', &Parser::xorseq); }
};

}  // namespace

Idr parse_idr(const std::string& text, const std::set<std::string>* known_entities) {
  Parser p{Lexer{text}, known_entities};
  EntityRef target = p.entity();
  if (!p.lex.consume_arrow()) throw ParseError("expected '<-'", p.lex.column());
  IdrExpr e = p.expr();
  if (!p.lex.at_end())
    throw ParseError(std::string("unexpected '") + p.lex.peek() + "'", p.lex.column());
  return Idr{target, std::move(e)};
}

std::string print_expr(const IdrExpr& expr) {
  if (expr.is_leaf()) return expr.entity().id;
  std::string out;
  const auto& kids = expr.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0) {
      out += ' ';
      out += op_symbol(expr.op());
      out += ' ';
    }
    if (kids[i].is_leaf()) {
      out += print_expr(kids[i]);
    } else {
      out += '(' + print_expr(kids[i]) + ')';
    }
  }
  return out;
}

std::string print_idr(const Idr& idr) {
  return idr.target.id + " <- " + print_expr(idr.expr);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

StateValue lookup(const EntityRef& leaf, const Assignment& assignment) {
  auto it = assignment.find(leaf.id);
  if (it == assignment.end())
    throw Error(ErrorCode::MissingAssignment, "no value for " + leaf.id);
  if (!kind_admits(leaf.kind, it->second))
    throw Error(ErrorCode::KindViolation,
                "P-type entity " + leaf.id + " cannot hold state 1");
  return it->second;
}

void check_bindings(const IdrExpr& expr, const Assignment& assignment) {
  std::vector<std::string> missing;
  for (const auto& leaf : expr.leaves()) {
    auto it = assignment.find(leaf.id);
    if (it == assignment.end()) {
      missing.push_back(leaf.id);
    } else if (!kind_admits(leaf.kind, it->second)) {
      throw Error(ErrorCode::KindViolation,
                  "P-type entity " + leaf.id + " cannot hold state 1");
    }
  }
  if (!missing.empty()) {
    std::string msg = "unbound leaves:";
    for (const auto& id : missing) msg += " " + id;
    throw Error(ErrorCode::MissingAssignment, msg);
  }
}

StateValue eval_rec(const IdrExpr& expr, const Assignment& assignment) {
  if (expr.is_leaf()) return lookup(expr.entity(), assignment);
  const auto& kids = expr.children();
  StateValue acc = eval_rec(kids[0], assignment);
  for (std::size_t i = 1; i < kids.size(); ++i)
    acc = apply_op(expr.op(), acc, eval_rec(kids[i], assignment));
  return acc;
}

// Value tree for the step trace: leaves already substituted.
struct ValNode {
  std::optional<StateValue> value;
  IdrOp op = IdrOp::MaxOr;
  std::vector<ValNode> kids;

  bool is_value() const { return value.has_value(); }
};

ValNode substitute(const IdrExpr& expr, const Assignment& assignment) {
  ValNode n;
  if (expr.is_leaf()) {
    n.value = lookup(expr.entity(), assignment);
    return n;
  }
  n.op = expr.op();
  for (const auto& kid : expr.children()) n.kids.push_back(substitute(kid, assignment));
  return n;
}

// One sweep folds every node whose children are all plain values; this
// reduces innermost parentheses first, one nesting level per line.
bool reduce_sweep(ValNode& n) {
  if (n.is_value()) return false;
  bool all_values = true;
  for (const auto& kid : n.kids)
    if (!kid.is_value()) all_values = false;
  if (all_values) {
    StateValue acc = *n.kids[0].value;
    for (std::size_t i = 1; i < n.kids.size(); ++i)
      acc = apply_op(n.op, acc, *n.kids[i].value);
    n.value = acc;
    n.kids.clear();
    return true;
  }
  bool changed = false;
  for (auto& kid : n.kids) changed |= reduce_sweep(kid);
  return changed;
}

std::string print_val(const ValNode& n) {
  if (n.is_value()) return to_string(*n.value);
  std::string out;
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    if (i > 0) {
      out += ' ';
      out += op_symbol(n.op);
      out += ' ';
    }
    if (n.kids[i].is_value()) {
      out += print_val(n.kids[i]);
    } else {
      out += '(' + print_val(n.kids[i]) + ')';
    }
  }
  return out;
}

}  // namespace

StateValue evaluate(const IdrExpr& expr, const Assignment& assignment) {
  check_bindings(expr, assignment);
  return eval_rec(expr, assignment);
}

EvalTrace evaluate_with_trace(const IdrExpr& expr, const Assignment& assignment) {
  check_bindings(expr, assignment);
  EvalTrace trace;
  ValNode tree = substitute(expr, assignment);
  trace.steps.push_back(print_val(tree));
  while (!tree.is_value()) {
    reduce_sweep(tree);
    trace.steps.push_back(print_val(tree));
  }
  trace.result = *tree.value;
  return trace;
}

// ---------------------------------------------------------------------------
// Generators

IdrExpr generate_gateway_idr(const std::vector<std::string>& pmu_ids,
                             const std::vector<std::string>& relay_ids) {
  if (pmu_ids.empty()) throw Error(ErrorCode::EmptyChain, "gateway has no PMUs");
  if (relay_ids.empty())
    throw Error(ErrorCode::EmptyChain, "gateway has no one-hop relays");
  return IdrExpr::node(IdrOp::MinAnd,
                       {IdrExpr::xor_chain(pmu_ids), IdrExpr::xor_chain(relay_ids)});
}

IdrExpr generate_round_relay_idr(const EntityRef& node,
                                 const std::vector<std::string>& upstream) {
  if (upstream.empty())
    throw Error(ErrorCode::EmptyChain,
                node.id + " has no upstream neighbor on an active path");
  return IdrExpr::xor_chain(upstream);
}

// ---------------------------------------------------------------------------
// File loading

std::vector<Idr> parse_idr_lines(const std::string& content,
                                 const std::set<std::string>* known_entities) {
  std::vector<Idr> out;
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    try {
      out.push_back(parse_idr(line, known_entities));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  return out;
}

std::vector<Idr> load_idr_file(const std::string& path,
                               const std::set<std::string>* known_entities) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open IDR file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_idr_lines(buf.str(), known_entities);
}

}  // namespace msiim
