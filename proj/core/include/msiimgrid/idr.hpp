#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "msiimgrid/state.hpp"

namespace msiim {

enum class IdrOp : std::uint8_t { MaxOr, MinAnd, NewXor };

char op_symbol(IdrOp op);  // '|', '&', '^'

/// Expression tree over entities and the three state operators. Internal
/// nodes are n-ary (>= 2 children) and evaluate as left folds, which for
/// NewXor fixes the canonical reduction order.
class IdrExpr {
 public:
  static IdrExpr leaf(EntityRef entity);
  static IdrExpr node(IdrOp op, std::vector<IdrExpr> children);

  /// NewXor chain over ids; a single id degenerates to a leaf.
  static IdrExpr xor_chain(const std::vector<std::string>& ids);

  bool is_leaf() const { return std::holds_alternative<EntityRef>(repr_); }
  const EntityRef& entity() const { return std::get<EntityRef>(repr_); }
  IdrOp op() const { return std::get<OpNode>(repr_).op; }
  const std::vector<IdrExpr>& children() const { return std::get<OpNode>(repr_).kids; }

  void collect_leaves(std::vector<EntityRef>& out) const;
  std::vector<EntityRef> leaves() const;

  bool operator==(const IdrExpr& other) const;

 private:
  struct OpNode {
    IdrOp op;
    std::vector<IdrExpr> kids;
    bool operator==(const OpNode&) const = default;
  };
  std::variant<EntityRef, OpNode> repr_;
};

struct Idr {
  EntityRef target;
  IdrExpr expr;
};

/// Grammar (one relation per line):
///
///   idr    := entity "<-" expr
///   expr   := xorseq ( "|" xorseq )*        lowest precedence
///   xorseq := andseq ( "^" andseq )*
///   andseq := primary ( "&" primary )*      highest precedence
///   primary:= entity | "(" expr ")"
///   entity := letter (letter | digit)*
///
/// Runs of the same operator collapse into one n-ary node. `known_entities`,
/// when given, restricts identifiers to the declared set.
Idr parse_idr(const std::string& text,
              const std::set<std::string>* known_entities = nullptr);

std::string print_expr(const IdrExpr& expr);
std::string print_idr(const Idr& idr);

using Assignment = std::map<std::string, StateValue>;

/// Bottom-up evaluation. Throws MissingAssignment listing every unbound
/// leaf, and KindViolation if a P-type leaf is bound to 1.
StateValue evaluate(const IdrExpr& expr, const Assignment& assignment);

struct EvalTrace {
  /// The expression with values substituted, then one line per reduction
  /// sweep (each sweep folds every node whose children are all values).
  std::vector<std::string> steps;
  StateValue result;
};

EvalTrace evaluate_with_trace(const IdrExpr& expr, const Assignment& assignment);

/// Gateway relation: (U_1 ^ ... ^ U_n) & (R_1 ^ ... ^ R_m). All PMUs and all
/// one-hop relays up gives 3; one silent PMU drags the chain to 2.
IdrExpr generate_gateway_idr(const std::vector<std::string>& pmu_ids,
                             const std::vector<std::string>& relay_ids);

/// Per-round relay relation: NewXor chain over the node's upstream
/// neighbors on the paths selected this round.
IdrExpr generate_round_relay_idr(const EntityRef& node,
                                 const std::vector<std::string>& upstream_on_active_paths);

/// Plain-text IDR set: one relation per line, '#' comments and blank lines
/// ignored.
std::vector<Idr> load_idr_file(const std::string& path,
                               const std::set<std::string>* known_entities = nullptr);
std::vector<Idr> parse_idr_lines(const std::string& content,
                                 const std::set<std::string>* known_entities = nullptr);

}  // namespace msiim
