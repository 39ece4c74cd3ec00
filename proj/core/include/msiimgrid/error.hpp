#pragma once

#include <stdexcept>
#include <string>

namespace msiim {

enum class ErrorCode {
  Syntax,             // malformed IDR text
  UnknownEntity,      // identifier not declared in the scenario
  MissingAssignment,  // IDR leaf without a value
  KindViolation,      // P-type entity given state 1
  NonNeighbor,        // state-table update for a non-adjacent entity
  EmptyChain,         // IDR generator called with an empty entity list
  MissingPosition,    // partitioning without coordinates
  TooFewSubstations,  // CC selection needs at least two
  DisconnectedGateway,
  NoPath,
  InsufficientPaths,
  InvalidLength,   // key split length not a positive multiple of 8
  InvalidMessage,  // malformed wire record or wrong chunk size
  TrustedEntity,   // attack plan references a non-attackable entity
  InvalidScenario,
  Unrecoverable,  // no culprit-free path left
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error carrying a 1-based character position in the source line.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position)
      : Error(ErrorCode::Syntax,
              message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace msiim
