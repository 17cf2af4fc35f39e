#ifndef PREFCORE_ERRORS_HPP
#define PREFCORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prefcore {

// Every failure the library can signal. Codes are part of the public contract:
// callers (and the CLI's exit-code mapping) dispatch on them.
enum class ErrorCode {
    // model-core
    UnknownVariable,     // name lookup failed
    UnknownValue,        // value not in the variable's domain
    UnboundVariable,     // projection/read of a variable the assignment does not bind
    ConflictingBinding,  // merge/strengthen would rebind a variable to a different value
    // cpnet
    UnknownArc,              // classify_arc on a non-edge
    PartialRowUnsupported,   // operation requires Total rows but met a Partial one
    NotTotallyDependent,     // operation requires a totally dependent net
    EqualOutcomes,           // strict-order query on two equal outcomes
    NotAncestorClosed,       // restrict() context does not close under graph ancestors
    CyclicNetwork,           // CPT parent structure has a directed cycle
    // cprnet
    AriNotOnNop,     // an ARI names a pair that is not an uncovered NOP
    NopUncovered,    // some NOP has no ARI
    CyclicCprNet,    // combined (arc + ARI) graph has a cycle
    // lptree
    LabelNotPartition,  // a node's child labels do not partition its domain
    VariableRepeated,   // a variable occurs twice on a root-to-leaf path
    PathIncomplete,     // some root-to-leaf path misses a variable
    BadCptScope,        // a node's CPT scope is not a subset of its tree ancestors
    // shared caps / search
    TooManyOutcomes,   // enumeration would exceed the outcome cap
    BudgetExhausted,   // dominance search exceeded its node budget
    ModelMismatch,     // model and constraint set built over different variable sets
    // io / generator
    ParseError,     // document syntax error (carries line/column)
    InvalidModel,   // structural validation failure without a more specific code
    InvalidConfig,  // generator configuration out of range
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    Error(ErrorCode code, std::string message, int line, int column)
        : std::runtime_error(std::string(error_code_name(code)) + " at line " +
                             std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + message),
          code_(code), line_(line), column_(column) {}

    ErrorCode code() const { return code_; }
    // Only meaningful for ParseError; 0 otherwise.
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    ErrorCode code_;
    int line_ = 0;
    int column_ = 0;
};

}  // namespace prefcore

#endif
