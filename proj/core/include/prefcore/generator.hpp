#ifndef PREFCORE_GENERATOR_HPP
#define PREFCORE_GENERATOR_HPP

#include <cstdint>

#include "prefcore/model_io.hpp"

namespace prefcore {

// Parameters for random model generation. Generation is a pure function of
// this struct: the same config yields a byte-identical printed document on
// every platform.
struct GeneratorConfig {
    ModelKind kind = ModelKind::Cpnet;
    int var_count = 4;       // 1..26 (variables are named A, B, C, ...)
    int domain_size = 2;     // 2..9  (values of X are x1, x2, ...)
    int max_parents = 2;     // cap on CPT parents / importance-tree scope
    int constraint_count = 0;
    double tightness = 0.3;  // fraction of each constraint's tuples forbidden
    std::uint64_t seed = 0;
};

// Generates a random valid model of the requested kind, plus a constraint
// section when constraint_count > 0. For cprnet the tables are built so that
// every arc is totally dependent, and importance statements cover exactly the
// variable pairs without an arc, oriented consistently, so the result always
// validates. Throws InvalidConfig for out-of-range parameters or an
// importance tree that would exceed 65536 nodes.
ModelDocument generate(const GeneratorConfig& cfg);

}  // namespace prefcore

#endif
