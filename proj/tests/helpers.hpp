#ifndef PREFCORE_TESTS_HELPERS_HPP
#define PREFCORE_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "prefcore/model_io.hpp"

// Asserts that `expr` throws prefcore::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                                     \
    do {                                                                     \
        bool thrown_ = false;                                                \
        try {                                                                \
            (void)(expr);                                                    \
        } catch (const prefcore::Error& e_) {                                \
            thrown_ = true;                                                  \
            CHECK_MESSAGE(e_.code() == prefcore::ErrorCode::expected,        \
                          "wrong error code: ", e_.what());                  \
        }                                                                    \
        CHECK_MESSAGE(thrown_, "expected " #expected " from " #expr);        \
    } while (0)

namespace prefcore::testing {

inline std::string read_fixture(const std::string& name) {
    std::string path = std::string(FIXTURE_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open fixture ", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ModelDocument load_fixture(const std::string& name) {
    return parse_model(read_fixture(name));
}

// Builds a full outcome from one value name per variable, declaration order.
inline Outcome outcome_of(const VariableSet& vars,
                          const std::vector<std::string>& values) {
    REQUIRE(static_cast<int>(values.size()) == vars.size());
    Outcome o(values.size());
    for (int i = 0; i < vars.size(); ++i)
        o[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(vars.value_index(i, values[i]));
    return o;
}

// Renders a total order as one formatted outcome per line, for whole-sequence
// comparisons against pinned orders.
inline std::vector<std::string> formatted(const VariableSet& vars,
                                          const std::vector<Outcome>& order) {
    std::vector<std::string> lines;
    lines.reserve(order.size());
    for (const Outcome& o : order) lines.push_back(format_outcome(vars, o));
    return lines;
}

}  // namespace prefcore::testing

#endif
