#ifndef PREFCORE_MODEL_IO_HPP
#define PREFCORE_MODEL_IO_HPP

#include <optional>
#include <string>

#include "prefcore/cprnet.hpp"
#include "prefcore/csp.hpp"
#include "prefcore/lptree.hpp"

namespace prefcore {

enum class ModelKind { Cpnet, Cprnet, Lptree };

const char* model_kind_name(ModelKind kind);

// A parsed model file: exactly one preference model, plus the optional
// hard-constraint section. Move-only (LP-trees own their nodes).
struct ModelDocument {
    ModelKind kind = ModelKind::Cpnet;
    VariableSetPtr vars;
    std::optional<CpNet> cpnet;
    std::optional<CprNet> cprnet;
    std::optional<LpTree> lptree;
    std::optional<ConstraintSet> constraints;  // present iff the file has a
                                               // constraints section (possibly empty)
};

// Parses and validates a model document (see docs/format.md). Syntax problems
// raise ParseError with line and column; the module validators' structural
// errors propagate unchanged.
ModelDocument parse_model(const std::string& text);

// Canonical rendering: declaration order throughout, sugar constraints
// expanded to `table` form, LP-tree nodes in pre-order. parse(print(doc)) is
// structurally equal to doc.
std::string print_model(const ModelDocument& doc);

bool document_equal(const ModelDocument& a, const ModelDocument& b);

}  // namespace prefcore

#endif
