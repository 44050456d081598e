#pragma once

#include <span>
#include <string>
#include <vector>

#include "subsetc/ast.hpp"
#include "subsetc/diagnostics.hpp"
#include "subsetc/features.hpp"
#include "subsetc/token.hpp"

namespace subsetc {

struct ParseResult {
    Program program;
    DiagnosticList diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Recursive-descent parse of the cumulative grammar. Constructs that belong
// to a disabled subset produce a FEATURE_DISABLED diagnostic naming the
// stage they require. The first error aborts the unit.
ParseResult parse(std::span<const Token> tokens, FeatureSet features);

// Indented tree dump headed by `---AST---`. No trailing newline.
std::string render_ast(const Program& program);

}  // namespace subsetc
