#pragma once

#include "subsetc/ast.hpp"
#include "subsetc/diagnostics.hpp"
#include "subsetc/features.hpp"

namespace subsetc {

// Pre-codegen checks on a parsed program: every variable use must be
// preceded by its declaration, no name may be declared twice in a visible
// scope, and every construct must belong to an enabled subset. if/else
// bodies open child scopes; their variables die at block end.
DiagnosticList analyze(const Program& program, FeatureSet features);

}  // namespace subsetc
