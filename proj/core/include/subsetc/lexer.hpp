#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subsetc/diagnostics.hpp"
#include "subsetc/features.hpp"
#include "subsetc/token.hpp"

namespace subsetc {

struct LexResult {
    std::vector<Token> tokens;
    DiagnosticList diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Converts source text into the token stream. Lexing is independent of the
// enabled features: tokens from disabled subsets still tokenize, gating is
// the parser's job. Stops at the first lexical error.
LexResult tokenize(std::string_view source, FeatureSet features);

// One line per token, `<lexeme><TAB>Token: <id>`, then a blank line and a
// `Total tokens: <count>` trailer. No trailing newline.
std::string render_token_dump(const std::vector<Token>& tokens);

}  // namespace subsetc
