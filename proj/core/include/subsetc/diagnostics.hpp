#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace subsetc {

// 1-based position in the source text. {0, 0} marks diagnostics that have
// no source location (e.g. bad CLI flags).
struct SourcePos {
    int line = 0;
    int column = 0;

    bool operator==(const SourcePos&) const = default;
};

enum class DiagCode {
    ParseError,
    UndeclaredVar,
    RedeclaredVar,
    FeatureDisabled,
    ImmediateRange,
    UnknownFeature,
};

// Stable machine tag for test matching, e.g. "PARSE_ERROR".
std::string_view diag_code_name(DiagCode code);

struct Diagnostic {
    DiagCode code = DiagCode::ParseError;
    std::string message;
    SourcePos pos;
};

Diagnostic make_diag(DiagCode code, std::string message, SourcePos pos);

// Renders "<file>:<line>:<col>: error[<CODE>]: <message>". The position
// prefix is dropped for diagnostics without a source location.
std::string format_diagnostic(std::string_view file, const Diagnostic& d);

using DiagnosticList = std::vector<Diagnostic>;

}  // namespace subsetc
