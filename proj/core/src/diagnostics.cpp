#include "subsetc/diagnostics.hpp"

#include <sstream>

namespace subsetc {

std::string_view diag_code_name(DiagCode code) {
    switch (code) {
    case DiagCode::ParseError: return "PARSE_ERROR";
    case DiagCode::UndeclaredVar: return "UNDECLARED_VAR";
    case DiagCode::RedeclaredVar: return "REDECLARED_VAR";
    case DiagCode::FeatureDisabled: return "FEATURE_DISABLED";
    case DiagCode::ImmediateRange: return "IMMEDIATE_RANGE";
    case DiagCode::UnknownFeature: return "UNKNOWN_FEATURE";
    }
    return "UNKNOWN";
}

Diagnostic make_diag(DiagCode code, std::string message, SourcePos pos) {
    return Diagnostic{code, std::move(message), pos};
}

std::string format_diagnostic(std::string_view file, const Diagnostic& d) {
    std::ostringstream os;
    if (d.pos.line > 0) {
        os << file << ':' << d.pos.line << ':' << d.pos.column << ": ";
    }
    os << "error[" << diag_code_name(d.code) << "]: " << d.message;
    return os.str();
}

}  // namespace subsetc
