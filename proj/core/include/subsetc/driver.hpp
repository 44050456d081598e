#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subsetc/codegen.hpp"
#include "subsetc/diagnostics.hpp"
#include "subsetc/features.hpp"

namespace subsetc {

// Process exit codes; the CLI maps CompileResult::exit_code straight
// through. Nothing else is ever returned.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitCompileError = 1,
    kExitUsage = 2,
    kExitToolchain = 3,
};

struct CompileOptions {
    std::filesystem::path input;
    std::filesystem::path out_dir = "build";
    bool dump_tokens = false;
    bool dump_ast = false;
    bool dump_asm = false;
    FeatureSet features = FeatureSet::all();
    TargetProfile profile = TargetProfile::host();
    bool interpret_only = false;
    bool keep_intermediates = false;
};

struct CompileResult {
    int exit_code = kExitSuccess;
    DiagnosticList diagnostics;
    std::vector<std::string> messages;  // stdout lines, e.g. "Written build/main.asm."
    std::vector<std::string> dumps;     // stdout dumps requested via flags
    std::string toolchain_output;       // captured tool output on exit code 3
    std::optional<std::int64_t> interpreted_value;
    std::filesystem::path asm_path;
    std::filesystem::path tokens_path;
    std::filesystem::path ast_path;
    std::filesystem::path object_path;
    std::filesystem::path executable_path;

    bool ok() const { return exit_code == kExitSuccess; }
};

// Runs scan -> parse -> analyze -> codegen on one source file. On success
// the assembly (and any requested dumps) land in `out_dir`, then the
// platform assembler and linker run when a toolchain for the profile is
// available. A failing compile writes nothing.
CompileResult compile(const CompileOptions& opts);

}  // namespace subsetc
