#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subsetc/driver.hpp"
#include "subsetc/testrunner.hpp"

namespace {

using namespace subsetc;

std::vector<std::string> split_flags(const std::string& spec) {
    std::vector<std::string> flags;
    std::string current;
    for (char c : spec) {
        if (c == ',') {
            if (!current.empty()) flags.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) flags.push_back(std::move(current));
    return flags;
}

// Shared by all subcommands; returns false after printing a usage error.
bool apply_common(const std::string& features_spec, const std::string& target,
                  CompileOptions& opts) {
    FeatureResolution features = resolve_features(split_flags(features_spec));
    if (!features.ok()) {
        for (const Diagnostic& d : features.diagnostics) {
            std::cerr << format_diagnostic("subsetc", d) << '\n';
        }
        return false;
    }
    opts.features = features.features;
    if (!target.empty()) {
        auto profile = TargetProfile::from_name(target);
        if (!profile) {
            std::cerr << "error: unknown target '" << target
                      << "' (expected darwin or linux)\n";
            return false;
        }
        opts.profile = *profile;
    }
    return true;
}

int report(const CompileOptions& opts, const CompileResult& result) {
    for (const Diagnostic& d : result.diagnostics) {
        std::cerr << format_diagnostic(opts.input.string(), d) << '\n';
    }
    if (result.exit_code == kExitToolchain) {
        std::cerr << "error: toolchain invocation failed\n" << result.toolchain_output;
        if (!result.toolchain_output.ends_with('\n')) std::cerr << '\n';
    }
    if (result.exit_code == kExitUsage) {
        for (const std::string& message : result.messages) {
            std::cerr << "error: " << message << '\n';
        }
        return result.exit_code;
    }
    for (const std::string& dump : result.dumps) {
        std::cout << dump << '\n';
    }
    for (const std::string& message : result.messages) {
        std::cout << message << '\n';
    }
    if (result.interpreted_value) {
        std::cout << *result.interpreted_value << '\n';
    }
    return result.exit_code;
}

int run_build(const CompileOptions& opts) {
    return report(opts, compile(opts));
}

int run_suite(const std::filesystem::path& suite_dir, const CompileOptions& opts) {
    TestSummary summary = run_tests(suite_dir, opts);
    for (const CaseRecord& record : summary.records) {
        std::cout << (record.passed ? "[PASS] " : "[FAIL] ") << record.name << " ("
                  << record.detail << ")\n";
    }
    std::cout << summary.passed << " passed, " << summary.failed << " failed\n";
    return summary.all_passed() ? kExitSuccess : kExitCompileError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compiler for the dd language: six feature-gated subsets, "
                 "AArch64 output, reference interpreter, corpus test runner"};
    app.require_subcommand(1);

    std::string features_spec;
    std::string target;
    CompileOptions opts;

    auto* build = app.add_subcommand("build", "compile a .dd source file");
    std::string build_input;
    build->add_option("file", build_input, "source file (.dd)")->required();
    build->add_flag("--tokens", opts.dump_tokens, "write and print the token dump");
    build->add_flag("--ast", opts.dump_ast, "write and print the AST dump");
    build->add_flag("--asm", opts.dump_asm, "print the assembly listing");
    build->add_flag("--interpret", opts.interpret_only,
                    "evaluate with the reference interpreter instead of compiling");
    build->add_option("--features", features_spec,
                      "enabled subsets: all, none, or stage1..stage6");
    build->add_option("--target", target, "target profile: darwin or linux");
    build->add_option("-o,--out-dir", opts.out_dir, "output directory (default build/)");
    build->add_flag("--keep", opts.keep_intermediates, "keep intermediate object files");

    auto* interpret = app.add_subcommand("interpret", "evaluate a .dd source file");
    std::string interpret_input;
    interpret->add_option("file", interpret_input, "source file (.dd)")->required();
    interpret->add_option("--features", features_spec,
                          "enabled subsets: all, none, or stage1..stage6");

    auto* test = app.add_subcommand("test", "run a valid/invalid test suite");
    std::string suite_dir;
    test->add_option("suite", suite_dir, "directory with valid/ and invalid/ subdirs")
        ->required();
    test->add_option("--features", features_spec,
                     "enabled subsets: all, none, or stage1..stage6");
    test->add_option("--target", target, "target profile: darwin or linux");
    test->add_flag("--keep", opts.keep_intermediates,
                   "keep per-case temp directories");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        app.exit(e);
        return subsetc::kExitUsage;
    }

    if (!apply_common(features_spec, target, opts)) {
        return subsetc::kExitUsage;
    }

    if (build->parsed()) {
        opts.input = build_input;
        return run_build(opts);
    }
    if (interpret->parsed()) {
        opts.input = interpret_input;
        opts.interpret_only = true;
        return run_build(opts);
    }
    opts.input.clear();
    return run_suite(suite_dir, opts);
}
