#include "subsetc/testrunner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "subsetc/interpreter.hpp"
#include "subsetc/toolchain.hpp"

namespace subsetc {

namespace {

std::optional<Expectation> parse_expectation(const std::filesystem::path& path,
                                             std::string* error) {
    std::ifstream in{path};
    if (!in) {
        *error = "missing expectation file " + path.filename().string();
        return std::nullopt;
    }
    std::string word;
    in >> word;
    Expectation expect;
    if (word == "exit") {
        int status = -1;
        if (!(in >> status) || status < 0 || status > 255) {
            *error = "malformed expectation in " + path.filename().string();
            return std::nullopt;
        }
        expect.exit_status = status;
        return expect;
    }
    if (word == "error") {
        if (!(in >> expect.diagnostic_code) || expect.diagnostic_code.empty()) {
            *error = "malformed expectation in " + path.filename().string();
            return std::nullopt;
        }
        return expect;
    }
    *error = "malformed expectation in " + path.filename().string();
    return std::nullopt;
}

std::vector<TestCase> discover_in(const std::filesystem::path& dir, CaseKind kind) {
    std::vector<TestCase> cases;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) return cases;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".dd") continue;
        TestCase test;
        test.source = entry.path();
        test.kind = kind;
        std::filesystem::path expect_path = entry.path();
        expect_path.replace_extension(".expect");
        test.expectation = parse_expectation(expect_path, &test.harness_error);
        if (test.expectation) {
            const bool wants_exit = test.expectation->exit_status.has_value();
            if (kind == CaseKind::Valid && !wants_exit) {
                test.harness_error = "valid case expects a diagnostic, not an exit status";
                test.expectation.reset();
            } else if (kind == CaseKind::Invalid && wants_exit) {
                test.harness_error = "invalid case expects an exit status, not a diagnostic";
                test.expectation.reset();
            }
        }
        cases.push_back(std::move(test));
    }
    std::sort(cases.begin(), cases.end(),
              [](const TestCase& a, const TestCase& b) { return a.source < b.source; });
    return cases;
}

std::filesystem::path fresh_temp_dir() {
    static std::atomic<unsigned> counter{0};
    std::ostringstream name;
    name << "subsetc-test-" << ::getpid() << "-" << counter.fetch_add(1);
    std::filesystem::path dir = std::filesystem::temp_directory_path() / name.str();
    std::filesystem::create_directories(dir);
    return dir;
}

std::string join_codes(const DiagnosticList& diagnostics) {
    std::string out;
    for (const Diagnostic& d : diagnostics) {
        if (!out.empty()) out += ", ";
        out += diag_code_name(d.code);
    }
    return out.empty() ? "none" : out;
}

CaseRecord run_one(const TestCase& test, const CompileOptions& base_opts) {
    CaseRecord record;
    record.name = test.source.filename().string();

    if (!test.harness_error.empty()) {
        record.passed = false;
        record.detail = "harness error: " + test.harness_error;
        return record;
    }

    CompileOptions opts = base_opts;
    opts.input = test.source;
    opts.out_dir = fresh_temp_dir();
    opts.interpret_only = false;
    opts.dump_tokens = opts.dump_ast = opts.dump_asm = false;

    CompileResult compiled = compile(opts);

    if (test.kind == CaseKind::Invalid) {
        if (compiled.exit_code != kExitCompileError) {
            record.passed = false;
            record.detail = "expected rejection with " + test.expectation->diagnostic_code +
                            ", but compile exited " + std::to_string(compiled.exit_code);
        } else {
            const bool matched = std::any_of(
                compiled.diagnostics.begin(), compiled.diagnostics.end(),
                [&](const Diagnostic& d) {
                    return diag_code_name(d.code) == test.expectation->diagnostic_code;
                });
            record.passed = matched;
            record.detail = matched
                ? "rejected, " + test.expectation->diagnostic_code
                : "expected " + test.expectation->diagnostic_code + ", got " +
                      join_codes(compiled.diagnostics);
        }
    } else {
        const int expected = *test.expectation->exit_status;
        if (compiled.exit_code != kExitSuccess) {
            record.passed = false;
            record.detail = "compile failed: " + join_codes(compiled.diagnostics);
            if (compiled.exit_code == kExitToolchain) {
                record.detail = "toolchain failed: " + compiled.toolchain_output;
            }
        } else {
            auto toolchain = detect_toolchain(opts.profile);
            if (toolchain && toolchain->can_execute() &&
                !compiled.executable_path.empty()) {
                CommandResult ran = run_executable(compiled.executable_path, *toolchain);
                record.passed = ran.exit_code == expected;
                record.detail = "compiled, exit " + std::to_string(ran.exit_code);
            } else {
                CompileOptions oracle = opts;
                oracle.interpret_only = true;
                CompileResult value = compile(oracle);
                const int actual = exit_status(value.interpreted_value.value_or(0));
                record.passed = value.ok() && actual == expected;
                record.detail = "interpreted, exit " + std::to_string(actual);
            }
            if (!record.passed) {
                record.detail += " (expected " + std::to_string(expected) + ")";
            }
        }
    }

    if (base_opts.keep_intermediates) {
        record.detail += " [" + opts.out_dir.string() + "]";
    } else {
        std::error_code ec;
        std::filesystem::remove_all(opts.out_dir, ec);
    }
    return record;
}

}  // namespace

std::vector<TestCase> discover_cases(const std::filesystem::path& suite_dir) {
    std::vector<TestCase> cases = discover_in(suite_dir / "valid", CaseKind::Valid);
    std::vector<TestCase> invalid = discover_in(suite_dir / "invalid", CaseKind::Invalid);
    cases.insert(cases.end(), std::make_move_iterator(invalid.begin()),
                 std::make_move_iterator(invalid.end()));
    return cases;
}

TestSummary run_cases(const std::vector<TestCase>& cases, const CompileOptions& opts) {
    TestSummary summary;
    for (const TestCase& test : cases) {
        CaseRecord record = run_one(test, opts);
        record.passed ? ++summary.passed : ++summary.failed;
        summary.records.push_back(std::move(record));
    }
    std::sort(summary.records.begin(), summary.records.end(),
              [](const CaseRecord& a, const CaseRecord& b) { return a.name < b.name; });
    return summary;
}

TestSummary run_tests(const std::filesystem::path& suite_dir, const CompileOptions& opts) {
    return run_cases(discover_cases(suite_dir), opts);
}

}  // namespace subsetc
