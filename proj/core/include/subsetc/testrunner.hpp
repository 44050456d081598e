#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subsetc/driver.hpp"

namespace subsetc {

enum class CaseKind { Valid, Invalid };

// Sidecar `<case>.expect` contents: `exit <n>` for valid cases, `error
// <CODE>` for invalid ones.
struct Expectation {
    std::optional<int> exit_status;
    std::string diagnostic_code;
};

struct TestCase {
    std::filesystem::path source;
    CaseKind kind = CaseKind::Valid;
    std::optional<Expectation> expectation;
    std::string harness_error;  // nonempty when the case itself is malformed
};

struct CaseRecord {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TestSummary {
    int passed = 0;
    int failed = 0;
    std::vector<CaseRecord> records;

    bool all_passed() const { return failed == 0; }
};

// `.dd` sources under `<suite>/valid` and `<suite>/invalid`, sorted by path.
std::vector<TestCase> discover_cases(const std::filesystem::path& suite_dir);

// Runs one case per private temp directory: valid cases must compile and
// produce the expected exit status (through the real binary when the host
// can run it, otherwise through the interpreter); invalid cases must be
// rejected with the expected diagnostic code. Temp directories are removed
// afterwards unless opts.keep_intermediates is set. The summary is an
// order-insensitive reduction over the cases.
TestSummary run_cases(const std::vector<TestCase>& cases, const CompileOptions& opts);

TestSummary run_tests(const std::filesystem::path& suite_dir, const CompileOptions& opts);

}  // namespace subsetc
