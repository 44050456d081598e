#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subsetc/ast.hpp"
#include "subsetc/diagnostics.hpp"

namespace subsetc {

// Stack slot per variable or spill. sp never moves, so slots must keep the
// 16-byte alignment AArch64 demands of sp-relative accesses.
inline constexpr int kWordSize = 16;

// Largest literal that fits the single-instruction `mov Xd, #imm` emission.
inline constexpr std::int64_t kMaxImmediate = 65535;

enum class TargetOs { Darwin, Linux };

// OS-specific emission parameters: entry symbol, alignment directive and
// the process-exit instruction sequence.
struct TargetProfile {
    TargetOs os = TargetOs::Linux;
    std::string name;
    std::string entry_symbol;
    std::string align_directive;
    std::vector<std::pair<std::string, std::string>> exit_sequence;

    static TargetProfile darwin();
    static TargetProfile linux_gnu();
    static TargetProfile host();
    static std::optional<TargetProfile> from_name(std::string_view name);
};

// Name -> stack byte offset, one map per live scope. Lookup walks
// inner to outer.
class OffsetEnv {
public:
    void push_scope();
    void pop_scope();
    void bind(const std::string& name, int offset);
    std::optional<int> lookup(const std::string& name) const;

private:
    std::vector<std::vector<std::pair<std::string, int>>> scopes_;
};

// Mutable state for one compilation unit. Confined to a single compilation;
// distinct contexts share nothing.
struct CodegenContext {
    explicit CodegenContext(TargetProfile p);

    TargetProfile profile;
    OffsetEnv env;
    int stack_offset = -kWordSize;  // next free slot; always a negative multiple of kWordSize
    int label_counter = 0;
    std::string out;
};

// Returns `.L<prefix>_<n>` with n taken from the context counter; never
// repeats within one compilation unit.
std::string fresh_local_label(std::string_view prefix, CodegenContext& ctx);

// Emits code leaving the expression value in X0. Binary operands spill the
// lhs to the current slot while the rhs evaluates, then reload it into X1.
// Expects immediates validated and variables bound; both hold after a
// clean analyze().
void lower_expression(const Expr& expr, CodegenContext& ctx);

void lower_statement(const Stmt& stmt, CodegenContext& ctx);

struct GenResult {
    std::string assembly;
    DiagnosticList diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Lowers a checked program to assembly text for the given profile.
// Deterministic; `return` emits the exit sequence inline, and a body that
// can fall off the end exits with whatever X0 last held.
GenResult generate(const Program& program, const TargetProfile& profile);

}  // namespace subsetc
