#include "subsetc/codegen.hpp"

#include <sstream>
#include <stdexcept>

namespace subsetc {

namespace {

// `    mov     X0, #9` — 4-space indent, mnemonic padded to one column.
void emit_instr(std::string& out, std::string_view mnemonic, std::string_view operands) {
    out += "    ";
    out += mnemonic;
    for (std::size_t i = mnemonic.size(); i < 7; ++i) out += ' ';
    out += ' ';
    out += operands;
    out += '\n';
}

void emit_label(std::string& out, std::string_view name) {
    out += name;
    out += ":\n";
}

void emit_directive(std::string& out, std::string_view text) {
    out += text;
    out += '\n';
}

void emit_blank(std::string& out) {
    out += '\n';
}

void emit_exit_sequence(CodegenContext& ctx) {
    for (const auto& [mnemonic, operands] : ctx.profile.exit_sequence) {
        emit_instr(ctx.out, mnemonic, operands);
    }
}

std::string sp_offset(int offset) {
    return "[sp, #" + std::to_string(offset) + "]";
}

int bound_offset(const CodegenContext& ctx, const std::string& name) {
    if (auto offset = ctx.env.lookup(name)) return *offset;
    throw std::logic_error("codegen: no stack slot bound for '" + name + "'");
}

void lower_block(const Block& block, CodegenContext& ctx);

// cset condition for a comparison with lhs in X1 and rhs in X0.
std::string_view compare_condition(BinaryOp op) {
    switch (op) {
    case BinaryOp::Eq: return "eq";
    case BinaryOp::Gt: return "gt";
    case BinaryOp::Lt: return "lt";
    case BinaryOp::Ge: return "ge";
    case BinaryOp::Le: return "le";
    default: throw std::logic_error("codegen: not a comparison");
    }
}

void lower_binary_tail(BinaryOp op, CodegenContext& ctx) {
    switch (op) {
    case BinaryOp::Add:
        emit_instr(ctx.out, "add", "X0, X0, X1");
        break;
    case BinaryOp::Sub:
        // lhs - rhs with the lhs reloaded into X1
        emit_instr(ctx.out, "sub", "X0, X1, X0");
        break;
    case BinaryOp::Mul:
        emit_instr(ctx.out, "mul", "X0, X0, X1");
        break;
    case BinaryOp::Eq:
    case BinaryOp::Gt:
    case BinaryOp::Lt:
    case BinaryOp::Ge:
    case BinaryOp::Le:
        emit_instr(ctx.out, "cmp", "X1, X0");
        emit_instr(ctx.out, "cset", std::string("X0, ") + std::string(compare_condition(op)));
        break;
    case BinaryOp::LogAnd:
    case BinaryOp::LogOr:
        // no short-circuit: both operands are already evaluated; normalize
        // each to 0/1 and combine bitwise
        emit_instr(ctx.out, "cmp", "X0, #0");
        emit_instr(ctx.out, "cset", "X0, ne");
        emit_instr(ctx.out, "cmp", "X1, #0");
        emit_instr(ctx.out, "cset", "X1, ne");
        emit_instr(ctx.out, op == BinaryOp::LogAnd ? "and" : "orr", "X0, X0, X1");
        break;
    }
}

struct ImmediateCheck {
    std::optional<Diagnostic> first_error;

    void check_expr(const Expr& expr) {
        if (first_error) return;
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Immediate>) {
                    if (node.value < 0 || node.value > kMaxImmediate) {
                        first_error = make_diag(
                            DiagCode::ImmediateRange,
                            "immediate " + std::to_string(node.value) +
                                " out of range 0.." + std::to_string(kMaxImmediate),
                            expr.pos);
                    }
                } else if constexpr (std::is_same_v<T, AssignExpr>) {
                    check_expr(*node.value);
                } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                    check_expr(*node.operand);
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    check_expr(*node.lhs);
                    check_expr(*node.rhs);
                }
            },
            expr.node);
    }

    void check_stmt(const Stmt& stmt) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ReturnStmt>) {
                    check_expr(*node.value);
                } else if constexpr (std::is_same_v<T, DefineVarStmt>) {
                    check_expr(*node.init);
                } else if constexpr (std::is_same_v<T, ExprStmt>) {
                    check_expr(*node.expr);
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    check_expr(*node.condition);
                    check_block(node.then_block);
                    if (node.else_block) check_block(*node.else_block);
                }
            },
            stmt.node);
    }

    void check_block(const Block& block) {
        for (const Stmt& stmt : block.statements) check_stmt(stmt);
    }
};

}  // namespace

TargetProfile TargetProfile::darwin() {
    return TargetProfile{TargetOs::Darwin,
                         "darwin",
                         "_main",
                         ".align 4",
                         {{"mov", "x16, #1"}, {"svc", "#0xFFFF"}}};
}

TargetProfile TargetProfile::linux_gnu() {
    return TargetProfile{TargetOs::Linux,
                         "linux",
                         "main",
                         ".align 2",
                         {{"mov", "x8, #93"}, {"svc", "#0"}}};
}

TargetProfile TargetProfile::host() {
#if defined(__APPLE__)
    return darwin();
#else
    return linux_gnu();
#endif
}

std::optional<TargetProfile> TargetProfile::from_name(std::string_view name) {
    if (name == "darwin") return darwin();
    if (name == "linux") return linux_gnu();
    return std::nullopt;
}

void OffsetEnv::push_scope() {
    scopes_.emplace_back();
}

void OffsetEnv::pop_scope() {
    scopes_.pop_back();
}

void OffsetEnv::bind(const std::string& name, int offset) {
    scopes_.back().emplace_back(name, offset);
}

std::optional<int> OffsetEnv::lookup(const std::string& name) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
        for (auto binding = scope->rbegin(); binding != scope->rend(); ++binding) {
            if (binding->first == name) return binding->second;
        }
    }
    return std::nullopt;
}

CodegenContext::CodegenContext(TargetProfile p) : profile(std::move(p)) {
    env.push_scope();
}

std::string fresh_local_label(std::string_view prefix, CodegenContext& ctx) {
    std::string label = ".L" + std::string(prefix) + "_" + std::to_string(ctx.label_counter);
    ++ctx.label_counter;
    return label;
}

void lower_expression(const Expr& expr, CodegenContext& ctx) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Immediate>) {
                emit_instr(ctx.out, "mov", "X0, #" + std::to_string(node.value));
            } else if constexpr (std::is_same_v<T, VarRef>) {
                emit_instr(ctx.out, "ldr", "X0, " + sp_offset(bound_offset(ctx, node.name)));
            } else if constexpr (std::is_same_v<T, AssignExpr>) {
                lower_expression(*node.value, ctx);
                emit_instr(ctx.out, "str", "X0, " + sp_offset(bound_offset(ctx, node.name)));
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                lower_expression(*node.operand, ctx);
                switch (node.op) {
                case UnaryOp::Neg:
                    emit_instr(ctx.out, "neg", "X0, X0");
                    break;
                case UnaryOp::BitNot:
                    emit_instr(ctx.out, "mvn", "X0, X0");
                    break;
                case UnaryOp::LogNot:
                    emit_instr(ctx.out, "cmp", "X0, #0");
                    emit_instr(ctx.out, "cset", "X0, eq");
                    break;
                }
            } else {
                static_assert(std::is_same_v<T, BinaryExpr>);
                // evaluate lhs, park it in the current free slot while the
                // rhs runs, then reload it into X1
                lower_expression(*node.lhs, ctx);
                const int spill = ctx.stack_offset;
                emit_instr(ctx.out, "str", "X0, " + sp_offset(spill));
                ctx.stack_offset -= kWordSize;
                lower_expression(*node.rhs, ctx);
                ctx.stack_offset += kWordSize;
                emit_instr(ctx.out, "ldr", "X1, " + sp_offset(spill));
                lower_binary_tail(node.op, ctx);
            }
        },
        expr.node);
}

void lower_statement(const Stmt& stmt, CodegenContext& ctx) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ReturnStmt>) {
                lower_expression(*node.value, ctx);
                emit_blank(ctx.out);
                emit_exit_sequence(ctx);
            } else if constexpr (std::is_same_v<T, DefineVarStmt>) {
                const int offset = ctx.stack_offset;
                ctx.env.bind(node.name, offset);
                ctx.stack_offset -= kWordSize;
                lower_expression(*node.init, ctx);
                emit_instr(ctx.out, "str", "X0, " + sp_offset(offset));
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                lower_expression(*node.expr, ctx);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
                lower_expression(*node.condition, ctx);
                std::string label_end = fresh_local_label("if_end", ctx);
                std::string label_else = fresh_local_label("if_else", ctx);
                emit_instr(ctx.out, "cmp", "x0, #0");
                emit_instr(ctx.out, "beq", label_else);
                lower_block(node.then_block, ctx);
                emit_instr(ctx.out, "b", label_end);
                emit_label(ctx.out, label_else);
                if (node.else_block) {
                    lower_block(*node.else_block, ctx);
                }
                emit_label(ctx.out, label_end);
            }
        },
        stmt.node);
}

namespace {

// Child scope: bindings and slots reserved inside die at block end.
void lower_block(const Block& block, CodegenContext& ctx) {
    ctx.env.push_scope();
    const int saved_offset = ctx.stack_offset;
    for (const Stmt& stmt : block.statements) {
        lower_statement(stmt, ctx);
        emit_blank(ctx.out);
    }
    ctx.stack_offset = saved_offset;
    ctx.env.pop_scope();
}

bool ends_with_return(const Block& block) {
    if (block.statements.empty()) return false;
    return std::holds_alternative<ReturnStmt>(block.statements.back().node);
}

}  // namespace

GenResult generate(const Program& program, const TargetProfile& profile) {
    GenResult result;
    ImmediateCheck check;
    if (program.function) check.check_block(program.function->body);
    if (check.first_error) {
        result.diagnostics.push_back(*check.first_error);
        return result;
    }

    CodegenContext ctx{profile};
    emit_directive(ctx.out, ".global " + profile.entry_symbol);
    emit_directive(ctx.out, profile.align_directive);
    emit_blank(ctx.out);
    emit_label(ctx.out, profile.entry_symbol);

    const bool has_body = program.function && !program.function->body.statements.empty();
    if (has_body) {
        lower_block(program.function->body, ctx);
    } else {
        emit_instr(ctx.out, "mov", "X0, #0");
    }
    if (!has_body || !ends_with_return(program.function->body)) {
        if (!ctx.out.ends_with("\n\n")) emit_blank(ctx.out);
        emit_exit_sequence(ctx);
    }

    // normalize the tail to a single final newline
    while (ctx.out.ends_with("\n\n")) ctx.out.pop_back();
    result.assembly = std::move(ctx.out);
    return result;
}

}  // namespace subsetc
