#include "subsetc/interpreter.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace subsetc {

namespace {

// All arithmetic runs on uint64 and reinterprets, so overflow wraps the way
// X registers do instead of tripping signed-overflow UB.
std::int64_t wrap(std::uint64_t v) { return static_cast<std::int64_t>(v); }
std::uint64_t bits(std::int64_t v) { return static_cast<std::uint64_t>(v); }

class Evaluator {
public:
    std::int64_t run(const Program& program) {
        if (!program.function) return 0;
        exec_block(program.function->body);
        return returned_.value_or(last_);
    }

private:
    std::int64_t* find(const std::string& name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            if (auto slot = it->find(name); slot != it->end()) return &slot->second;
        }
        return nullptr;
    }

    std::int64_t eval(const Expr& expr) {
        return std::visit(
            [&](const auto& node) -> std::int64_t {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Immediate>) {
                    return node.value;
                } else if constexpr (std::is_same_v<T, VarRef>) {
                    if (std::int64_t* slot = find(node.name)) return *slot;
                    throw std::logic_error("interpret: unbound variable " + node.name);
                } else if constexpr (std::is_same_v<T, AssignExpr>) {
                    std::int64_t value = eval(*node.value);
                    if (std::int64_t* slot = find(node.name)) {
                        *slot = value;
                        return value;
                    }
                    throw std::logic_error("interpret: unbound variable " + node.name);
                } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                    std::int64_t v = eval(*node.operand);
                    switch (node.op) {
                    case UnaryOp::Neg: return wrap(0 - bits(v));
                    case UnaryOp::BitNot: return wrap(~bits(v));
                    case UnaryOp::LogNot: return v == 0 ? 1 : 0;
                    }
                    return 0;
                } else {
                    static_assert(std::is_same_v<T, BinaryExpr>);
                    // both operands always evaluate; && and || do not
                    // short-circuit, matching the straight-line lowering
                    std::int64_t l = eval(*node.lhs);
                    std::int64_t r = eval(*node.rhs);
                    switch (node.op) {
                    case BinaryOp::Add: return wrap(bits(l) + bits(r));
                    case BinaryOp::Sub: return wrap(bits(l) - bits(r));
                    case BinaryOp::Mul: return wrap(bits(l) * bits(r));
                    case BinaryOp::LogAnd: return (l != 0 && r != 0) ? 1 : 0;
                    case BinaryOp::LogOr: return (l != 0 || r != 0) ? 1 : 0;
                    case BinaryOp::Eq: return l == r ? 1 : 0;
                    case BinaryOp::Gt: return l > r ? 1 : 0;
                    case BinaryOp::Lt: return l < r ? 1 : 0;
                    case BinaryOp::Ge: return l >= r ? 1 : 0;
                    case BinaryOp::Le: return l <= r ? 1 : 0;
                    }
                    return 0;
                }
            },
            expr.node);
    }

    void exec_stmt(const Stmt& stmt) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, ReturnStmt>) {
                    returned_ = eval(*node.value);
                } else if constexpr (std::is_same_v<T, DefineVarStmt>) {
                    std::int64_t value = eval(*node.init);
                    scopes_.back().emplace(node.name, value);
                    last_ = value;
                } else if constexpr (std::is_same_v<T, ExprStmt>) {
                    last_ = eval(*node.expr);
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    std::int64_t condition = eval(*node.condition);
                    last_ = condition;
                    if (condition != 0) {
                        exec_block(node.then_block);
                    } else if (node.else_block) {
                        exec_block(*node.else_block);
                    }
                }
            },
            stmt.node);
    }

    void exec_block(const Block& block) {
        scopes_.emplace_back();
        for (const Stmt& stmt : block.statements) {
            exec_stmt(stmt);
            if (returned_) break;
        }
        scopes_.pop_back();
    }

    std::vector<std::unordered_map<std::string, std::int64_t>> scopes_;
    std::int64_t last_ = 0;
    std::optional<std::int64_t> returned_;
};

}  // namespace

std::int64_t interpret(const Program& program) {
    return Evaluator{}.run(program);
}

}  // namespace subsetc
