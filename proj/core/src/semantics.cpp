#include "subsetc/semantics.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace subsetc {

namespace {

class Analyzer {
public:
    explicit Analyzer(FeatureSet features) : features_(features) {}

    DiagnosticList run(const Program& program) {
        if (program.function) {
            check_block(program.function->body);
        }
        return std::move(diagnostics_);
    }

private:
    void report(DiagCode code, std::string message, SourcePos pos) {
        diagnostics_.push_back(make_diag(code, std::move(message), pos));
    }

    void gate(ConstructKind construct, std::string_view what, SourcePos pos) {
        if (features_.allows(construct)) return;
        Stage stage = required_feature(construct);
        report(DiagCode::FeatureDisabled,
               std::string(what) + " requires feature " +
                   std::string(stage_flag_name(stage)) + " (" +
                   std::string(stage_label(stage)) + ")",
               pos);
    }

    bool declared(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            if (it->contains(name)) return true;
        }
        return false;
    }

    void check_use(const std::string& name, SourcePos pos) {
        if (!declared(name)) {
            report(DiagCode::UndeclaredVar,
                   "use of undeclared variable '" + name + "'", pos);
        }
    }

    void check_expr(const Expr& expr) {
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Immediate>) {
                    gate(ConstructKind::NumberLiteral, "integer literal", expr.pos);
                } else if constexpr (std::is_same_v<T, VarRef>) {
                    gate(ConstructKind::VariableRef, "variable reference", expr.pos);
                    check_use(node.name, expr.pos);
                } else if constexpr (std::is_same_v<T, AssignExpr>) {
                    gate(ConstructKind::Assignment, "assignment", expr.pos);
                    check_expr(*node.value);
                    check_use(node.name, expr.pos);
                } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                    gate(construct_kind(node.op), "unary operator", expr.pos);
                    check_expr(*node.operand);
                } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                    gate(construct_kind(node.op), "binary operator", expr.pos);
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
                    gate(ConstructKind::ReturnStatement, "return statement", stmt.pos);
                    check_expr(*node.value);
                } else if constexpr (std::is_same_v<T, DefineVarStmt>) {
                    gate(ConstructKind::DefineVarStatement, "variable declaration",
                         stmt.pos);
                    // the name is not visible inside its own initializer
                    check_expr(*node.init);
                    if (declared(node.name)) {
                        report(DiagCode::RedeclaredVar,
                               "redeclaration of variable '" + node.name + "'",
                               stmt.pos);
                    } else {
                        scopes_.back().emplace(node.name, stmt.pos);
                    }
                } else if constexpr (std::is_same_v<T, ExprStmt>) {
                    gate(ConstructKind::ExprStatement, "expression statement", stmt.pos);
                    check_expr(*node.expr);
                } else if constexpr (std::is_same_v<T, IfStmt>) {
                    gate(ConstructKind::IfStatement, "if statement", stmt.pos);
                    check_expr(*node.condition);
                    check_block(node.then_block);
                    if (node.else_block) check_block(*node.else_block);
                }
            },
            stmt.node);
    }

    void check_block(const Block& block) {
        scopes_.emplace_back();
        for (const Stmt& stmt : block.statements) check_stmt(stmt);
        scopes_.pop_back();
    }

    FeatureSet features_;
    std::vector<std::unordered_map<std::string, SourcePos>> scopes_;
    DiagnosticList diagnostics_;
};

}  // namespace

DiagnosticList analyze(const Program& program, FeatureSet features) {
    return Analyzer{features}.run(program);
}

}  // namespace subsetc
