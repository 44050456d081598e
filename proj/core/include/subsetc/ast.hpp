#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subsetc/diagnostics.hpp"
#include "subsetc/features.hpp"

namespace subsetc {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Immediate {
    std::int64_t value = 0;
};

struct VarRef {
    std::string name;
};

struct AssignExpr {
    std::string name;
    ExprPtr value;
};

enum class UnaryOp { Neg, BitNot, LogNot };
enum class BinaryOp { Add, Sub, Mul, LogAnd, LogOr, Eq, Gt, Lt, Ge, Le };

std::string_view unary_op_lexeme(UnaryOp op);
std::string_view binary_op_lexeme(BinaryOp op);

ConstructKind construct_kind(UnaryOp op);
ConstructKind construct_kind(BinaryOp op);

struct UnaryExpr {
    UnaryOp op = UnaryOp::Neg;
    ExprPtr operand;
};

struct BinaryExpr {
    BinaryOp op = BinaryOp::Add;
    ExprPtr lhs;
    ExprPtr rhs;
};

using ExprNode = std::variant<Immediate, VarRef, AssignExpr, UnaryExpr, BinaryExpr>;

struct Expr {
    ExprNode node;
    SourcePos pos;
};

ExprPtr make_expr(ExprNode node, SourcePos pos);

struct Stmt;

struct Block {
    std::vector<Stmt> statements;
};

struct ReturnStmt {
    ExprPtr value;
};

struct DefineVarStmt {
    std::string name;
    ExprPtr init;
};

struct ExprStmt {
    ExprPtr expr;
};

struct IfStmt {
    ExprPtr condition;
    Block then_block;
    std::optional<Block> else_block;
};

struct Stmt {
    std::variant<ReturnStmt, DefineVarStmt, ExprStmt, IfStmt> node;
    SourcePos pos;
};

struct Function {
    std::string name;
    Block body;
    SourcePos pos;
};

// The base grammar allows zero or one function; if present it is `main`.
struct Program {
    std::optional<Function> function;
};

}  // namespace subsetc
