#include "subsetc/ast.hpp"

namespace subsetc {

std::string_view unary_op_lexeme(UnaryOp op) {
    switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::BitNot: return "~";
    case UnaryOp::LogNot: return "!";
    }
    return "?";
}

std::string_view binary_op_lexeme(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::LogAnd: return "&&";
    case BinaryOp::LogOr: return "||";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Le: return "<=";
    }
    return "?";
}

ConstructKind construct_kind(UnaryOp op) {
    switch (op) {
    case UnaryOp::Neg: return ConstructKind::UnaryNeg;
    case UnaryOp::BitNot: return ConstructKind::UnaryBitNot;
    case UnaryOp::LogNot: return ConstructKind::UnaryLogNot;
    }
    return ConstructKind::UnaryNeg;
}

ConstructKind construct_kind(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return ConstructKind::BinaryAdd;
    case BinaryOp::Sub: return ConstructKind::BinarySub;
    case BinaryOp::Mul: return ConstructKind::BinaryMul;
    case BinaryOp::LogAnd: return ConstructKind::BinaryLogAnd;
    case BinaryOp::LogOr: return ConstructKind::BinaryLogOr;
    case BinaryOp::Eq: return ConstructKind::BinaryEq;
    case BinaryOp::Gt: return ConstructKind::BinaryGt;
    case BinaryOp::Lt: return ConstructKind::BinaryLt;
    case BinaryOp::Ge: return ConstructKind::BinaryGe;
    case BinaryOp::Le: return ConstructKind::BinaryLe;
    }
    return ConstructKind::BinaryAdd;
}

ExprPtr make_expr(ExprNode node, SourcePos pos) {
    return std::make_unique<Expr>(Expr{std::move(node), pos});
}

}  // namespace subsetc
