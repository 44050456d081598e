#include "subsetc/token.hpp"

namespace subsetc {

// IDs 258..266, 272 and 274 are fixed by the token dump format; the
// remaining operators and keywords take the fresh range 275..288. The
// gaps 267..271 and 273 are deliberately left unassigned.
int token_id(TokenKind kind) {
    switch (kind) {
    case TokenKind::Fun: return 258;
    case TokenKind::Var: return 259;
    case TokenKind::Identifier: return 260;
    case TokenKind::Return: return 261;
    case TokenKind::Number: return 262;
    case TokenKind::LParen: return 263;
    case TokenKind::RParen: return 264;
    case TokenKind::LBrace: return 265;
    case TokenKind::RBrace: return 266;
    case TokenKind::Semicolon: return 272;
    case TokenKind::Assign: return 274;
    case TokenKind::Minus: return 275;
    case TokenKind::Tilde: return 276;
    case TokenKind::Bang: return 277;
    case TokenKind::Plus: return 278;
    case TokenKind::Star: return 279;
    case TokenKind::AndAnd: return 280;
    case TokenKind::OrOr: return 281;
    case TokenKind::EqEq: return 282;
    case TokenKind::Gt: return 283;
    case TokenKind::Lt: return 284;
    case TokenKind::Ge: return 285;
    case TokenKind::Le: return 286;
    case TokenKind::If: return 287;
    case TokenKind::Else: return 288;
    }
    return 0;
}

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Fun: return "FUN";
    case TokenKind::Var: return "VAR";
    case TokenKind::Return: return "RETURN";
    case TokenKind::If: return "IF";
    case TokenKind::Else: return "ELSE";
    case TokenKind::Identifier: return "IDENTIFIER";
    case TokenKind::Number: return "NUMBER";
    case TokenKind::LParen: return "LPAREN";
    case TokenKind::RParen: return "RPAREN";
    case TokenKind::LBrace: return "LBRACE";
    case TokenKind::RBrace: return "RBRACE";
    case TokenKind::Semicolon: return "SEMICOLON";
    case TokenKind::Assign: return "ASSIGN";
    case TokenKind::Minus: return "MINUS";
    case TokenKind::Tilde: return "TILDE";
    case TokenKind::Bang: return "BANG";
    case TokenKind::Plus: return "PLUS";
    case TokenKind::Star: return "STAR";
    case TokenKind::AndAnd: return "AND_AND";
    case TokenKind::OrOr: return "OR_OR";
    case TokenKind::EqEq: return "EQ_EQ";
    case TokenKind::Gt: return "GT";
    case TokenKind::Lt: return "LT";
    case TokenKind::Ge: return "GE";
    case TokenKind::Le: return "LE";
    }
    return "UNKNOWN";
}

}  // namespace subsetc
