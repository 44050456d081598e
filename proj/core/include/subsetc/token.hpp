#pragma once

#include <string>
#include <string_view>

#include "subsetc/diagnostics.hpp"

namespace subsetc {

enum class TokenKind {
    Fun,
    Var,
    Return,
    If,
    Else,
    Identifier,
    Number,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Semicolon,
    Assign,
    Minus,
    Tilde,
    Bang,
    Plus,
    Star,
    AndAnd,
    OrOr,
    EqEq,
    Gt,
    Lt,
    Ge,
    Le,
};

// Numeric code emitted in token dumps. The mapping is total and injective.
int token_id(TokenKind kind);

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Identifier;
    std::string lexeme;
    int id = 0;
    SourcePos pos;
};

}  // namespace subsetc
