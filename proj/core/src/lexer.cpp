#include "subsetc/lexer.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace subsetc {

namespace {

const std::unordered_map<std::string_view, TokenKind>& keyword_table() {
    static const std::unordered_map<std::string_view, TokenKind> table = {
        {"fun", TokenKind::Fun},       {"var", TokenKind::Var},
        {"return", TokenKind::Return}, {"if", TokenKind::If},
        {"else", TokenKind::Else},
    };
    return table;
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Scanner {
public:
    Scanner(std::string_view source) : src_(source) {}

    LexResult run() {
        LexResult result;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance(1);
                continue;
            }
            SourcePos start{line_, column_};
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (!scan_number(start, result)) return result;
                continue;
            }
            if (is_ident_start(c)) {
                scan_word(start, result);
                continue;
            }
            if (!scan_operator(start, result)) return result;
        }
        return result;
    }

private:
    void advance(std::size_t n) {
        pos_ += n;
        column_ += static_cast<int>(n);
    }

    void push(LexResult& result, TokenKind kind, std::size_t length, SourcePos pos) {
        std::string lexeme{src_.substr(pos_, length)};
        result.tokens.push_back(Token{kind, std::move(lexeme), token_id(kind), pos});
        advance(length);
    }

    bool scan_number(SourcePos start, LexResult& result) {
        std::size_t end = pos_;
        std::int64_t value = 0;
        bool overflow = false;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
            if (!overflow) {
                value = value * 10 + (src_[end] - '0');
                if (value > 65535) overflow = true;
            }
            ++end;
        }
        if (overflow) {
            std::string lexeme{src_.substr(pos_, end - pos_)};
            result.diagnostics.push_back(make_diag(
                DiagCode::ImmediateRange,
                "integer literal '" + lexeme + "' exceeds the supported range 0..65535",
                start));
            return false;
        }
        push(result, TokenKind::Number, end - pos_, start);
        return true;
    }

    void scan_word(SourcePos start, LexResult& result) {
        std::size_t end = pos_;
        while (end < src_.size() && is_ident_char(src_[end])) ++end;
        std::string_view word = src_.substr(pos_, end - pos_);
        auto it = keyword_table().find(word);
        TokenKind kind = it != keyword_table().end() ? it->second : TokenKind::Identifier;
        push(result, kind, end - pos_, start);
    }

    // Two-character operators are maximal-munch: `>=` is GE, never GT ASSIGN.
    bool scan_operator(SourcePos start, LexResult& result) {
        char c = src_[pos_];
        char next = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
        switch (c) {
        case '(': push(result, TokenKind::LParen, 1, start); return true;
        case ')': push(result, TokenKind::RParen, 1, start); return true;
        case '{': push(result, TokenKind::LBrace, 1, start); return true;
        case '}': push(result, TokenKind::RBrace, 1, start); return true;
        case ';': push(result, TokenKind::Semicolon, 1, start); return true;
        case '-': push(result, TokenKind::Minus, 1, start); return true;
        case '~': push(result, TokenKind::Tilde, 1, start); return true;
        case '+': push(result, TokenKind::Plus, 1, start); return true;
        case '*': push(result, TokenKind::Star, 1, start); return true;
        case '!':
            push(result, TokenKind::Bang, 1, start);
            return true;
        case '=':
            if (next == '=') {
                push(result, TokenKind::EqEq, 2, start);
            } else {
                push(result, TokenKind::Assign, 1, start);
            }
            return true;
        case '>':
            if (next == '=') {
                push(result, TokenKind::Ge, 2, start);
            } else {
                push(result, TokenKind::Gt, 1, start);
            }
            return true;
        case '<':
            if (next == '=') {
                push(result, TokenKind::Le, 2, start);
            } else {
                push(result, TokenKind::Lt, 1, start);
            }
            return true;
        case '&':
            if (next == '&') {
                push(result, TokenKind::AndAnd, 2, start);
                return true;
            }
            break;
        case '|':
            if (next == '|') {
                push(result, TokenKind::OrOr, 2, start);
                return true;
            }
            break;
        default:
            break;
        }
        result.diagnostics.push_back(make_diag(
            DiagCode::ParseError,
            std::string("unexpected character '") + c + "'", start));
        return false;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

LexResult tokenize(std::string_view source, FeatureSet features) {
    (void)features;  // gating happens in the parser
    return Scanner{source}.run();
}

std::string render_token_dump(const std::vector<Token>& tokens) {
    std::ostringstream os;
    for (const Token& t : tokens) {
        os << t.lexeme << "\tToken: " << t.id << '\n';
    }
    os << "\nTotal tokens: " << tokens.size();
    return os.str();
}

}  // namespace subsetc
