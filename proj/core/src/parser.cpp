#include "subsetc/parser.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace subsetc {

namespace {

// program      ::= function | ε
// function     ::= 'fun' IDENTIFIER '(' ')' '{' block '}'
// block        ::= statement*
// statement    ::= 'return' expression ';'
//                | 'var' IDENTIFIER '=' expression ';'
//                | 'if' '(' expression ')' '{' block '}' ('else' '{' block '}')?
//                | expression ';'
// expression   ::= assignment
// assignment   ::= IDENTIFIER '=' assignment | logic_or
// logic_or     ::= logic_and ('||' logic_and)*
// logic_and    ::= equality ('&&' equality)*
// equality     ::= comparison ('==' comparison)*
// comparison   ::= additive (('<' | '>' | '<=' | '>=') additive)*
// additive     ::= term (('+' | '-') term)*
// term         ::= unary ('*' unary)*
// unary        ::= ('-' | '~' | '!') unary | primary
// primary      ::= NUMBER | IDENTIFIER | '(' expression ')'
//
// All binary operators are left-associative, assignment right-associative.
// The first error aborts the unit.
struct ParseAbort {
    Diagnostic diagnostic;
};

class Parser {
public:
    Parser(std::span<const Token> tokens, FeatureSet features)
        : tokens_(tokens), features_(features) {}

    Program parse_program() {
        Program program;
        if (at_end()) return program;  // ε
        program.function = parse_function();
        if (!at_end()) {
            fail(peek().pos, "unexpected '" + peek().lexeme + "' after function body");
        }
        return program;
    }

private:
    [[noreturn]] void fail(SourcePos pos, std::string message) {
        throw ParseAbort{make_diag(DiagCode::ParseError, std::move(message), pos)};
    }

    [[noreturn]] void fail_gate(SourcePos pos, std::string construct, Stage stage) {
        std::ostringstream os;
        os << construct << " requires feature " << stage_flag_name(stage) << " ("
           << stage_label(stage) << ")";
        throw ParseAbort{make_diag(DiagCode::FeatureDisabled, os.str(), pos)};
    }

    void gate(ConstructKind construct, SourcePos pos, std::string what) {
        if (!features_.allows(construct)) {
            fail_gate(pos, std::move(what), required_feature(construct));
        }
    }

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token& peek() const { return tokens_[pos_]; }

    SourcePos here() const {
        if (!at_end()) return peek().pos;
        if (!tokens_.empty()) return tokens_.back().pos;
        return SourcePos{1, 1};
    }

    bool check(TokenKind kind) const { return !at_end() && peek().kind == kind; }

    bool match(TokenKind kind) {
        if (!check(kind)) return false;
        ++pos_;
        return true;
    }

    const Token& expect(TokenKind kind, std::string_view what) {
        if (at_end()) {
            fail(here(), "expected " + std::string(what) + ", found end of input");
        }
        if (peek().kind != kind) {
            fail(peek().pos,
                 "expected " + std::string(what) + ", found '" + peek().lexeme + "'");
        }
        return tokens_[pos_++];
    }

    Function parse_function() {
        const Token& kw = expect(TokenKind::Fun, "'fun'");
        const Token& name = expect(TokenKind::Identifier, "function name");
        if (name.lexeme != "main") {
            fail(name.pos, "entry function must be named 'main', found '" + name.lexeme + "'");
        }
        expect(TokenKind::LParen, "'('");
        expect(TokenKind::RParen, "')'");
        expect(TokenKind::LBrace, "'{'");
        Block body = parse_block();
        expect(TokenKind::RBrace, "'}'");
        return Function{name.lexeme, std::move(body), kw.pos};
    }

    Block parse_block() {
        Block block;
        while (!at_end() && peek().kind != TokenKind::RBrace) {
            block.statements.push_back(parse_statement());
        }
        return block;
    }

    Stmt parse_statement() {
        SourcePos pos = peek().pos;
        if (check(TokenKind::Return)) {
            gate(ConstructKind::ReturnStatement, pos, "return statement");
            ++pos_;
            ExprPtr value = parse_expression();
            expect(TokenKind::Semicolon, "';' after return value");
            return Stmt{ReturnStmt{std::move(value)}, pos};
        }
        if (check(TokenKind::Var)) {
            gate(ConstructKind::DefineVarStatement, pos, "variable declaration");
            ++pos_;
            const Token& name = expect(TokenKind::Identifier, "variable name");
            expect(TokenKind::Assign, "'=' after variable name");
            ExprPtr init = parse_expression();
            expect(TokenKind::Semicolon, "';' after declaration");
            return Stmt{DefineVarStmt{name.lexeme, std::move(init)}, pos};
        }
        if (check(TokenKind::If)) {
            gate(ConstructKind::IfStatement, pos, "if statement");
            ++pos_;
            expect(TokenKind::LParen, "'(' after 'if'");
            ExprPtr condition = parse_expression();
            expect(TokenKind::RParen, "')' after condition");
            expect(TokenKind::LBrace, "'{'");
            Block then_block = parse_block();
            expect(TokenKind::RBrace, "'}'");
            std::optional<Block> else_block;
            if (match(TokenKind::Else)) {
                expect(TokenKind::LBrace, "'{' after 'else'");
                else_block = parse_block();
                expect(TokenKind::RBrace, "'}'");
            }
            return Stmt{IfStmt{std::move(condition), std::move(then_block),
                               std::move(else_block)},
                        pos};
        }
        gate(ConstructKind::ExprStatement, pos, "expression statement");
        ExprPtr expr = parse_expression();
        expect(TokenKind::Semicolon, "';' after expression");
        return Stmt{ExprStmt{std::move(expr)}, pos};
    }

    ExprPtr parse_expression() { return parse_assignment(); }

    ExprPtr parse_assignment() {
        ExprPtr lhs = parse_logic_or();
        if (check(TokenKind::Assign)) {
            SourcePos op_pos = peek().pos;
            gate(ConstructKind::Assignment, op_pos, "assignment");
            ++pos_;
            const auto* target = std::get_if<VarRef>(&lhs->node);
            if (target == nullptr) {
                fail(op_pos, "invalid assignment target");
            }
            ExprPtr value = parse_assignment();  // right-associative
            SourcePos pos = lhs->pos;
            return make_expr(AssignExpr{target->name, std::move(value)}, pos);
        }
        return lhs;
    }

    using BinParser = ExprPtr (Parser::*)();

    ExprPtr parse_binary_level(BinParser next,
                               std::initializer_list<std::pair<TokenKind, BinaryOp>> ops) {
        ExprPtr lhs = (this->*next)();
        for (;;) {
            bool matched = false;
            for (auto [kind, op] : ops) {
                if (!check(kind)) continue;
                SourcePos op_pos = peek().pos;
                gate(construct_kind(op), op_pos,
                     "binary operator '" + std::string(binary_op_lexeme(op)) + "'");
                ++pos_;
                ExprPtr rhs = (this->*next)();
                SourcePos pos = lhs->pos;
                lhs = make_expr(BinaryExpr{op, std::move(lhs), std::move(rhs)}, pos);
                matched = true;
                break;
            }
            if (!matched) return lhs;
        }
    }

    ExprPtr parse_logic_or() {
        return parse_binary_level(&Parser::parse_logic_and,
                                  {{TokenKind::OrOr, BinaryOp::LogOr}});
    }

    ExprPtr parse_logic_and() {
        return parse_binary_level(&Parser::parse_equality,
                                  {{TokenKind::AndAnd, BinaryOp::LogAnd}});
    }

    ExprPtr parse_equality() {
        return parse_binary_level(&Parser::parse_comparison,
                                  {{TokenKind::EqEq, BinaryOp::Eq}});
    }

    ExprPtr parse_comparison() {
        return parse_binary_level(&Parser::parse_additive,
                                  {{TokenKind::Lt, BinaryOp::Lt},
                                   {TokenKind::Gt, BinaryOp::Gt},
                                   {TokenKind::Le, BinaryOp::Le},
                                   {TokenKind::Ge, BinaryOp::Ge}});
    }

    ExprPtr parse_additive() {
        return parse_binary_level(&Parser::parse_term,
                                  {{TokenKind::Plus, BinaryOp::Add},
                                   {TokenKind::Minus, BinaryOp::Sub}});
    }

    ExprPtr parse_term() {
        return parse_binary_level(&Parser::parse_unary,
                                  {{TokenKind::Star, BinaryOp::Mul}});
    }

    ExprPtr parse_unary() {
        if (at_end()) {
            fail(here(), "expected expression, found end of input");
        }
        UnaryOp op;
        switch (peek().kind) {
        case TokenKind::Minus: op = UnaryOp::Neg; break;
        case TokenKind::Tilde: op = UnaryOp::BitNot; break;
        case TokenKind::Bang: op = UnaryOp::LogNot; break;
        default: return parse_primary();
        }
        SourcePos pos = peek().pos;
        gate(construct_kind(op), pos,
             "unary operator '" + std::string(unary_op_lexeme(op)) + "'");
        ++pos_;
        ExprPtr operand = parse_unary();
        return make_expr(UnaryExpr{op, std::move(operand)}, pos);
    }

    ExprPtr parse_primary() {
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Number: {
            gate(ConstructKind::NumberLiteral, tok.pos, "integer literal");
            ++pos_;
            std::int64_t value = 0;
            std::from_chars(tok.lexeme.data(), tok.lexeme.data() + tok.lexeme.size(), value);
            return make_expr(Immediate{value}, tok.pos);
        }
        case TokenKind::Identifier: {
            gate(ConstructKind::VariableRef, tok.pos, "variable reference");
            ++pos_;
            return make_expr(VarRef{tok.lexeme}, tok.pos);
        }
        case TokenKind::LParen: {
            ++pos_;
            ExprPtr inner = parse_expression();
            expect(TokenKind::RParen, "')' to close '('");
            return inner;
        }
        case TokenKind::Plus:
            // never unary; reject with the operator named
            fail(tok.pos, "unknown operator '+'");
        default:
            fail(tok.pos, "expected expression, found '" + tok.lexeme + "'");
        }
    }

    std::span<const Token> tokens_;
    FeatureSet features_;
    std::size_t pos_ = 0;
};

void render_expr(const Expr& expr, int depth, std::ostringstream& os);
void render_block(const Block& block, int depth, std::ostringstream& os);

void indent(int depth, std::ostringstream& os) {
    for (int i = 0; i < depth; ++i) os << "  ";
}

void render_expr(const Expr& expr, int depth, std::ostringstream& os) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            indent(depth, os);
            if constexpr (std::is_same_v<T, Immediate>) {
                os << "IMMEDIATE " << node.value << '\n';
            } else if constexpr (std::is_same_v<T, VarRef>) {
                os << "VARIABLE '" << node.name << "'\n";
            } else if constexpr (std::is_same_v<T, AssignExpr>) {
                os << "ASSIGNMENT '" << node.name << "'\n";
                render_expr(*node.value, depth + 1, os);
            } else if constexpr (std::is_same_v<T, UnaryExpr>) {
                os << "UNARY '" << unary_op_lexeme(node.op) << "'\n";
                render_expr(*node.operand, depth + 1, os);
            } else if constexpr (std::is_same_v<T, BinaryExpr>) {
                os << "BINARY '" << binary_op_lexeme(node.op) << "'\n";
                render_expr(*node.lhs, depth + 1, os);
                render_expr(*node.rhs, depth + 1, os);
            }
        },
        expr.node);
}

void render_stmt(const Stmt& stmt, int depth, std::ostringstream& os) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ReturnStmt>) {
                indent(depth, os);
                os << "RETURN\n";
                render_expr(*node.value, depth + 1, os);
            } else if constexpr (std::is_same_v<T, DefineVarStmt>) {
                indent(depth, os);
                os << "DEFINE VARIABLE '" << node.name << "'\n";
                indent(depth + 1, os);
                os << "'" << node.name << "' INITIAL VALUE\n";
                render_expr(*node.init, depth + 2, os);
            } else if constexpr (std::is_same_v<T, ExprStmt>) {
                render_expr(*node.expr, depth, os);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
                indent(depth, os);
                os << "IF\n";
                indent(depth + 1, os);
                os << "CONDITION\n";
                render_expr(*node.condition, depth + 2, os);
                indent(depth + 1, os);
                os << "THEN\n";
                render_block(node.then_block, depth + 2, os);
                if (node.else_block) {
                    indent(depth + 1, os);
                    os << "ELSE\n";
                    render_block(*node.else_block, depth + 2, os);
                }
            }
        },
        stmt.node);
}

void render_block(const Block& block, int depth, std::ostringstream& os) {
    indent(depth, os);
    os << "BLOCK\n";
    for (const Stmt& stmt : block.statements) {
        render_stmt(stmt, depth + 1, os);
    }
}

}  // namespace

ParseResult parse(std::span<const Token> tokens, FeatureSet features) {
    ParseResult result;
    try {
        result.program = Parser{tokens, features}.parse_program();
    } catch (const ParseAbort& abort) {
        result.diagnostics.push_back(abort.diagnostic);
    }
    return result;
}

std::string render_ast(const Program& program) {
    std::ostringstream os;
    os << "---AST---\n";
    os << "  TOP LEVEL";
    if (program.function) {
        os << '\n';
        indent(2, os);
        os << "FUNCTION '" << program.function->name << "'\n";
        render_block(program.function->body, 3, os);
    }
    std::string text = os.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
}

}  // namespace subsetc
