#pragma once

// Test-side helpers shared by the unit and acceptance suites. The oracles
// here are deliberately independent of the production parser and code
// generator: the parenthesizer works straight off the token list, and the
// random-program generator evaluates its own tree.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsetc/codegen.hpp"
#include "subsetc/driver.hpp"
#include "subsetc/interpreter.hpp"
#include "subsetc/lexer.hpp"
#include "subsetc/parser.hpp"
#include "subsetc/semantics.hpp"

namespace subsetc::testing {

// --- pipeline shorthand -----------------------------------------------

struct Compiled {
    LexResult lexed;
    ParseResult parsed;
    DiagnosticList semantic;

    bool ok() const { return lexed.ok() && parsed.ok() && semantic.empty(); }
};

inline Compiled front_end(const std::string& source, FeatureSet features = FeatureSet::all()) {
    Compiled c;
    c.lexed = tokenize(source, features);
    if (!c.lexed.ok()) return c;
    c.parsed = parse(c.lexed.tokens, features);
    if (!c.parsed.ok()) return c;
    c.semantic = analyze(c.parsed.program, features);
    return c;
}

inline std::int64_t interpret_source(const std::string& source) {
    Compiled c = front_end(source);
    if (!c.ok()) throw std::runtime_error("oracle: source did not compile: " + source);
    return interpret(c.parsed.program);
}

inline std::string generate_source(const std::string& source, const TargetProfile& profile,
                                   FeatureSet features = FeatureSet::all()) {
    Compiled c = front_end(source, features);
    if (!c.ok()) throw std::runtime_error("oracle: source did not compile: " + source);
    GenResult g = generate(c.parsed.program, profile);
    if (!g.ok()) throw std::runtime_error("oracle: codegen failed: " + source);
    return g.assembly;
}

// --- token-level parenthesizer ----------------------------------------

// Rewrites an expression token list into a fully parenthesized string
// following the documented precedence table, by precedence climbing over
// the raw tokens. Supports every operator except assignment.
class Parenthesizer {
public:
    explicit Parenthesizer(const std::vector<Token>& tokens) : tokens_(tokens) {}

    std::string run() {
        std::string text = climb(0);
        if (pos_ != tokens_.size()) throw std::runtime_error("parenthesizer: trailing tokens");
        return text;
    }

private:
    static int left_power(TokenKind kind) {
        switch (kind) {
        case TokenKind::Star: return 70;
        case TokenKind::Plus:
        case TokenKind::Minus: return 60;
        case TokenKind::Lt:
        case TokenKind::Gt:
        case TokenKind::Le:
        case TokenKind::Ge: return 50;
        case TokenKind::EqEq: return 40;
        case TokenKind::AndAnd: return 30;
        case TokenKind::OrOr: return 20;
        default: return -1;
        }
    }

    std::string climb(int min_power) {
        if (pos_ >= tokens_.size()) throw std::runtime_error("parenthesizer: eof");
        const Token& head = tokens_[pos_++];
        std::string lhs;
        switch (head.kind) {
        case TokenKind::Number:
        case TokenKind::Identifier:
            lhs = head.lexeme;
            break;
        case TokenKind::Minus:
        case TokenKind::Tilde:
        case TokenKind::Bang:
            lhs = "(" + head.lexeme + climb(80) + ")";
            break;
        case TokenKind::LParen:
            lhs = climb(0);
            if (pos_ >= tokens_.size() || tokens_[pos_].kind != TokenKind::RParen)
                throw std::runtime_error("parenthesizer: missing ')'");
            ++pos_;
            break;
        default:
            throw std::runtime_error("parenthesizer: bad operand " + head.lexeme);
        }
        while (pos_ < tokens_.size()) {
            int power = left_power(tokens_[pos_].kind);
            if (power < min_power || power == -1) break;
            std::string op = tokens_[pos_].lexeme;
            ++pos_;
            std::string rhs = climb(power + 1);  // all left-associative
            lhs = "(" + lhs + " " + op + " " + rhs + ")";
        }
        return lhs;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

inline std::string parenthesize_expression(const std::string& expr_source) {
    LexResult lexed = tokenize(expr_source, FeatureSet::all());
    if (!lexed.ok()) throw std::runtime_error("parenthesizer: lex failed");
    return Parenthesizer{lexed.tokens}.run();
}

// --- assembly shape checks --------------------------------------------

inline std::vector<std::string> normalize_asm(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in{text};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line;
        bool in_space = false;
        for (char c : raw) {
            if (c == ' ' || c == '\t') {
                in_space = !line.empty();
                continue;
            }
            if (in_space) line += ' ';
            in_space = false;
            line += c;
        }
        if (!line.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

struct AsmShape {
    bool ok = true;
    std::string problem;
};

// Labels must be unique, every branch target defined exactly once, and
// every sp-relative offset a negative multiple of the slot size.
inline AsmShape check_asm_shape(const std::string& text) {
    AsmShape shape;
    auto fail = [&](std::string why) {
        shape.ok = false;
        if (shape.problem.empty()) shape.problem = std::move(why);
    };
    std::map<std::string, int> labels;
    std::vector<std::string> targets;
    for (const std::string& line : normalize_asm(text)) {
        if (line.starts_with(".global") || line.starts_with(".align")) continue;
        if (line.back() == ':') {
            labels[line.substr(0, line.size() - 1)] += 1;
            continue;
        }
        std::istringstream fields{line};
        std::string mnemonic;
        fields >> mnemonic;
        if (mnemonic == "b" || mnemonic == "beq") {
            std::string target;
            fields >> target;
            targets.push_back(target);
        }
        auto at = line.find("[sp, #");
        if (at != std::string::npos) {
            int offset = std::stoi(line.substr(at + 6));
            if (offset >= 0 || offset % kWordSize != 0) {
                fail("bad stack offset in: " + line);
            }
        }
    }
    for (const auto& [label, count] : labels) {
        if (count != 1) fail("label defined " + std::to_string(count) + " times: " + label);
    }
    for (const std::string& target : targets) {
        if (labels[target] != 1) fail("undefined branch target: " + target);
    }
    return shape;
}

// --- independent random-program oracle ----------------------------------

// A miniature expression tree plus evaluator, separate from the production
// AST. The generator emits fully parenthesized source, so the intended
// grouping survives parsing by construction, and computes the expected
// result itself with the same wraparound/no-short-circuit rules the
// language defines.
struct OracleExpr {
    enum class Kind { Imm, Var, Unary, Binary } kind = Kind::Imm;
    std::int64_t value = 0;
    std::string name;
    std::string op;
    std::unique_ptr<OracleExpr> a;
    std::unique_ptr<OracleExpr> b;
};

class ProgramOracle {
public:
    explicit ProgramOracle(std::uint64_t seed) : rng_(seed) {}

    struct Sample {
        std::string source;
        std::int64_t expected = 0;
    };

    Sample next() {
        vars_.clear();
        env_.clear();
        returned_.reset();
        last_ = 0;
        std::ostringstream body;
        const int decls = pick(0, 3);
        for (int i = 0; i < decls; ++i) {
            auto init = make_expr(pick(0, 2));
            std::string name = "v" + std::to_string(i);
            body << "    var " << name << " = " << render(*init) << ";\n";
            env_[name] = eval(*init);
            last_ = env_[name];
            vars_.push_back(name);
        }
        if (!vars_.empty() && chance(2)) {
            const std::string& name = vars_[pick(0, static_cast<int>(vars_.size()) - 1)];
            auto value = make_expr(pick(0, 2));
            body << "    " << name << " = " << render(*value) << ";\n";
            env_[name] = eval(*value);
            last_ = env_[name];
        }
        if (chance(2)) {
            emit_if(body);
        }
        if (!returned_) {
            auto result = make_expr(pick(1, 4));
            body << "    return " << render(*result) << ";\n";
            returned_ = eval(*result);
        }
        Sample sample;
        sample.source = "fun main() {\n" + body.str() + "}\n";
        sample.expected = returned_.value_or(last_);
        return sample;
    }

private:
    int pick(int lo, int hi) {
        return std::uniform_int_distribution<int>{lo, hi}(rng_);
    }

    bool chance(int one_in) { return pick(1, one_in) == 1; }

    std::unique_ptr<OracleExpr> make_expr(int depth) {
        auto expr = std::make_unique<OracleExpr>();
        if (depth <= 0 || chance(3)) {
            if (!vars_.empty() && chance(2)) {
                expr->kind = OracleExpr::Kind::Var;
                expr->name = vars_[pick(0, static_cast<int>(vars_.size()) - 1)];
            } else {
                expr->kind = OracleExpr::Kind::Imm;
                expr->value = pick(0, 99);
            }
            return expr;
        }
        if (chance(4)) {
            expr->kind = OracleExpr::Kind::Unary;
            expr->op = std::array{"-", "~", "!"}[pick(0, 2)];
            expr->a = make_expr(depth - 1);
            return expr;
        }
        expr->kind = OracleExpr::Kind::Binary;
        expr->op = std::array{"+", "-", "*", "&&", "||", "==", ">", "<", ">=", "<="}[pick(0, 9)];
        expr->a = make_expr(depth - 1);
        expr->b = make_expr(depth - 1);
        return expr;
    }

    std::string render(const OracleExpr& expr) const {
        switch (expr.kind) {
        case OracleExpr::Kind::Imm: return std::to_string(expr.value);
        case OracleExpr::Kind::Var: return expr.name;
        case OracleExpr::Kind::Unary: return "(" + expr.op + render(*expr.a) + ")";
        case OracleExpr::Kind::Binary:
            return "(" + render(*expr.a) + " " + expr.op + " " + render(*expr.b) + ")";
        }
        return {};
    }

    std::int64_t eval(const OracleExpr& expr) {
        auto wrap = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
        auto bits = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
        switch (expr.kind) {
        case OracleExpr::Kind::Imm: return expr.value;
        case OracleExpr::Kind::Var: return env_.at(expr.name);
        case OracleExpr::Kind::Unary: {
            std::int64_t v = eval(*expr.a);
            if (expr.op == "-") return wrap(0 - bits(v));
            if (expr.op == "~") return wrap(~bits(v));
            return v == 0 ? 1 : 0;
        }
        case OracleExpr::Kind::Binary: {
            std::int64_t l = eval(*expr.a);
            std::int64_t r = eval(*expr.b);
            if (expr.op == "+") return wrap(bits(l) + bits(r));
            if (expr.op == "-") return wrap(bits(l) - bits(r));
            if (expr.op == "*") return wrap(bits(l) * bits(r));
            if (expr.op == "&&") return (l != 0 && r != 0) ? 1 : 0;
            if (expr.op == "||") return (l != 0 || r != 0) ? 1 : 0;
            if (expr.op == "==") return l == r ? 1 : 0;
            if (expr.op == ">") return l > r ? 1 : 0;
            if (expr.op == "<") return l < r ? 1 : 0;
            if (expr.op == ">=") return l >= r ? 1 : 0;
            return l <= r ? 1 : 0;
        }
        }
        return 0;
    }

    void emit_if(std::ostringstream& body) {
        auto condition = make_expr(pick(0, 2));
        auto then_value = make_expr(pick(0, 2));
        auto else_value = make_expr(pick(0, 2));
        const bool has_else = chance(2);
        const bool then_returns = chance(2);
        body << "    if (" << render(*condition) << ") {\n";
        body << "        " << (then_returns ? "return " : "0 * ") << render(*then_value)
             << ";\n    }";
        const std::int64_t c = eval(*condition);
        last_ = c;
        if (has_else) {
            body << " else {\n        return " << render(*else_value) << ";\n    }";
        }
        body << "\n";
        if (c != 0) {
            std::int64_t v = eval(*then_value);
            if (then_returns) {
                returned_ = v;
            } else {
                last_ = 0;  // the emitted statement is `0 * <expr>;`
                (void)v;
            }
        } else if (has_else) {
            returned_ = eval(*else_value);
        }
    }

    std::mt19937_64 rng_;
    std::vector<std::string> vars_;
    std::map<std::string, std::int64_t> env_;
    std::optional<std::int64_t> returned_;
    std::int64_t last_ = 0;
};

// --- random flat expression strings -------------------------------------

// Operator soup with no parens of its own: `u? operand (op u? operand)*`.
// Grouping is entirely up to the parser, which is exactly what the
// parenthesization oracle checks.
inline std::string random_flat_expression(std::mt19937_64& rng, int max_ops) {
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>{lo, hi}(rng);
    };
    static const char* binops[] = {"+", "-", "*", "&&", "||", "==", ">", "<", ">=", "<="};
    static const char* unops[] = {"-", "~", "!"};
    std::ostringstream out;
    auto operand = [&] {
        for (int u = pick(0, 2); u > 0; --u) out << unops[pick(0, 2)];
        out << pick(0, 9);
    };
    operand();
    const int ops = pick(1, max_ops);
    for (int i = 0; i < ops; ++i) {
        out << ' ' << binops[pick(0, 9)] << ' ';
        operand();
    }
    return out.str();
}

}  // namespace subsetc::testing
