#include <doctest.h>

#include "../support/test_helpers.hpp"
#include "subsetc/semantics.hpp"

using namespace subsetc;
using namespace subsetc::testing;

namespace {

DiagnosticList analyze_source(const std::string& source) {
    LexResult lexed = tokenize(source, FeatureSet::all());
    REQUIRE(lexed.ok());
    ParseResult parsed = parse(lexed.tokens, FeatureSet::all());
    REQUIRE(parsed.ok());
    return analyze(parsed.program, FeatureSet::all());
}

}  // namespace

TEST_CASE("assignment without declaration is undeclared") {
    DiagnosticList d = analyze_source("fun main() { a = 8; return 0; }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::UndeclaredVar);
    CHECK(d.front().message == "use of undeclared variable 'a'");
    CHECK(d.front().pos == SourcePos{1, 14});
}

TEST_CASE("undeclared variable in an if condition is caught") {
    DiagnosticList d = analyze_source("fun main() { if (a==9){ return 1; } }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::UndeclaredVar);
}

TEST_CASE("declared variables pass cleanly") {
    CHECK(analyze_source("fun main() { var a = 9; return a; }").empty());
    CHECK(analyze_source("fun main() { }").empty());
    CHECK(analyze_source("").empty());
}

TEST_CASE("redeclaration in the same scope is rejected") {
    DiagnosticList d = analyze_source("fun main() { var a = 1; var a = 2; }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::RedeclaredVar);
    CHECK(d.front().message == "redeclaration of variable 'a'");
}

TEST_CASE("shadowing an outer variable is also a redeclaration") {
    DiagnosticList d =
        analyze_source("fun main() { var a = 1; if (a) { var a = 2; } }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::RedeclaredVar);
}

TEST_CASE("block-local variables die at block end") {
    DiagnosticList d = analyze_source(
        "fun main() { var a = 1; if (a) { var b = 2; } return b; }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::UndeclaredVar);
    CHECK(d.front().message == "use of undeclared variable 'b'");
}

TEST_CASE("inner blocks can read outer variables") {
    CHECK(analyze_source(
              "fun main() { var a = 1; if (a) { a = a + 1; } return a; }")
              .empty());
}

TEST_CASE("a variable is not visible inside its own initializer") {
    DiagnosticList d = analyze_source("fun main() { var a = a; }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::UndeclaredVar);
}

TEST_CASE("use before declaration is always undeclared") {
    DiagnosticList d = analyze_source("fun main() { b = 1; var b = 2; }");
    REQUIRE(d.size() == 1);
    CHECK(d.front().code == DiagCode::UndeclaredVar);

    // same statements, declaration first
    CHECK(analyze_source("fun main() { var b = 2; b = 1; }").empty());
}

TEST_CASE("every offending use gets its own diagnostic") {
    DiagnosticList d = analyze_source("fun main() { a = 1; b = 2; return 0; }");
    CHECK(d.size() == 2);
}

TEST_CASE("analyze re-checks feature gates on a hand-built tree") {
    // an if statement smuggled past the parser must still gate on S6
    Program program;
    Block then_block;
    Block body;
    body.statements.push_back(Stmt{
        IfStmt{make_expr(Immediate{1}, SourcePos{1, 1}), std::move(then_block),
               std::nullopt},
        SourcePos{1, 1}});
    program.function = Function{"main", std::move(body), SourcePos{1, 1}};

    DiagnosticList d = analyze(program, FeatureSet::up_to(Stage::S5Variables));
    REQUIRE(!d.empty());
    CHECK(d.front().code == DiagCode::FeatureDisabled);
    CHECK(analyze(program, FeatureSet::all()).empty());
}
