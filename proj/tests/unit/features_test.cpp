#include <doctest.h>

#include "subsetc/features.hpp"

using namespace subsetc;

TEST_CASE("stageK resolves to the prefix-closed set S1..Sk") {
    for (int k = 1; k <= 6; ++k) {
        FeatureResolution r = resolve_features({"stage" + std::to_string(k)});
        REQUIRE(r.ok());
        for (int j = 1; j <= 6; ++j) {
            CHECK(r.features.enabled(static_cast<Stage>(j)) == (j <= k));
        }
    }
}

TEST_CASE("all, none and the empty default") {
    CHECK(resolve_features({"all"}).features == FeatureSet::all());
    CHECK(resolve_features({"none"}).features == FeatureSet::none());
    CHECK(resolve_features({}).features == FeatureSet::all());
    CHECK(resolve_features({"stage6"}).features == FeatureSet::all());
}

TEST_CASE("several flags union to the highest stage") {
    FeatureResolution r = resolve_features({"stage2", "stage5", "stage3"});
    REQUIRE(r.ok());
    CHECK(r.features == FeatureSet::up_to(Stage::S5Variables));
}

TEST_CASE("unknown flags are rejected") {
    FeatureResolution r = resolve_features({"stage9"});
    REQUIRE(!r.ok());
    CHECK(r.diagnostics.front().code == DiagCode::UnknownFeature);
    CHECK(r.diagnostics.front().message == "unknown feature stage9");
    CHECK(!resolve_features({"stage0"}).ok());
    CHECK(!resolve_features({"everything"}).ok());
}

TEST_CASE("required_feature is total and matches the stage list") {
    CHECK(required_feature(ConstructKind::ReturnStatement) == Stage::S1Return);
    CHECK(required_feature(ConstructKind::ExprStatement) == Stage::S1Return);
    CHECK(required_feature(ConstructKind::NumberLiteral) == Stage::S1Return);
    CHECK(required_feature(ConstructKind::UnaryNeg) == Stage::S2Unary);
    CHECK(required_feature(ConstructKind::UnaryBitNot) == Stage::S2Unary);
    CHECK(required_feature(ConstructKind::UnaryLogNot) == Stage::S2Unary);
    CHECK(required_feature(ConstructKind::BinaryAdd) == Stage::S3BinaryArith);
    CHECK(required_feature(ConstructKind::BinarySub) == Stage::S3BinaryArith);
    CHECK(required_feature(ConstructKind::BinaryMul) == Stage::S3BinaryArith);
    CHECK(required_feature(ConstructKind::BinaryLogAnd) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::BinaryLogOr) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::BinaryEq) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::BinaryGt) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::BinaryLt) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::BinaryGe) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::BinaryLe) == Stage::S4BinaryLogic);
    CHECK(required_feature(ConstructKind::DefineVarStatement) == Stage::S5Variables);
    CHECK(required_feature(ConstructKind::VariableRef) == Stage::S5Variables);
    CHECK(required_feature(ConstructKind::Assignment) == Stage::S5Variables);
    CHECK(required_feature(ConstructKind::IfStatement) == Stage::S6Conditionals);
}

TEST_CASE("every constructed set is prefix-closed") {
    for (int k = 1; k <= 6; ++k) {
        FeatureSet f = FeatureSet::up_to(static_cast<Stage>(k));
        for (int j = 1; j < k; ++j) {
            CHECK(f.enabled(static_cast<Stage>(j)));
        }
    }
    CHECK(!FeatureSet::none().max_stage().has_value());
    CHECK(FeatureSet::all().max_stage() == Stage::S6Conditionals);
}
