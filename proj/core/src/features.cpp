#include "subsetc/features.hpp"

namespace subsetc {

namespace {

constexpr std::uint8_t mask_up_to(Stage stage) {
    return static_cast<std::uint8_t>((1u << static_cast<int>(stage)) - 1);
}

}  // namespace

std::string_view stage_flag_name(Stage stage) {
    switch (stage) {
    case Stage::S1Return: return "stage1";
    case Stage::S2Unary: return "stage2";
    case Stage::S3BinaryArith: return "stage3";
    case Stage::S4BinaryLogic: return "stage4";
    case Stage::S5Variables: return "stage5";
    case Stage::S6Conditionals: return "stage6";
    }
    return "?";
}

std::string_view stage_label(Stage stage) {
    switch (stage) {
    case Stage::S1Return: return "return statements";
    case Stage::S2Unary: return "unary operators";
    case Stage::S3BinaryArith: return "arithmetic operators";
    case Stage::S4BinaryLogic: return "logical and comparison operators";
    case Stage::S5Variables: return "variables";
    case Stage::S6Conditionals: return "conditionals";
    }
    return "?";
}

Stage required_feature(ConstructKind construct) {
    switch (construct) {
    case ConstructKind::ReturnStatement:
    case ConstructKind::ExprStatement:
    case ConstructKind::NumberLiteral:
        return Stage::S1Return;
    case ConstructKind::UnaryNeg:
    case ConstructKind::UnaryBitNot:
    case ConstructKind::UnaryLogNot:
        return Stage::S2Unary;
    case ConstructKind::BinaryAdd:
    case ConstructKind::BinarySub:
    case ConstructKind::BinaryMul:
        return Stage::S3BinaryArith;
    case ConstructKind::BinaryLogAnd:
    case ConstructKind::BinaryLogOr:
    case ConstructKind::BinaryEq:
    case ConstructKind::BinaryGt:
    case ConstructKind::BinaryLt:
    case ConstructKind::BinaryGe:
    case ConstructKind::BinaryLe:
        return Stage::S4BinaryLogic;
    case ConstructKind::DefineVarStatement:
    case ConstructKind::VariableRef:
    case ConstructKind::Assignment:
        return Stage::S5Variables;
    case ConstructKind::IfStatement:
        return Stage::S6Conditionals;
    }
    return Stage::S1Return;
}

FeatureSet FeatureSet::up_to(Stage stage) {
    return FeatureSet{mask_up_to(stage)};
}

bool FeatureSet::enabled(Stage stage) const {
    return (mask_ >> (static_cast<int>(stage) - 1)) & 1u;
}

std::optional<Stage> FeatureSet::max_stage() const {
    std::optional<Stage> best;
    for (int k = 1; k <= 6; ++k) {
        if (enabled(static_cast<Stage>(k))) best = static_cast<Stage>(k);
    }
    return best;
}

FeatureResolution resolve_features(const std::vector<std::string>& flags) {
    FeatureResolution res;
    if (flags.empty()) {
        res.features = FeatureSet::all();
        return res;
    }
    FeatureSet acc = FeatureSet::none();
    for (const std::string& flag : flags) {
        if (flag == "all") {
            acc = FeatureSet::all();
        } else if (flag == "none") {
            // base language only; keeps acc as-is
        } else if (flag.size() == 6 && flag.starts_with("stage") &&
                   flag[5] >= '1' && flag[5] <= '6') {
            Stage stage = static_cast<Stage>(flag[5] - '0');
            FeatureSet wanted = FeatureSet::up_to(stage);
            // union; prefix closure makes the highest stage win
            if (!acc.max_stage() ||
                static_cast<int>(*wanted.max_stage()) > static_cast<int>(*acc.max_stage())) {
                acc = wanted;
            }
        } else {
            res.diagnostics.push_back(make_diag(
                DiagCode::UnknownFeature, "unknown feature " + flag, SourcePos{}));
            return res;
        }
    }
    res.features = acc;
    return res;
}

}  // namespace subsetc
