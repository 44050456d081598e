#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subsetc/diagnostics.hpp"

namespace subsetc {

// The six cumulative language subsets. The bare function skeleton
// (`fun main() { }`) is the base language and is always available.
enum class Stage : std::uint8_t {
    S1Return = 1,       // return statements, integer literals
    S2Unary = 2,        // - ~ !
    S3BinaryArith = 3,  // + - *
    S4BinaryLogic = 4,  // && || == > < >= <=
    S5Variables = 5,    // var declarations, assignment, variable refs
    S6Conditionals = 6, // if / else
};

// CLI spelling, e.g. "stage4".
std::string_view stage_flag_name(Stage stage);
// Human label used in gating diagnostics, e.g. "conditionals".
std::string_view stage_label(Stage stage);

// Every statement or expression form the parser can produce.
enum class ConstructKind {
    ReturnStatement,
    ExprStatement,
    DefineVarStatement,
    IfStatement,
    NumberLiteral,
    VariableRef,
    Assignment,
    UnaryNeg,
    UnaryBitNot,
    UnaryLogNot,
    BinaryAdd,
    BinarySub,
    BinaryMul,
    BinaryLogAnd,
    BinaryLogOr,
    BinaryEq,
    BinaryGt,
    BinaryLt,
    BinaryGe,
    BinaryLe,
};

// The subset a construct belongs to. Total over ConstructKind.
Stage required_feature(ConstructKind construct);

// A prefix-closed set of enabled stages: enabling stage k enables 1..k.
// Immutable value type; freely shareable between compilations.
class FeatureSet {
public:
    // Base language only, no subsets.
    static FeatureSet none() { return FeatureSet{0}; }
    static FeatureSet all() { return up_to(Stage::S6Conditionals); }
    // Stages 1..k.
    static FeatureSet up_to(Stage stage);

    bool enabled(Stage stage) const;
    bool allows(ConstructKind construct) const { return enabled(required_feature(construct)); }

    // Highest enabled stage; nullopt when only the base language is on.
    std::optional<Stage> max_stage() const;

    bool operator==(const FeatureSet&) const = default;

private:
    explicit FeatureSet(std::uint8_t mask) : mask_(mask) {}
    std::uint8_t mask_;
};

struct FeatureResolution {
    FeatureSet features = FeatureSet::all();
    DiagnosticList diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

// Resolves flag spellings {"all", "none", "stage1".."stage6"} to a feature
// set. Several flags union; an empty list means "all".
FeatureResolution resolve_features(const std::vector<std::string>& flags);

}  // namespace subsetc
