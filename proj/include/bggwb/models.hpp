#pragma once

#include <string>
#include <vector>

#include "bggwb/emodule.hpp"

namespace bggwb {

enum class ModelKind { point, abelian, curve, curve_times_p1, synthetic_kollar, custom };

struct ModelSpec {
    ModelKind kind = ModelKind::point;
    int param = 0;                   // d for abelian, g for the curve kinds
    Field field;
    std::vector<std::string> files;  // summand files (synthetic_kollar) or the module file (custom)

    static ModelSpec point(Field f = Field::rationals()) { return {ModelKind::point, 0, f, {}}; }
    static ModelSpec abelian(int d, Field f = Field::rationals()) { return {ModelKind::abelian, d, f, {}}; }
    static ModelSpec curve(int g, Field f = Field::rationals()) { return {ModelKind::curve, g, f, {}}; }
    static ModelSpec curve_times_p1(int g, Field f = Field::rationals()) {
        return {ModelKind::curve_times_p1, g, f, {}};
    }

    bool geometric() const { return kind != ModelKind::synthetic_kollar && kind != ModelKind::custom; }
    std::string name() const;
};

/// P_X = sum H^i(O_X) (H^i in degree d - i) and its dual Q_X.
struct Model {
    GradedEModule p;
    GradedEModule q;
};

/// Throws PreconditionError outside d <= 6, 1 <= g <= 8.
Model generate(const ModelSpec& spec);

/// Dimension of the generic Albanese fibre; PreconditionError for the
/// synthetic and custom kinds.
int expected_k(const ModelSpec& spec);

/// Kind names accepted on the command line: point, abelian, curve, curve_times_p1.
ModelKind parse_model_kind(const std::string& text);

}  // namespace bggwb
