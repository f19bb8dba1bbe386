#pragma once

#include <vector>

#include "hera/field.hpp"

namespace hera {

/// Affine rational point (alpha, beta) of the Hermitian curve
/// H_q : y^q + y = x^(q+1) over GF(q^2).
struct CurvePoint {
    FieldElement alpha;
    FieldElement beta;

    bool operator==(const CurvePoint& o) const { return alpha == o.alpha && beta == o.beta; }
};

/// All q^3 affine rational points of H_q in canonical order: lexicographic
/// by (enc(alpha), enc(beta)). Indices into `points` define P_1..P_{q^3}
/// throughout the scheme (0-based in code).
class CurveTable {
public:
    explicit CurveTable(Field field);

    const Field& field() const { return field_; }
    uint32_t q() const { return q_; }
    uint32_t genus() const { return q_ * (q_ - 1) / 2; }
    size_t size() const { return points_.size(); }
    const CurvePoint& point(size_t i) const { return points_[i]; }
    const std::vector<CurvePoint>& points() const { return points_; }

    /// Canonical index of a point; throws ParamError when not on the curve.
    size_t index_of(const CurvePoint& p) const;

    bool on_curve(const FieldElement& alpha, const FieldElement& beta) const;

private:
    Field field_;
    uint32_t q_;
    std::vector<CurvePoint> points_;
};

/// Gamma_alpha = { beta in GF(q^2) : beta^q + beta = alpha^(q+1) };
/// always exactly q elements.
std::vector<FieldElement> gamma_set(const Field& field, const FieldElement& alpha);

} // namespace hera
