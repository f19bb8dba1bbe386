#pragma once

#include <cstdint>
#include <vector>

#include "hera/curve.hpp"
#include "hera/matrix.hpp"

namespace hera {

/// Basis monomial x^i y^j of a Riemann-Roch space L(m P_inf); its pole order
/// at P_inf is iq + j(q+1).
struct Monomial {
    uint32_t i;
    uint32_t j;

    uint32_t pole_order(uint32_t q) const { return i * q + j * (q + 1); }
    bool operator==(const Monomial& o) const { return i == o.i && j == o.j; }
};

/// The monomial basis I(m) = { x^i y^j : 0 <= j <= q-1, iq + j(q+1) <= m },
/// sorted by pole order ascending (distinct within a basis). Empty for m < 0.
std::vector<Monomial> monomial_basis(uint32_t q, int64_t m);

/// dim C(m P_inf): 0 for m < 0, |I(m)| for 0 <= m < q^3,
/// q^3 - |I(m_perp)| for q^3 <= m <= s (the monomial count over-counts from
/// m = q^3 on, where the evaluation map acquires a kernel), q^3 beyond s.
size_t rr_dim(uint32_t q, int64_t m);

/// Element of L(m P_inf) with one coefficient block per basis monomial.
/// Blocks all share one shape; 1x1 blocks give a scalar function.
class RRFunction {
public:
    RRFunction(Field field, int64_t m, std::vector<FieldMatrix> coeffs);

    /// Scalar function from encodings, one per basis monomial of I(m).
    static RRFunction scalar(Field field, int64_t m, const std::vector<uint32_t>& coeff_encs);

    const Field& field() const { return field_; }
    uint32_t q() const { return q_; }
    int64_t m() const { return m_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<FieldMatrix>& coeffs() const { return coeffs_; }
    size_t block_rows() const { return coeffs_.empty() ? 0 : coeffs_[0].rows(); }
    size_t block_cols() const { return coeffs_.empty() ? 0 : coeffs_[0].cols(); }

    /// Evaluate at a curve point: sum_t coeff_t * alpha^{i_t} beta^{j_t}.
    FieldMatrix eval(const CurvePoint& p) const;

    /// Scalar value at a point; requires 1x1 blocks.
    FieldElement eval_scalar(const CurvePoint& p) const;

    bool operator==(const RRFunction& o) const;

private:
    Field field_;
    uint32_t q_;
    int64_t m_;
    std::vector<Monomial> basis_;
    std::vector<FieldMatrix> coeffs_;
};

/// f + g with matching basis shapes.
RRFunction rr_add(const RRFunction& a, const RRFunction& b);

/// Linear combination sum_i funcs[i] * blocks[i] where funcs are scalar
/// functions over one basis and blocks share one shape.
RRFunction rr_combine(const std::vector<RRFunction>& funcs, const std::vector<FieldMatrix>& blocks);

} // namespace hera
