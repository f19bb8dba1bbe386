#include "hera/rrspace.hpp"

#include <algorithm>

namespace hera {

std::vector<Monomial> monomial_basis(uint32_t q, int64_t m) {
    std::vector<Monomial> out;
    if (m < 0) return out;
    for (uint32_t j = 0; j < q; ++j) {
        int64_t rem = m - int64_t(j) * (q + 1);
        if (rem < 0) continue;
        for (uint32_t i = 0; int64_t(i) * q <= rem; ++i) out.push_back({i, j});
    }
    std::sort(out.begin(), out.end(), [q](const Monomial& a, const Monomial& b) {
        uint32_t pa = a.pole_order(q), pb = b.pole_order(q);
        return pa != pb ? pa < pb : a.j < b.j;
    });
    return out;
}

size_t rr_dim(uint32_t q, int64_t m) {
    int64_t n = int64_t(q) * q * q;
    int64_t s = n + int64_t(q) * q - q - 2;
    if (m < 0) return 0;
    if (m > s) return size_t(n);
    // From m = q^3 on, the monomial count over-counts: x^(q^2) - x has pole
    // order q^3 and vanishes at every affine point, so the evaluation map
    // acquires a kernel and the dual-complement count is the true dimension.
    if (m < n) return monomial_basis(q, m).size();
    return size_t(n) - monomial_basis(q, s - m).size();
}

RRFunction::RRFunction(Field field, int64_t m, std::vector<FieldMatrix> coeffs)
    : field_(std::move(field)), q_(field_->subfield_q()), m_(m),
      basis_(monomial_basis(q_, m)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.size())
        throw ParamError("coefficient count does not match |I(m)|");
    for (const auto& c : coeffs_) {
        if (!c.spec()->same(*field_)) throw ParamError("field spec mismatch in coefficients");
        if (c.rows() != block_rows() || c.cols() != block_cols())
            throw ParamError("coefficient blocks must share one shape");
    }
}

RRFunction RRFunction::scalar(Field field, int64_t m, const std::vector<uint32_t>& coeff_encs) {
    std::vector<FieldMatrix> blocks;
    blocks.reserve(coeff_encs.size());
    for (uint32_t e : coeff_encs) {
        FieldMatrix b(field, 1, 1);
        b.set_enc(0, 0, e);
        blocks.push_back(std::move(b));
    }
    return RRFunction(field, m, std::move(blocks));
}

FieldMatrix RRFunction::eval(const CurvePoint& p) const {
    if (!p.alpha.spec()->same(*field_)) throw ParamError("field spec mismatch at evaluation point");
    FieldMatrix acc(field_, block_rows(), block_cols());
    for (size_t t = 0; t < basis_.size(); ++t) {
        FieldElement v = p.alpha.pow(basis_[t].i) * p.beta.pow(basis_[t].j);
        if (v.is_zero()) continue;
        acc = acc + coeffs_[t].scaled(v);
    }
    return acc;
}

FieldElement RRFunction::eval_scalar(const CurvePoint& p) const {
    if (block_rows() != 1 || block_cols() != 1) throw ParamError("not a scalar function");
    return eval(p).at(0, 0);
}

bool RRFunction::operator==(const RRFunction& o) const {
    return field_->same(*o.field_) && m_ == o.m_ && coeffs_ == o.coeffs_;
}

RRFunction rr_add(const RRFunction& a, const RRFunction& b) {
    if (a.m() != b.m()) throw ParamError("divisor degree mismatch");
    std::vector<FieldMatrix> sum;
    sum.reserve(a.coeffs().size());
    for (size_t t = 0; t < a.coeffs().size(); ++t) sum.push_back(a.coeffs()[t] + b.coeffs()[t]);
    return RRFunction(a.field(), a.m(), std::move(sum));
}

RRFunction rr_combine(const std::vector<RRFunction>& funcs, const std::vector<FieldMatrix>& blocks) {
    if (funcs.empty() || funcs.size() != blocks.size())
        throw ParamError("rr_combine needs matching nonempty function/block lists");
    const RRFunction& f0 = funcs[0];
    size_t nb = f0.coeffs().size();
    std::vector<FieldMatrix> out(nb, FieldMatrix(f0.field(), blocks[0].rows(), blocks[0].cols()));
    for (size_t i = 0; i < funcs.size(); ++i) {
        if (funcs[i].m() != f0.m()) throw ParamError("rr_combine basis mismatch");
        for (size_t t = 0; t < nb; ++t) {
            FieldElement c = funcs[i].coeffs()[t].at(0, 0);
            if (c.is_zero()) continue;
            out[t] = out[t] + blocks[i].scaled(c);
        }
    }
    return RRFunction(f0.field(), f0.m(), std::move(out));
}

} // namespace hera
