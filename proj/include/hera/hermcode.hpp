#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hera/rrspace.hpp"

namespace hera {

/// One-point Hermitian evaluation code C(m P_inf): evaluations of I(m)
/// at all q^3 affine points of H_q in canonical order.
struct HermitianCode {
    uint32_t q;
    int64_t m;
    std::shared_ptr<const CurveTable> table;
    std::vector<Monomial> basis;
    FieldMatrix gen; // |I(m)| x q^3, gen[t][i] = basis_t(P_i)

    size_t n() const { return size_t(q) * q * q; }
    int64_t s() const { return int64_t(n()) + int64_t(q) * q - q - 2; }
    int64_t d_star() const { return int64_t(n()) - m; }
    size_t dim() const { return rr_dim(q, m); }

    bool self_orthogonal() const { return 2 * m <= s(); }
    bool self_dual() const { return 2 * m == s(); }
};

/// m_perp = q^3 + q^2 - q - 2 - m; requires 0 <= m <= s.
int64_t dual_m(uint32_t q, int64_t m);

HermitianCode code_build(const std::shared_ptr<const CurveTable>& table, int64_t m);

/// Exact minimum Hamming weight over all nonzero codewords; guarded so the
/// enumeration stays at or below 2^24 codewords.
size_t min_distance_bruteforce(const HermitianCode& code);

/// Same search, also reporting a witness codeword of minimum weight
/// (lexicographically first message order).
size_t min_distance_bruteforce(const HermitianCode& code, std::vector<uint32_t>& witness);

/// True iff gen_A . gen_B^T = 0 over the shared point order.
bool dual_check(const HermitianCode& a, const HermitianCode& b);

} // namespace hera
