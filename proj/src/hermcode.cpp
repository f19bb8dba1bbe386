#include "hera/hermcode.hpp"

#include <cmath>

namespace hera {

int64_t dual_m(uint32_t q, int64_t m) {
    int64_t s = int64_t(q) * q * q + int64_t(q) * q - q - 2;
    if (m < 0 || m > s) throw ParamError("m out of range [0, s] for dual_m");
    return s - m;
}

HermitianCode code_build(const std::shared_ptr<const CurveTable>& table, int64_t m) {
    if (m < 0) throw ParamError("code_build requires m >= 0");
    uint32_t q = table->q();
    auto basis = monomial_basis(q, m);
    const Field& field = table->field();
    FieldMatrix gen(field, basis.size(), table->size());
    for (size_t t = 0; t < basis.size(); ++t) {
        for (size_t i = 0; i < table->size(); ++i) {
            const CurvePoint& p = table->point(i);
            FieldElement v = p.alpha.pow(basis[t].i) * p.beta.pow(basis[t].j);
            gen.set(t, i, v);
        }
    }
    return HermitianCode{q, m, table, std::move(basis), std::move(gen)};
}

size_t min_distance_bruteforce(const HermitianCode& code) {
    std::vector<uint32_t> witness;
    return min_distance_bruteforce(code, witness);
}

size_t min_distance_bruteforce(const HermitianCode& code, std::vector<uint32_t>& witness) {
    size_t k = code.gen.rows();
    uint32_t order = code.table->field()->order();
    double bits = double(k) * std::log2(double(order));
    if (bits > 24.0) throw ParamError("instance too large for brute-force minimum distance");

    const Field& field = code.table->field();
    size_t n = code.n();
    size_t best = n + 1;
    std::vector<uint32_t> msg(k, 0), word(n, 0);
    // Odometer over all messages, lexicographic; codeword updated per step.
    while (true) {
        size_t pos = 0;
        while (pos < k) {
            msg[pos]++;
            if (msg[pos] < order) break;
            msg[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        for (size_t i = 0; i < n; ++i) {
            uint32_t acc = 0;
            for (size_t t = 0; t < k; ++t) {
                if (msg[t] == 0) continue;
                acc = field->add(acc, field->mul(msg[t], code.gen.enc_at(t, i)));
            }
            word[i] = acc;
        }
        size_t w = 0;
        for (uint32_t v : word)
            if (v) ++w;
        if (w > 0 && w < best) {
            best = w;
            witness = word;
        }
    }
    return best;
}

bool dual_check(const HermitianCode& a, const HermitianCode& b) {
    if (a.q != b.q) throw ParamError("q mismatch in dual_check");
    if (a.table->points() != b.table->points())
        throw ParamError("point-order mismatch in dual_check");
    return (a.gen * b.gen.transpose()).is_zero();
}

} // namespace hera
