#include "hera/scheme.hpp"

#include <functional>
#include <sstream>

namespace hera {

namespace {

// Evaluation matrix M[j][t] = basis_t(P at position j) for the given
// positions of the assignment.
FieldMatrix eval_matrix(const CurveTable& table, const PointAssignment& assignment,
                        const std::vector<Monomial>& basis, size_t pos_begin, size_t pos_end) {
    const Field& field = table.field();
    FieldMatrix M(field, pos_end - pos_begin, basis.size());
    for (size_t j = pos_begin; j < pos_end; ++j) {
        const CurvePoint& p = table.point(assignment.canon(j));
        for (size_t t = 0; t < basis.size(); ++t) {
            FieldElement v = p.alpha.pow(basis[t].i) * p.beta.pow(basis[t].j);
            M.set(j - pos_begin, t, v);
        }
    }
    return M;
}

// Columns of V^-1 give the coefficient vectors of the delta-functions.
std::vector<RRFunction> basis_from_system(const Field& field, int64_t m, const FieldMatrix& V,
                                          size_t count) {
    FieldMatrix rhs(field, V.rows(), count);
    for (size_t i = 0; i < count; ++i) rhs.set_enc(i, i, 1);
    FieldMatrix X = V.solve(rhs);
    std::vector<RRFunction> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        std::vector<uint32_t> encs(X.rows());
        for (size_t t = 0; t < X.rows(); ++t) encs[t] = X.enc_at(t, i);
        out.push_back(RRFunction::scalar(field, m, encs));
    }
    return out;
}

void for_each_subset(size_t n, size_t t, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(t);
    for (size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        size_t i = t;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - t) break;
            if (i == 0 && idx[0] == n - t) return;
        }
        if (idx[i] == i + n - t) return;
        ++idx[i];
        for (size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

SchemeParams params_validate(uint32_t q, size_t L, size_t T, size_t a, size_t b, size_t c) {
    if (L < 1) throw ParamError("bound: partition parameter L must be >= 1");
    if (T < 1) throw ParamError("bound: security parameter T must be >= 1");
    if (a < 1 || b < 1 || c < 1) throw ParamError("dimensions a, b, c must be positive");
    if (b % L != 0) {
        std::ostringstream os;
        os << "partition: L = " << L << " does not divide b = " << b;
        throw ParamError(os.str());
    }
    Field field = FieldSpec::for_hermitian(q); // throws for unrealizable q
    size_t genus = size_t(q) * (q - 1) / 2;
    size_t n = size_t(q) * q * q;
    if (2 * (L + T) > n - genus) {
        std::ostringstream os;
        os << "bound: 2(L+T) = " << 2 * (L + T) << " exceeds q^3 - q(q-1)/2 = " << n - genus;
        throw ParamError(os.str());
    }
    int64_t m = int64_t(L + T + genus) - 1;
    return SchemeParams{q, L, T, m, dual_m(q, m), L + 2 * T, a, b, c, std::move(field)};
}

std::vector<size_t> server_positions(const SchemeParams& params) {
    std::vector<size_t> pos;
    pos.reserve(params.N);
    for (size_t i = params.L; i < params.L + params.T; ++i) pos.push_back(i);
    size_t n = params.n();
    for (size_t i = n - params.L - params.T; i < n; ++i) pos.push_back(i);
    return pos;
}

std::vector<RRFunction> lagrange_basis_f(const SchemeParams& params, const CurveTable& table,
                                         const PointAssignment& assignment) {
    auto basis = monomial_basis(params.q, params.m);
    size_t k = params.L + params.T;
    if (basis.size() != k) throw HeraError("|I(m)| != L+T");
    FieldMatrix V = eval_matrix(table, assignment, basis, 0, k);
    return basis_from_system(table.field(), params.m, V, k);
}

std::vector<RRFunction> lagrange_basis_g(const SchemeParams& params, const CurveTable& table,
                                         const PointAssignment& assignment) {
    auto basis = monomial_basis(params.q, params.m_perp);
    size_t n = params.n();
    size_t rows = n - params.L - params.T; // L+T delta constraints + n-2(L+T) zeros
    if (basis.size() != rows) throw HeraError("|I(m_perp)| != q^3 - L - T");
    FieldMatrix V = eval_matrix(table, assignment, basis, 0, rows);
    return basis_from_system(table.field(), params.m_perp, V, params.L + params.T);
}

size_t TmdsReport::passed_count() const {
    size_t c = 0;
    for (const auto& e : entries)
        if (e.full_rank) ++c;
    return c;
}

TmdsReport audit_tmds(const SchemeParams& params, const CurveTable& table,
                      const PointAssignment& assignment,
                      const std::vector<RRFunction>& mask_basis, const std::string& label) {
    if (mask_basis.size() != params.T) throw ParamError("mask basis must have T functions");
    auto servers = server_positions(params);
    const Field& field = table.field();

    // Precompute mask-basis evaluations at every server point.
    std::vector<std::vector<FieldElement>> evals(params.N, std::vector<FieldElement>(params.T));
    for (size_t s = 0; s < params.N; ++s) {
        const CurvePoint& p = table.point(assignment.canon(servers[s]));
        for (size_t t = 0; t < params.T; ++t) evals[s][t] = mask_basis[t].eval_scalar(p);
    }

    TmdsReport report;
    report.label = label;
    for_each_subset(params.N, params.T, [&](const std::vector<size_t>& subset) {
        FieldMatrix M(field, params.T, params.T);
        for (size_t t = 0; t < params.T; ++t)
            for (size_t u = 0; u < params.T; ++u) M.set(t, u, evals[subset[u]][t]);
        size_t r = M.rank();
        std::vector<size_t> subset_pos;
        for (size_t u : subset) subset_pos.push_back(servers[u]);
        bool full = (r == params.T);
        report.entries.push_back({subset_pos, r, full});
        if (!full) report.pass = false;
    });
    return report;
}

namespace {

// Both interpolation systems must be invertible before the Lagrange bases
// exist; checked cheaply via rank before solving.
bool assignment_feasible(const SchemeParams& params, const CurveTable& table,
                         const PointAssignment& assignment, std::string* why) {
    auto basis_f = monomial_basis(params.q, params.m);
    size_t k = params.L + params.T;
    FieldMatrix Vf = eval_matrix(table, assignment, basis_f, 0, k);
    if (Vf.rank() != k) {
        if (why) *why = "singular: f interpolation matrix of I(m) at points 1..L+T";
        return false;
    }
    auto basis_g = monomial_basis(params.q, params.m_perp);
    size_t rows = params.n() - params.L - params.T;
    FieldMatrix Vg = eval_matrix(table, assignment, basis_g, 0, rows);
    if (Vg.rank() != rows) {
        if (why) *why = "singular: g interpolation matrix of I(m_perp) at points 1..q^3-L-T";
        return false;
    }
    return true;
}

bool assignment_secure(const SchemeParams& params, const CurveTable& table,
                       const PointAssignment& assignment, std::string* why) {
    auto fb = lagrange_basis_f(params, table, assignment);
    std::vector<RRFunction> f_masks(fb.begin() + params.L, fb.end());
    if (!audit_tmds(params, table, assignment, f_masks, "f").pass) {
        if (why) *why = "audit: f mask basis fails the T-MDS condition";
        return false;
    }
    auto gb = lagrange_basis_g(params, table, assignment);
    std::vector<RRFunction> g_masks(gb.begin() + params.L, gb.end());
    if (!audit_tmds(params, table, assignment, g_masks, "g").pass) {
        if (why) *why = "audit: g mask basis fails the T-MDS condition";
        return false;
    }
    return true;
}

} // namespace

PointAssignment assign_points(const SchemeParams& params, const CurveTable& table, uint64_t seed,
                              const std::optional<std::vector<size_t>>& override_order,
                              bool require_tmds) {
    size_t n = params.n();
    if (override_order) {
        if (override_order->size() != n)
            throw ParamError("override must list all q^3 points exactly once");
        std::vector<bool> seen(n, false);
        for (size_t idx : *override_order) {
            if (idx >= n || seen[idx])
                throw ParamError("override must be a permutation of the q^3 canonical indices");
            seen[idx] = true;
        }
        PointAssignment assignment{*override_order};
        std::string why;
        if (!assignment_feasible(params, table, assignment, &why)) throw SingularError(why);
        if (require_tmds && !assignment_secure(params, table, assignment, &why))
            throw AuditError(why);
        return assignment;
    }

    CounterRng rng(seed);
    std::string last_why = "no attempt made";
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PointAssignment assignment{rng.permutation(n)};
        if (!assignment_feasible(params, table, assignment, &last_why)) continue;
        if (require_tmds && !assignment_secure(params, table, assignment, &last_why)) continue;
        return assignment;
    }
    throw SingularError("assign_points: retry cap (1000) exhausted; last failure: " + last_why);
}

EncodedPair encode_with_masks(const SchemeParams& params, const CurveTable& table,
                              const PointAssignment& assignment, const FieldMatrix& A,
                              const FieldMatrix& B, std::vector<FieldMatrix> masks_R,
                              std::vector<FieldMatrix> masks_S) {
    if (A.rows() != params.a || A.cols() != params.b)
        throw ParamError("A must be a x b");
    if (B.rows() != params.b || B.cols() != params.c)
        throw ParamError("B must be b x c");
    if (masks_R.size() != params.T || masks_S.size() != params.T)
        throw ParamError("need T masks for each side");
    size_t w = params.block_cols();

    std::vector<FieldMatrix> f_blocks, g_blocks;
    for (size_t i = 0; i < params.L; ++i) {
        f_blocks.push_back(A.col_block(i * w, w));
        g_blocks.push_back(B.row_block(i * w, w));
    }
    for (size_t t = 0; t < params.T; ++t) {
        if (masks_R[t].rows() != params.a || masks_R[t].cols() != w)
            throw ParamError("R mask shape mismatch");
        if (masks_S[t].rows() != w || masks_S[t].cols() != params.c)
            throw ParamError("S mask shape mismatch");
        f_blocks.push_back(masks_R[t]);
        g_blocks.push_back(masks_S[t]);
    }

    auto fb = lagrange_basis_f(params, table, assignment);
    auto gb = lagrange_basis_g(params, table, assignment);
    RRFunction f = rr_combine(fb, f_blocks);
    RRFunction g = rr_combine(gb, g_blocks);

    // Re-check every interpolation constraint by evaluation.
    for (size_t j = 0; j < params.L + params.T; ++j) {
        const CurvePoint& p = table.point(assignment.canon(j));
        if (f.eval(p) != f_blocks[j]) throw HeraError("encode: f interpolation constraint violated");
        if (g.eval(p) != g_blocks[j]) throw HeraError("encode: g interpolation constraint violated");
    }
    for (size_t j = params.L + params.T; j < params.n() - params.L - params.T; ++j) {
        if (!g.eval(table.point(assignment.canon(j))).is_zero())
            throw HeraError("encode: g does not vanish at a zero point");
    }

    return EncodedPair{std::move(f), std::move(g), std::move(masks_R), std::move(masks_S)};
}

EncodedPair encode(const SchemeParams& params, const CurveTable& table,
                   const PointAssignment& assignment, const FieldMatrix& A, const FieldMatrix& B,
                   CounterRng& rng) {
    size_t w = params.block_cols();
    uint32_t order = params.field->order();
    std::vector<FieldMatrix> masks_R, masks_S;
    for (size_t t = 0; t < params.T; ++t) {
        FieldMatrix R(params.field, params.a, w);
        for (size_t i = 0; i < params.a; ++i)
            for (size_t j = 0; j < w; ++j) R.set_enc(i, j, uint32_t(rng.below(order)));
        masks_R.push_back(std::move(R));
    }
    for (size_t t = 0; t < params.T; ++t) {
        FieldMatrix S(params.field, w, params.c);
        for (size_t i = 0; i < w; ++i)
            for (size_t j = 0; j < params.c; ++j) S.set_enc(i, j, uint32_t(rng.below(order)));
        masks_S.push_back(std::move(S));
    }
    return encode_with_masks(params, table, assignment, A, B, std::move(masks_R),
                             std::move(masks_S));
}

FieldMatrix decode(const SchemeParams& params, const std::vector<FieldMatrix>& responses) {
    if (responses.size() != params.N) {
        std::ostringstream os;
        os << "expected " << params.N << " responses, got " << responses.size();
        throw ParamError(os.str());
    }
    FieldMatrix acc(params.field, params.a, params.c);
    for (const auto& r : responses) {
        if (r.rows() != params.a || r.cols() != params.c)
            throw ParamError("response shape mismatch");
        acc = acc + r;
    }
    return acc;
}

LeakageReport leakage_experiment(const SchemeParams& params, const CurveTable& table,
                                 const PointAssignment& assignment, const FieldMatrix& A,
                                 const FieldMatrix& A_alt, const FieldMatrix& B,
                                 const FieldMatrix& B_alt) {
    if (params.a != 1 || params.c != 1 || params.b != params.L)
        throw ParamError("leakage experiment requires a = c = 1 and b = L (1x1 blocks)");
    uint32_t order = params.field->order();
    uint64_t tuples = 1;
    for (size_t t = 0; t < params.T; ++t) {
        tuples *= order;
        if (tuples > 4096) throw ParamError("leakage enumeration guard exceeded ((q^2)^T > 4096)");
    }

    auto fb = lagrange_basis_f(params, table, assignment);
    auto gb = lagrange_basis_g(params, table, assignment);
    auto servers = server_positions(params);

    // evals[which][s][i]: basis_i evaluated at server s; which = 0 for f, 1 for g.
    std::vector<std::vector<std::vector<uint32_t>>> evals(2);
    for (int which = 0; which < 2; ++which) {
        const auto& basis = which == 0 ? fb : gb;
        evals[which].assign(params.N, std::vector<uint32_t>(params.L + params.T));
        for (size_t s = 0; s < params.N; ++s) {
            const CurvePoint& p = table.point(assignment.canon(servers[s]));
            for (size_t i = 0; i < params.L + params.T; ++i)
                evals[which][s][i] = basis[i].eval_scalar(p).enc();
        }
    }

    const Field& field = params.field;
    auto histogram = [&](int which, const FieldMatrix& input,
                         const std::vector<size_t>& subset) {
        // Joint distribution of shares at the subset over all mask tuples.
        std::vector<uint64_t> counts(tuples, 0);
        std::vector<uint32_t> mask(params.T, 0);
        for (uint64_t tup = 0; tup < tuples; ++tup) {
            uint64_t v = tup;
            for (size_t t = 0; t < params.T; ++t) {
                mask[t] = uint32_t(v % order);
                v /= order;
            }
            uint64_t key = 0;
            for (size_t u = subset.size(); u-- > 0;) {
                size_t s = subset[u];
                uint32_t share = 0;
                for (size_t i = 0; i < params.L; ++i) {
                    uint32_t data = which == 0 ? input.enc_at(0, i) : input.enc_at(i, 0);
                    share = field->add(share, field->mul(evals[which][s][i], data));
                }
                for (size_t t = 0; t < params.T; ++t)
                    share = field->add(share, field->mul(evals[which][s][params.L + t], mask[t]));
                key = key * order + share;
            }
            counts[key]++;
        }
        return counts;
    };

    LeakageReport report;
    for (int which = 0; which < 2; ++which) {
        std::string label = which == 0 ? "f" : "g";
        const FieldMatrix& in1 = which == 0 ? A : B;
        const FieldMatrix& in2 = which == 0 ? A_alt : B_alt;
        for_each_subset(params.N, params.T, [&](const std::vector<size_t>& subset_idx) {
            std::vector<size_t> subset(subset_idx.begin(), subset_idx.end());
            auto h1 = histogram(which, in1, subset);
            auto h2 = histogram(which, in2, subset);
            bool uniform = true;
            for (uint64_t c : h1)
                if (c != 1) uniform = false;
            bool independent = (h1 == h2);
            std::vector<size_t> subset_pos;
            for (size_t u : subset) subset_pos.push_back(servers[u]);
            report.entries.push_back({label, subset_pos, uniform, independent});
            if (!uniform || !independent) report.pass = false;
        });
    }
    return report;
}

} // namespace hera
