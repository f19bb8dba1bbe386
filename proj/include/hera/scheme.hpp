#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hera/hermcode.hpp"
#include "hera/rng.hpp"

namespace hera {

/// Validated HerA parameters. m = L + T + g - 1 with g the curve genus,
/// m_perp its dual parameter, N = L + 2T servers.
struct SchemeParams {
    uint32_t q;
    size_t L;
    size_t T;
    int64_t m;
    int64_t m_perp;
    size_t N;
    size_t a, b, c;
    Field field;

    size_t n() const { return size_t(q) * q * q; }
    size_t block_cols() const { return b / L; } // A_i is a x (b/L), B_i is (b/L) x c
};

/// params_validate: reject with the violated constraint named in the message.
SchemeParams params_validate(uint32_t q, size_t L, size_t T, size_t a, size_t b, size_t c);

/// Ordered q^3 points split into roles. Positions are 0-based into `order`,
/// which holds canonical point indices:
///   [0, L)                         data points
///   [L, L+T)                       mask points (servers)
///   [L+T, n-L-T)                   zero points (g vanishes)
///   [n-L-T, n)                     tail points (servers)
struct PointAssignment {
    std::vector<size_t> order; // permutation of 0..q^3-1 canonical indices

    size_t canon(size_t pos) const { return order[pos]; }
};

/// Positions (into assignment.order) of the N = L+2T server points.
std::vector<size_t> server_positions(const SchemeParams& params);

/// T-MDS audit report: one entry per T-subset of servers.
struct TmdsReport {
    std::string label; // "f" or "g"
    struct Entry {
        std::vector<size_t> subset; // server positions
        size_t rank;
        bool full_rank;
    };
    std::vector<Entry> entries;
    bool pass = true;
    size_t passed_count() const;
};

/// Lagrange-style bases: basis_f[i] in L(m P_inf) with f_i(P_j) = delta_ij on
/// the first L+T points; basis_g[i] additionally vanishes at all zero points.
std::vector<RRFunction> lagrange_basis_f(const SchemeParams& params, const CurveTable& table,
                                         const PointAssignment& assignment);
std::vector<RRFunction> lagrange_basis_g(const SchemeParams& params, const CurveTable& table,
                                         const PointAssignment& assignment);

/// Full-rank test of [basis_t(P_i)] over every T-subset of server points.
/// `mask_basis` is the list of T mask functions (scalar RRFunctions).
TmdsReport audit_tmds(const SchemeParams& params, const CurveTable& table,
                      const PointAssignment& assignment,
                      const std::vector<RRFunction>& mask_basis, const std::string& label);

/// Choose a point assignment: either validate an explicit override or
/// rejection-sample seeded permutations until both interpolation systems are
/// invertible and both T-MDS audits pass (cap 1000 attempts).
///
/// require_tmds = false drops the T-MDS gate, keeping only the invertibility
/// gates the protocol itself needs. For several parameter sets — (2,1,2),
/// (3,4,3), (3,6,3) among them — no point order can satisfy the T-MDS
/// condition at all (the T server-evaluation columns would have to form an
/// arc in PG(T-1, q^2) larger than the maximum possible), so decoding-only
/// runs need this relaxation; audit_tmds still reports the true security
/// status of whatever assignment is used.
PointAssignment assign_points(const SchemeParams& params, const CurveTable& table, uint64_t seed,
                              const std::optional<std::vector<size_t>>& override_order = {},
                              bool require_tmds = true);

/// Encoded pair (f, g) plus the masks that went into them.
struct EncodedPair {
    RRFunction f; // a x (b/L) blocks, in L(m P_inf)
    RRFunction g; // (b/L) x c blocks, in L(m_perp P_inf)
    std::vector<FieldMatrix> masks_R;
    std::vector<FieldMatrix> masks_S;
};

/// Build f and g from A, B and fresh uniform masks; every interpolation
/// constraint is re-checked by evaluation before returning.
EncodedPair encode(const SchemeParams& params, const CurveTable& table,
                   const PointAssignment& assignment, const FieldMatrix& A, const FieldMatrix& B,
                   CounterRng& rng);

/// Deterministic variant with caller-provided masks (test hook).
EncodedPair encode_with_masks(const SchemeParams& params, const CurveTable& table,
                              const PointAssignment& assignment, const FieldMatrix& A,
                              const FieldMatrix& B, std::vector<FieldMatrix> masks_R,
                              std::vector<FieldMatrix> masks_S);

/// Sum the N server responses (each already carries the minus sign,
/// response_i = -f(P_i) g(P_i)); equals A.B for honest responses.
FieldMatrix decode(const SchemeParams& params, const std::vector<FieldMatrix>& responses);

/// Exhaustive share-uniformity check at 1x1 scale: enumerate every mask
/// tuple, tabulate the joint share distribution per T-subset of servers,
/// and require exact uniformity plus input independence.
struct LeakageReport {
    struct Entry {
        std::string label;          // "f" or "g"
        std::vector<size_t> subset; // server positions
        bool uniform;
        bool input_independent;
    };
    std::vector<Entry> entries;
    bool pass = true;
};

LeakageReport leakage_experiment(const SchemeParams& params, const CurveTable& table,
                                 const PointAssignment& assignment, const FieldMatrix& A,
                                 const FieldMatrix& A_alt, const FieldMatrix& B,
                                 const FieldMatrix& B_alt);

} // namespace hera
