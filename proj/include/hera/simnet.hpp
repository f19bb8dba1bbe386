#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hera/scheme.hpp"

namespace hera {

/// Exact rational, always normalized with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

/// What one server holds and returns.
struct ServerShare {
    size_t server_index;  // 0..N-1
    size_t position;      // position in the assignment order
    size_t canon_index;   // canonical point index
    FieldMatrix f_share;  // a x (b/L)
    FieldMatrix g_share;  // (b/L) x c
    FieldMatrix response; // a x c, -(f_share . g_share)
};

struct CostSummary {
    uint64_t upload_symbols;    // N (ab/L + bc/L)
    uint64_t download_symbols;  // N a c
    uint64_t retrieved_symbols; // a c
    Rational rate;              // retrieved / (upload + download)
    uint64_t bytes_per_symbol;  // ceil(log2(q^2) / 8)
};

/// Full record of one protocol run.
struct Transcript {
    SchemeParams params;
    uint64_t seed;
    std::vector<size_t> assignment_order;
    bool responses_negated = true; // servers return -h(P); decoder only sums
    std::vector<ServerShare> shares;
    FieldMatrix decoded;
    CostSummary costs;

    std::string to_text() const;
    std::string to_json() const;
};

/// Upload -> compute -> download -> decode, all in process. Responses are
/// summed in server-index order but the result is order-independent.
Transcript run_protocol(const SchemeParams& params, const CurveTable& table,
                        const PointAssignment& assignment, const FieldMatrix& A,
                        const FieldMatrix& B, uint64_t seed);

/// Closed-form total communication rate (Nb/L (1/a + 1/c) + N)^-1 as an
/// exact rational.
Rational rate_eval(const SchemeParams& params);

/// First-principles accounting for the same parameters.
CostSummary cost_accounting(const SchemeParams& params);

} // namespace hera
