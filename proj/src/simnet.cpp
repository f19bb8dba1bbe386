#include "hera/simnet.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace hera {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw ParamError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational rate_eval(const SchemeParams& params) {
    if (params.a == 0 || params.b == 0 || params.c == 0) throw ParamError("zero dimension");
    // (Nb/L (1/a + 1/c) + N)^-1 = Lac / (N b (a+c) + N L a c)
    long long L = (long long)params.L, N = (long long)params.N;
    long long a = (long long)params.a, b = (long long)params.b, c = (long long)params.c;
    return Rational(L * a * c, N * b * (a + c) + N * L * a * c);
}

CostSummary cost_accounting(const SchemeParams& params) {
    uint64_t w = params.block_cols();
    uint64_t up = uint64_t(params.N) * (params.a * w + w * params.c);
    uint64_t down = uint64_t(params.N) * params.a * params.c;
    uint64_t got = uint64_t(params.a) * params.c;
    Rational rate((long long)got, (long long)(up + down));
    uint64_t bits = (uint64_t)std::ceil(std::log2(double(params.field->order())));
    uint64_t bytes = (bits + 7) / 8;
    return CostSummary{up, down, got, rate, bytes};
}

Transcript run_protocol(const SchemeParams& params, const CurveTable& table,
                        const PointAssignment& assignment, const FieldMatrix& A,
                        const FieldMatrix& B, uint64_t seed) {
    CounterRng rng(seed);
    EncodedPair pair = encode(params, table, assignment, A, B, rng);

    auto servers = server_positions(params);
    std::vector<ServerShare> shares;
    shares.reserve(params.N);
    std::vector<FieldMatrix> responses;
    for (size_t s = 0; s < params.N; ++s) {
        size_t pos = servers[s];
        size_t canon = assignment.canon(pos);
        const CurvePoint& p = table.point(canon);
        FieldMatrix fs = pair.f.eval(p);
        FieldMatrix gs = pair.g.eval(p);
        FieldMatrix resp = -(fs * gs);
        responses.push_back(resp);
        shares.push_back({s, pos, canon, std::move(fs), std::move(gs), std::move(resp)});
    }

    FieldMatrix decoded = decode(params, responses);
    return Transcript{params, seed, assignment.order, true, std::move(shares), std::move(decoded),
                      cost_accounting(params)};
}

namespace {

void write_matrix_csv(std::ostream& os, const FieldMatrix& m, const std::string& indent) {
    for (size_t i = 0; i < m.rows(); ++i) {
        os << indent;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m.enc_at(i, j);
        }
        os << "\n";
    }
}

nlohmann::json matrix_json(const FieldMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m.to_rows()) rows.push_back(r);
    return rows;
}

} // namespace

std::string Transcript::to_text() const {
    std::ostringstream os;
    os << "[params]\n";
    os << "field=" << params.field->tag() << "\n";
    os << "q=" << params.q << " L=" << params.L << " T=" << params.T << " m=" << params.m
       << " m_perp=" << params.m_perp << " N=" << params.N << "\n";
    os << "a=" << params.a << " b=" << params.b << " c=" << params.c << "\n";
    os << "seed=" << seed << "\n";
    os << "responses_negated=" << (responses_negated ? 1 : 0) << "\n";
    os << "\n[assignment]\n";
    for (size_t i = 0; i < assignment_order.size(); ++i) {
        if (i) os << ",";
        os << assignment_order[i];
    }
    os << "\n";
    os << "\n[upload]\n";
    for (const auto& s : shares) {
        os << "server " << s.server_index << " point " << s.canon_index << " f_share:\n";
        write_matrix_csv(os, s.f_share, "  ");
        os << "server " << s.server_index << " g_share:\n";
        write_matrix_csv(os, s.g_share, "  ");
    }
    os << "\n[download]\n";
    for (const auto& s : shares) {
        os << "server " << s.server_index << " response:\n";
        write_matrix_csv(os, s.response, "  ");
    }
    os << "\n[decoded]\n";
    write_matrix_csv(os, decoded, "");
    os << "\n[costs]\n";
    os << "upload_symbols=" << costs.upload_symbols << "\n";
    os << "download_symbols=" << costs.download_symbols << "\n";
    os << "retrieved_symbols=" << costs.retrieved_symbols << "\n";
    os << "rate=" << costs.rate.str() << "\n";
    os << "bytes_per_symbol=" << costs.bytes_per_symbol << "\n";
    return os.str();
}

std::string Transcript::to_json() const {
    nlohmann::json j;
    j["params"] = {{"field", params.field->tag()}, {"q", params.q},   {"L", params.L},
                   {"T", params.T},                {"m", params.m},   {"m_perp", params.m_perp},
                   {"N", params.N},                {"a", params.a},   {"b", params.b},
                   {"c", params.c},                {"seed", seed}};
    j["responses_negated"] = responses_negated;
    j["assignment"] = assignment_order;
    nlohmann::json js = nlohmann::json::array();
    for (const auto& s : shares) {
        js.push_back({{"server", s.server_index},
                      {"point", s.canon_index},
                      {"f_share", matrix_json(s.f_share)},
                      {"g_share", matrix_json(s.g_share)},
                      {"response", matrix_json(s.response)}});
    }
    j["servers"] = js;
    j["decoded"] = matrix_json(decoded);
    j["costs"] = {{"upload_symbols", costs.upload_symbols},
                  {"download_symbols", costs.download_symbols},
                  {"retrieved_symbols", costs.retrieved_symbols},
                  {"rate", costs.rate.str()},
                  {"bytes_per_symbol", costs.bytes_per_symbol}};
    return j.dump(2);
}

} // namespace hera
