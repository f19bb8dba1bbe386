#include "doctest.h"

#include "hera/hermcode.hpp"

using namespace hera;

namespace {

std::shared_ptr<const CurveTable> table_for(uint32_t q) {
    return std::make_shared<CurveTable>(FieldSpec::for_hermitian(q));
}

} // namespace

TEST_CASE("dual_m examples and involution") {
    CHECK(dual_m(2, 3) == 5);
    CHECK(dual_m(3, 6) == 25);
    CHECK(dual_m(2, 4) == 4);
    for (uint32_t q : {2u, 3u, 4u}) {
        int64_t s = int64_t(q) * q * q + int64_t(q) * q - q - 2;
        for (int64_t m = 0; m <= s; ++m) CHECK(dual_m(q, dual_m(q, m)) == m);
    }
    CHECK_THROWS_AS(dual_m(2, -1), ParamError);
    CHECK_THROWS_AS(dual_m(2, 9), ParamError);
}

TEST_CASE("generator shapes and ranks") {
    auto t2 = table_for(2);
    HermitianCode c3 = code_build(t2, 3);
    CHECK(c3.gen.rows() == 3);
    CHECK(c3.gen.cols() == 8);
    CHECK(c3.gen.rank() == c3.dim());
    HermitianCode c5 = code_build(t2, 5);
    CHECK(c5.gen.rows() == 5);
    CHECK(c5.gen.rank() == 5);

    auto t3 = table_for(3);
    HermitianCode c6 = code_build(t3, 6);
    CHECK(c6.gen.rows() == 4);
    CHECK(c6.gen.cols() == 27);
    CHECK(c6.gen.rank() == 4);
}

TEST_CASE("rank equals rr_dim across the full parameter range") {
    // independent oracle: the generator rank IS the code dimension
    for (uint32_t q : {2u, 3u}) {
        auto t = table_for(q);
        int64_t s = int64_t(q) * q * q + int64_t(q) * q - q - 2;
        for (int64_t m = 0; m <= s; ++m) {
            HermitianCode c = code_build(t, m);
            CHECK(c.gen.rank() == rr_dim(q, m));
        }
    }
}

TEST_CASE("dual pairs are orthogonal for every m (q = 2 and 3)") {
    for (uint32_t q : {2u, 3u}) {
        auto t = table_for(q);
        int64_t s = int64_t(q) * q * q + int64_t(q) * q - q - 2;
        for (int64_t m = 0; m <= s; ++m) {
            HermitianCode a = code_build(t, m);
            HermitianCode b = code_build(t, dual_m(q, m));
            CHECK(dual_check(a, b));
        }
    }
}

TEST_CASE("self-duality at m = s/2") {
    auto t2 = table_for(2);
    HermitianCode c4 = code_build(t2, 4);
    CHECK(c4.self_dual());
    CHECK(c4.self_orthogonal());
    CHECK(dual_check(c4, c4));
    HermitianCode c5 = code_build(t2, 5);
    CHECK_FALSE(c5.self_orthogonal());
    CHECK_FALSE(dual_check(c5, c5));
}

TEST_CASE("brute-force minimum distance meets the designed distance (q=2)") {
    auto t2 = table_for(2);
    for (int64_t m = 2; m <= 6; ++m) {
        HermitianCode c = code_build(t2, m);
        CHECK(min_distance_bruteforce(c) == size_t(8 - m));
        CHECK(c.d_star() == 8 - m);
    }
    // m = 0: only constant functions, full-weight codewords
    HermitianCode c0 = code_build(t2, 0);
    CHECK(min_distance_bruteforce(c0) == 8);
}

TEST_CASE("minimum-distance witness has the reported weight") {
    auto t2 = table_for(2);
    HermitianCode c = code_build(t2, 5);
    std::vector<uint32_t> witness;
    size_t d = min_distance_bruteforce(c, witness);
    CHECK(d == 3);
    REQUIRE(witness.size() == 8);
    size_t w = 0;
    for (uint32_t e : witness)
        if (e) ++w;
    CHECK(w == d);
}

TEST_CASE("distance enumeration guard") {
    auto t3 = table_for(3);
    HermitianCode big = code_build(t3, 20); // dim 18, 9^18 codewords
    CHECK_THROWS_AS(min_distance_bruteforce(big), ParamError);
}

TEST_CASE("code nesting: C(m') is a subcode of C(m) for m' <= m") {
    auto t2 = table_for(2);
    HermitianCode outer = code_build(t2, 6);
    for (int64_t mp = 0; mp <= 6; ++mp) {
        HermitianCode inner = code_build(t2, mp);
        // stacking the generators must not increase the rank
        FieldMatrix stacked(outer.gen.spec(), inner.gen.rows() + outer.gen.rows(), 8);
        for (size_t i = 0; i < inner.gen.rows(); ++i)
            for (size_t j = 0; j < 8; ++j) stacked.set_enc(i, j, inner.gen.enc_at(i, j));
        for (size_t i = 0; i < outer.gen.rows(); ++i)
            for (size_t j = 0; j < 8; ++j)
                stacked.set_enc(inner.gen.rows() + i, j, outer.gen.enc_at(i, j));
        CHECK(stacked.rank() == outer.gen.rank());
    }
}
