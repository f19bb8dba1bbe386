#include "doctest.h"

#include "hera/rrspace.hpp"

#include <set>

using namespace hera;

TEST_CASE("monomial basis examples for q = 2") {
    auto b3 = monomial_basis(2, 3);
    REQUIRE(b3.size() == 3);
    CHECK(b3[0] == Monomial{0, 0}); // 1
    CHECK(b3[1] == Monomial{1, 0}); // x
    CHECK(b3[2] == Monomial{0, 1}); // y

    auto b5 = monomial_basis(2, 5);
    REQUIRE(b5.size() == 5);
    CHECK(b5[0] == Monomial{0, 0});
    CHECK(b5[1] == Monomial{1, 0});
    CHECK(b5[2] == Monomial{0, 1});
    CHECK(b5[3] == Monomial{2, 0}); // x^2
    CHECK(b5[4] == Monomial{1, 1}); // xy

    CHECK(monomial_basis(2, -1).empty());
    CHECK(monomial_basis(3, -1).empty());
}

TEST_CASE("rr_dim examples") {
    CHECK(rr_dim(2, 3) == 3);
    CHECK(rr_dim(3, 6) == 4);
    CHECK(rr_dim(3, 25) == 23);
    CHECK(rr_dim(3, 25) == monomial_basis(3, 25).size());
    CHECK(rr_dim(2, -1) == 0);
    CHECK(rr_dim(2, 100) == 8); // beyond s, full space
}

TEST_CASE("basis size equals rr_dim for 0 <= m < q^3") {
    for (uint32_t q : {2u, 3u, 4u}) {
        int64_t n = int64_t(q) * q * q;
        for (int64_t m = 0; m < n; ++m)
            CHECK(monomial_basis(q, m).size() == rr_dim(q, m));
        // at m = q^3 the count over-counts by the evaluation kernel
        int64_t s = n + int64_t(q) * q - q - 2;
        CHECK(rr_dim(q, n) == size_t(n) - monomial_basis(q, s - n).size());
        CHECK(rr_dim(q, n) < monomial_basis(q, n).size());
    }
}

TEST_CASE("pole orders are distinct and ascending") {
    for (uint32_t q : {2u, 3u, 4u}) {
        int64_t s = int64_t(q) * q * q + int64_t(q) * q - q - 2;
        auto basis = monomial_basis(q, s);
        std::set<uint32_t> orders;
        for (size_t t = 0; t < basis.size(); ++t) {
            orders.insert(basis[t].pole_order(q));
            CHECK(basis[t].j <= q - 1);
            CHECK(basis[t].pole_order(q) <= uint64_t(s));
            if (t) CHECK(basis[t - 1].pole_order(q) < basis[t].pole_order(q));
        }
        CHECK(orders.size() == basis.size());
    }
}

TEST_CASE("nesting: I(m') is a prefix of I(m) for m' <= m") {
    for (uint32_t q : {2u, 3u}) {
        int64_t n = int64_t(q) * q * q;
        auto full = monomial_basis(q, n);
        for (int64_t mp = 0; mp <= n; ++mp) {
            auto sub = monomial_basis(q, mp);
            for (size_t t = 0; t < sub.size(); ++t)
                CHECK(sub[t] == full[t]);
        }
    }
}

TEST_CASE("evaluation of scalar functions") {
    Field f4 = FieldSpec::for_hermitian(2);
    CurveTable table(f4);
    // f = 1 + (1+d)x + y  evaluated at P00 = (0,0) gives 1, at (1,d) gives 1+(1+d)+d = 0
    RRFunction f = RRFunction::scalar(f4, 3, {1, 3, 1});
    CHECK(f.eval_scalar(table.point(0)).enc() == 1);
    CHECK(f.eval_scalar({f4->one(), f4->element(2)}).is_zero());
    // zero coefficients evaluate to zero everywhere
    RRFunction z = RRFunction::scalar(f4, 5, {0, 0, 0, 0, 0});
    for (size_t i = 0; i < table.size(); ++i) CHECK(z.eval_scalar(table.point(i)).is_zero());
}

TEST_CASE("evaluation is linear") {
    Field f9 = FieldSpec::for_hermitian(3);
    CurveTable table(f9);
    RRFunction f = RRFunction::scalar(f9, 6, {1, 3, 7, 2});
    RRFunction g = RRFunction::scalar(f9, 6, {5, 0, 2, 8});
    RRFunction sum = rr_add(f, g);
    for (size_t i = 0; i < table.size(); ++i) {
        const CurvePoint& p = table.point(i);
        CHECK(sum.eval_scalar(p) == f.eval_scalar(p) + g.eval_scalar(p));
    }
}

TEST_CASE("rr_combine forms block linear combinations") {
    Field f4 = FieldSpec::for_hermitian(2);
    CurveTable table(f4);
    RRFunction f1 = RRFunction::scalar(f4, 3, {1, 3, 1});
    RRFunction f2 = RRFunction::scalar(f4, 3, {0, 2, 1});
    FieldMatrix A1 = FieldMatrix::from_rows(f4, {{1, 2}});
    FieldMatrix A2 = FieldMatrix::from_rows(f4, {{3, 0}});
    RRFunction f = rr_combine({f1, f2}, {A1, A2});
    for (size_t i = 0; i < table.size(); ++i) {
        const CurvePoint& p = table.point(i);
        FieldMatrix want = A1.scaled(f1.eval_scalar(p)) + A2.scaled(f2.eval_scalar(p));
        CHECK(f.eval(p) == want);
    }
}

TEST_CASE("shape and basis mismatches rejected") {
    Field f4 = FieldSpec::for_hermitian(2);
    CHECK_THROWS_AS(RRFunction::scalar(f4, 3, {1, 2}), ParamError); // wrong length
    RRFunction a = RRFunction::scalar(f4, 3, {1, 0, 0});
    RRFunction b = RRFunction::scalar(f4, 5, {1, 0, 0, 0, 0});
    CHECK_THROWS_AS(rr_add(a, b), ParamError);
}
