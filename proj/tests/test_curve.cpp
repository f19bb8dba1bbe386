#include "doctest.h"

#include "hera/curve.hpp"

#include <set>

using namespace hera;

TEST_CASE("H_2 has exactly the eight known points") {
    Field f4 = FieldSpec::for_hermitian(2);
    CurveTable table(f4);
    CHECK(table.size() == 8);
    CHECK(table.q() == 2);
    CHECK(table.genus() == 1);
    // (alpha enc, beta enc) in canonical order: y^2 + y = x^3 over F4
    std::vector<std::pair<uint32_t, uint32_t>> expect = {
        {0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(table.point(i).alpha.enc() == expect[i].first);
        CHECK(table.point(i).beta.enc() == expect[i].second);
    }
}

TEST_CASE("point counts and membership for q = 2, 3, 4") {
    for (uint32_t q : {2u, 3u, 4u}) {
        Field field = FieldSpec::for_hermitian(q);
        CurveTable table(field);
        CHECK(table.size() == size_t(q) * q * q);
        std::set<std::pair<uint32_t, uint32_t>> seen;
        for (size_t i = 0; i < table.size(); ++i) {
            const CurvePoint& p = table.point(i);
            CHECK(table.on_curve(p.alpha, p.beta));
            CHECK(table.index_of(p) == i);
            seen.insert({p.alpha.enc(), p.beta.enc()});
        }
        CHECK(seen.size() == table.size()); // all distinct
        // canonical order is lexicographic by (enc(alpha), enc(beta))
        for (size_t i = 1; i < table.size(); ++i) {
            auto a = std::make_pair(table.point(i - 1).alpha.enc(), table.point(i - 1).beta.enc());
            auto b = std::make_pair(table.point(i).alpha.enc(), table.point(i).beta.enc());
            CHECK(a < b);
        }
    }
}

TEST_CASE("H_3 contains (2,2)") {
    Field f9 = FieldSpec::for_hermitian(3);
    CurveTable table(f9);
    CHECK(table.on_curve(f9->element(2), f9->element(2)));
    CHECK_FALSE(table.on_curve(f9->element(1), f9->element(1)));
    CHECK_THROWS_AS(table.index_of({f9->element(1), f9->element(1)}), ParamError);
}

TEST_CASE("gamma sets have size q and trace-kernel closure") {
    for (uint32_t q : {2u, 3u, 4u}) {
        Field field = FieldSpec::for_hermitian(q);
        for (uint32_t e = 0; e < field->order(); ++e) {
            FieldElement alpha = field->element(e);
            auto gamma = gamma_set(field, alpha);
            CHECK(gamma.size() == q);
            FieldElement target = alpha.pow(q + 1);
            for (const auto& beta : gamma)
                CHECK(beta.pow(q) + beta == target);
            // any two members differ by a trace-zero element
            for (const auto& b1 : gamma)
                for (const auto& b2 : gamma) {
                    FieldElement d = b1 - b2;
                    CHECK((d.pow(q) + d).is_zero());
                }
        }
    }
}

TEST_CASE("gamma examples over F4") {
    Field f4 = FieldSpec::for_hermitian(2);
    auto g0 = gamma_set(f4, f4->zero());
    CHECK(g0.size() == 2);
    std::set<uint32_t> encs0;
    for (const auto& b : g0) encs0.insert(b.enc());
    CHECK(encs0 == std::set<uint32_t>{0, 1});
    auto g1 = gamma_set(f4, f4->one());
    std::set<uint32_t> encs1;
    for (const auto& b : g1) encs1.insert(b.enc());
    CHECK(encs1 == std::set<uint32_t>{2, 3}); // delta, delta^2
}

TEST_CASE("curve requires a quadratic extension field") {
    Field f5 = FieldSpec::make_default(5, 1);
    CHECK_THROWS_AS(CurveTable{f5}, ParamError);
}
