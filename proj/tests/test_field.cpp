#include "doctest.h"

#include "hera/field.hpp"
#include "hera/matrix.hpp"

#include <set>

using namespace hera;

TEST_CASE("F4 construction and arithmetic") {
    Field f4 = FieldSpec::make(2, 2, {1, 1, 1});
    CHECK(f4->order() == 4);
    FieldElement d = f4->element(2); // delta
    CHECK((d * d).enc() == 3);       // delta^2 = delta + 1
    CHECK((f4->one() / d).enc() == 3);
    CHECK((d * f4->element(3)).enc() == 1); // delta * delta^2 = 1
}

TEST_CASE("reducible modulus rejected") {
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 0, 1}), ParamError); // (z+1)^2
    CHECK_THROWS_AS(FieldSpec::make(4, 2, {1, 1, 1}), ParamError); // p not prime
    CHECK_THROWS_AS(FieldSpec::make(2, 2, {1, 1, 0}), ParamError); // not monic
}

TEST_CASE("F9 default modulus has primitive z") {
    Field f9 = FieldSpec::make_default(3, 2);
    CHECK(f9->modulus() == std::vector<uint32_t>{2, 2, 1});
    // brute-force powering: z must generate all 8 nonzero elements
    FieldElement z = f9->element(3);
    std::set<uint32_t> seen;
    FieldElement acc = f9->one();
    for (int i = 0; i < 8; ++i) {
        acc = acc * z;
        seen.insert(acc.enc());
    }
    CHECK(seen.size() == 8);
    CHECK(acc.is_one());
}

TEST_CASE("frobenius against repeated-multiplication oracle") {
    Field f9 = FieldSpec::make_default(3, 2);
    FieldElement z = f9->element(3);
    FieldElement cube = z * z * z; // oracle
    CHECK(cube.enc() == 7);        // 2z+1
    CHECK(z.frobenius_q() == cube);
    // frobenius is an involution on GF(q^2)
    for (auto field : {FieldSpec::make_default(2, 2), f9, FieldSpec::make_default(2, 4)}) {
        for (uint32_t e = 0; e < field->order(); ++e) {
            FieldElement x = field->element(e);
            CHECK(x.frobenius_q().frobenius_q() == x);
        }
    }
}

TEST_CASE("frobenius requires even degree") {
    Field f5 = FieldSpec::make_default(5, 1);
    CHECK_THROWS_AS(f5->element(2).frobenius_q(), ParamError);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (auto field :
         {FieldSpec::make_default(2, 2), FieldSpec::make_default(3, 2), FieldSpec::make_default(5, 2)}) {
        uint32_t n = field->order();
        for (uint32_t a = 0; a < n; ++a) {
            FieldElement x = field->element(a);
            CHECK((x + (-x)).is_zero());
            if (a) CHECK((x * x.inv()).is_one());
            for (uint32_t b = 0; b < n; ++b) {
                FieldElement y = field->element(b);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (uint32_t c = 0; c < n; c += 3) { // sampled third operand
                    FieldElement w = field->element(c);
                    CHECK((x + y) + w == x + (y + w));
                    CHECK((x * y) * w == x * (y * w));
                    CHECK(x * (y + w) == x * y + x * w);
                }
            }
        }
    }
}

TEST_CASE("encoding round-trips through coefficients") {
    Field f16 = FieldSpec::make_default(2, 4);
    for (uint32_t e = 0; e < 16; ++e) {
        auto c = f16->element(e).coeffs();
        uint32_t enc = 0;
        for (size_t i = c.size(); i-- > 0;) enc = enc * 2 + c[i];
        CHECK(enc == e);
    }
}

TEST_CASE("spec mismatch rejected") {
    Field a = FieldSpec::make_default(2, 2);
    Field b = FieldSpec::make_default(3, 2);
    CHECK_THROWS_AS(a->element(1) + b->element(1), ParamError);
    CHECK_THROWS_AS(a->element(1) / a->element(0), HeraError);
}

TEST_CASE("mat_solve identity and verified solve") {
    Field f4 = FieldSpec::make_default(2, 2);
    FieldMatrix I = FieldMatrix::identity(f4, 3);
    FieldMatrix rhs = FieldMatrix::from_rows(f4, {{1, 2}, {3, 0}, {2, 2}});
    CHECK(I.solve(rhs) == rhs);

    FieldMatrix M = FieldMatrix::from_rows(f4, {{1, 2}, {2, 1}});
    FieldMatrix r = FieldMatrix::from_rows(f4, {{1}, {0}});
    FieldMatrix X = M.solve(r);
    CHECK(M * X == r);
}

TEST_CASE("singular solve throws") {
    Field f4 = FieldSpec::make_default(2, 2);
    FieldMatrix M = FieldMatrix::from_rows(f4, {{1, 2}, {1, 2}});
    FieldMatrix r = FieldMatrix::from_rows(f4, {{1}, {0}});
    CHECK_THROWS_AS(M.solve(r), SingularError);
}

TEST_CASE("rank basics") {
    Field f4 = FieldSpec::make_default(2, 2);
    CHECK(FieldMatrix(f4, 3, 5).rank() == 0);
    CHECK(FieldMatrix::identity(f4, 4).rank() == 4);
}

namespace {

// Oracle: rank r iff the row space has exactly order^r distinct vectors.
size_t rank_bruteforce(const FieldMatrix& m) {
    const Field& f = m.spec();
    size_t combos = 1;
    for (size_t i = 0; i < m.rows(); ++i) combos *= f->order();
    std::set<std::vector<uint32_t>> space;
    for (size_t mask = 0; mask < combos; ++mask) {
        size_t rem = mask;
        std::vector<uint32_t> v(m.cols(), 0);
        for (size_t i = 0; i < m.rows(); ++i) {
            uint32_t coef = uint32_t(rem % f->order());
            rem /= f->order();
            for (size_t j = 0; j < m.cols(); ++j)
                v[j] = f->add(v[j], f->mul(coef, m.enc_at(i, j)));
        }
        space.insert(v);
    }
    size_t r = 0, sz = 1;
    while (sz < space.size()) {
        sz *= f->order();
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("rank matches brute-force row-space oracle") {
    Field f4 = FieldSpec::make_default(2, 2);
    uint64_t state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return uint32_t((state >> 33) % 4);
    };
    for (int trial = 0; trial < 30; ++trial) {
        FieldMatrix m(f4, 3 + trial % 2, 4);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) m.set_enc(i, j, rnd());
        CHECK(m.rank() == rank_bruteforce(m));
    }
}

TEST_CASE("matrix shape errors") {
    Field f4 = FieldSpec::make_default(2, 2);
    FieldMatrix a(f4, 2, 3), b(f4, 2, 3);
    CHECK_THROWS_AS(a * b, ParamError);
    CHECK_THROWS_AS(a.solve(b), ParamError);
}
