#include "hera/field.hpp"

#include <algorithm>
#include <sstream>

namespace hera {

namespace {

// Dense polynomial arithmetic over GF(p), coefficients in [0, p).
using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_trim(r);
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    a = poly_trim(a);
    while (a.size() >= b.size()) {
        uint32_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint32_t v = (lead * b[i]) % p;
            a[i + shift] = (a[i + shift] + p - v) % p;
        }
        a = poly_trim(a);
    }
    return a;
}

Poly enc_to_poly(uint32_t enc, uint32_t p) {
    Poly c;
    while (enc) {
        c.push_back(enc % p);
        enc /= p;
    }
    return c;
}

uint32_t poly_to_enc(const Poly& c, uint32_t p) {
    uint32_t enc = 0;
    for (size_t i = c.size(); i-- > 0;) enc = enc * p + c[i];
    return enc;
}

bool poly_is_irreducible(const Poly& f, uint32_t p) {
    // Trial division by every monic polynomial of degree 1..deg/2.
    // Desk-scale fields only, so brute force is fine.
    size_t deg = f.size() - 1;
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t e = 0; e < count; ++e) {
            Poly g = enc_to_poly(uint32_t(e), p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void factor_prime_power(uint32_t n, uint32_t& p, uint32_t& e) {
    if (n < 2) throw ParamError("not a prime power: " + std::to_string(n));
    for (uint32_t d = 2; d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            e = 0;
            uint32_t m = n;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            if (m != 1) throw ParamError("not a prime power: " + std::to_string(n));
            return;
        }
    }
    throw ParamError("not a prime power: " + std::to_string(n));
}

FieldSpec::FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    order_ = 1;
    for (uint32_t i = 0; i < k_; ++i) order_ *= p_;
    build_tables();
}

Field FieldSpec::make(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) throw ParamError("p must be prime, got " + std::to_string(p));
    if (k < 1) throw ParamError("extension degree must be >= 1");
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw ParamError("modulus must be monic of degree k");
    for (uint32_t c : modulus)
        if (c >= p) throw ParamError("modulus coefficients must lie in [0, p)");
    if (!poly_is_irreducible(modulus, p)) {
        std::ostringstream os;
        os << "modulus is reducible over GF(" << p << ")";
        throw ParamError(os.str());
    }
    uint64_t order = 1;
    for (uint32_t i = 0; i < k; ++i) order *= p;
    if (order > 4096) throw ParamError("field order too large for table-based arithmetic");
    return Field(new FieldSpec(p, k, modulus));
}

Field FieldSpec::make_default(uint32_t p, uint32_t k) {
    if (k == 1) {
        if (!is_prime(p)) throw ParamError("p must be prime, got " + std::to_string(p));
        return make(p, 1, {0, 1});
    }
    // Conway polynomials, constant term first.
    if (p == 2 && k == 2) return make(2, 2, {1, 1, 1});
    if (p == 3 && k == 2) return make(3, 2, {2, 2, 1});
    if (p == 2 && k == 4) return make(2, 4, {1, 1, 0, 0, 1});
    if (p == 5 && k == 2) return make(5, 2, {2, 4, 1});
    throw ParamError("no built-in modulus for GF(" + std::to_string(p) + "^" +
                     std::to_string(k) + ")");
}

Field FieldSpec::for_hermitian(uint32_t q) {
    uint32_t p = 0, e = 0;
    factor_prime_power(q, p, e);
    return make_default(p, 2 * e);
}

void FieldSpec::build_tables() {
    size_t n = order_;
    add_.resize(n * n);
    mul_.resize(n * n);
    neg_.resize(n);
    inv_.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
        Poly pa = enc_to_poly(a, p_);
        // negation
        Poly na = pa;
        for (auto& c : na) c = (p_ - c) % p_;
        neg_[a] = poly_to_enc(na, p_);
        for (uint32_t b = 0; b < n; ++b) {
            Poly pb = enc_to_poly(b, p_);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < pa.size(); ++i) s[i] = pa[i];
            for (size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p_;
            add_[idx(a, b)] = poly_to_enc(poly_trim(s), p_);
            mul_[idx(a, b)] = poly_to_enc(poly_mod(poly_mul(pa, pb, p_), modulus_, p_), p_);
        }
    }
    for (uint32_t a = 1; a < n; ++a)
        for (uint32_t b = 1; b < n; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = b;
                break;
            }
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw HeraError("division by zero");
    return inv_[a];
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t FieldSpec::subfield_q() const {
    if (k_ % 2 != 0)
        throw ParamError("field GF(" + std::to_string(p_) + "^" + std::to_string(k_) +
                         ") has odd degree, no GF(q^2) structure");
    uint32_t q = 1;
    for (uint32_t i = 0; i < k_ / 2; ++i) q *= p_;
    return q;
}

FieldElement FieldSpec::element(uint32_t enc) const {
    if (enc >= order_) throw ParamError("encoding out of range");
    return FieldElement(shared_from_this(), enc);
}

std::string FieldSpec::tag() const {
    std::ostringstream os;
    os << p_ << "," << k_ << ",";
    for (uint32_t c : modulus_) os << c;
    return os.str();
}

bool FieldSpec::same(const FieldSpec& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
}

FieldElement::FieldElement(Field spec, uint32_t enc) : spec_(std::move(spec)), enc_(enc) {
    if (enc_ >= spec_->order()) throw ParamError("encoding out of range");
}

std::vector<uint32_t> FieldElement::coeffs() const {
    std::vector<uint32_t> c(spec_->k(), 0);
    uint32_t e = enc_;
    for (uint32_t i = 0; i < spec_->k(); ++i) {
        c[i] = e % spec_->p();
        e /= spec_->p();
    }
    return c;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same(*b.spec()))
        throw ParamError("field spec mismatch");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(spec_, spec_->add(enc_, o.enc_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(spec_, spec_->sub(enc_, o.enc_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(spec_, spec_->mul(enc_, o.enc_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(*this, o);
    return FieldElement(spec_, spec_->div(enc_, o.enc_));
}

FieldElement FieldElement::operator-() const {
    return FieldElement(spec_, spec_->neg(enc_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return spec_ && o.spec_ && spec_->same(*o.spec_) && enc_ == o.enc_;
}

FieldElement FieldElement::pow(uint64_t e) const {
    return FieldElement(spec_, spec_->pow(enc_, e));
}

FieldElement FieldElement::inv() const {
    return FieldElement(spec_, spec_->inv(enc_));
}

FieldElement FieldElement::frobenius_q() const {
    return pow(spec_->subfield_q());
}

} // namespace hera
