#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hera/errors.hpp"

namespace hera {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// An element of GF(p^k), stored as its canonical integer encoding
/// enc(c0 + c1 z + ... + c_{k-1} z^{k-1}) = sum c_i p^i.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field spec, uint32_t enc);

    uint32_t enc() const { return enc_; }
    const Field& spec() const { return spec_; }
    std::vector<uint32_t> coeffs() const;

    bool is_zero() const { return enc_ == 0; }
    bool is_one() const { return enc_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement pow(uint64_t e) const;
    FieldElement inv() const;

    /// e -> e^q with q = p^(k/2); requires even extension degree.
    FieldElement frobenius_q() const;

private:
    Field spec_;
    uint32_t enc_ = 0;
};

/// Immutable description of GF(p^k) with full arithmetic tables.
/// Construct through the factory functions; elements keep the spec alive
/// via shared ownership.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Build GF(p^k) from an explicit monic irreducible modulus
    /// (k+1 coefficients, constant term first). Verifies primality of p and
    /// irreducibility of the modulus by trial division.
    static Field make(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus);

    /// Build GF(p^k) with the built-in (Conway) modulus. Supported for k = 1
    /// (any prime p) and (p,k) in {(2,2),(3,2),(2,4),(5,2)}.
    static Field make_default(uint32_t p, uint32_t k);

    /// The field GF(q^2) used by the Hermitian curve H_q, for a prime power q.
    static Field for_hermitian(uint32_t q);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t order() const { return order_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// p^(k/2); throws ParamError when k is odd.
    uint32_t subfield_q() const;

    FieldElement element(uint32_t enc) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    // Arithmetic on canonical encodings.
    uint32_t add(uint32_t a, uint32_t b) const { return add_[idx(a, b)]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add_[idx(a, neg_[b])]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[idx(a, b)]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Header tag "p,k,digits" with the modulus coefficients as digits
    /// (constant term first).
    std::string tag() const;

    bool same(const FieldSpec& o) const;

private:
    FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
    size_t idx(uint32_t a, uint32_t b) const { return size_t(a) * order_ + b; }
    void build_tables();

    uint32_t p_, k_, order_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> add_, mul_, neg_, inv_;
};

bool is_prime(uint32_t n);

/// Decompose a prime power n = p^e; throws ParamError otherwise.
void factor_prime_power(uint32_t n, uint32_t& p, uint32_t& e);

} // namespace hera
