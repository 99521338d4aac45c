#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace toric {

class FiniteField;

// Element of a finite field, stored as a reduced representative.
// The value encodes the coefficient vector (c_0,...,c_{k-1}) over Z/p
// as v = c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
struct FieldElement {
    const FiniteField* field = nullptr;
    uint32_t v = 0;

    bool is_zero() const { return v == 0; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

// GF(p^k) with full add/mul tables; immutable after construction.
class FiniteField {
public:
    // Deterministic modulus: the monic irreducible of degree k over GF(p)
    // whose low-coefficient encoding is smallest (identity x for k=1).
    FiniteField(uint64_t p, uint32_t k, uint64_t max_q = 1024);

    uint64_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t q() const { return q_; }

    // Modulus coefficients c_0..c_k (monic, c_k = 1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    bool same_field(const FiniteField& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    // Raw value arithmetic, values in [0, q).
    uint32_t add(uint32_t a, uint32_t b) const { return add_[idx(a, b)]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add_[idx(a, neg_[b])]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[idx(a, b)]; }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, int64_t e) const;

    // Image of an integer under Z -> GF(p) -> GF(p^k).
    uint32_t from_int(int64_t n) const;

    FieldElement element(uint32_t v) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    // All q elements, zero first, in coefficient-vector order.
    std::vector<FieldElement> enumerate() const;

    // Coefficients c_0..c_{k-1} of the element as a polynomial in the
    // modulus root.
    std::vector<uint32_t> coeffs(uint32_t v) const;

    // Rendering like "2" or "a+1"; "a" denotes the modulus root.
    std::string to_string(uint32_t v) const;

private:
    size_t idx(uint32_t a, uint32_t b) const {
        if (a >= q_ || b >= q_) throw DomainError("element value out of range");
        return static_cast<size_t>(a) * q_ + b;
    }

    uint64_t p_;
    uint32_t k_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> add_;
    std::vector<uint32_t> mul_;
    std::vector<uint32_t> neg_;
    std::vector<uint32_t> inv_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);

}  // namespace toric
