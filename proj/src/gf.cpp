#include "gf.hpp"

#include <algorithm>

namespace toric {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense GF(p)[x] polynomials as coefficient vectors, low degree first.
using PPoly = std::vector<uint32_t>;

void trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>(
                (c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    trim(c);
    return c;
}

uint32_t mod_inv(uint32_t a, uint64_t p) {
    // p prime, a != 0
    uint32_t r = 1;
    uint64_t base = a, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<uint32_t>(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// Remainder of a mod b, b nonzero.
PPoly pmod(PPoly a, const PPoly& b, uint64_t p) {
    trim(a);
    uint32_t lead_inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
        uint32_t c = static_cast<uint32_t>(
            static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Decode value -> coefficient vector of length len.
PPoly decode(uint64_t v, uint64_t p, uint32_t len) {
    PPoly c(len, 0);
    for (uint32_t i = 0; i < len; ++i) {
        c[i] = static_cast<uint32_t>(v % p);
        v /= p;
    }
    return c;
}

uint64_t encode(const PPoly& c, uint64_t p) {
    uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

bool is_irreducible(const PPoly& f, uint64_t p) {
    // Trial division by all monic polynomials of degree 1..deg/2.
    uint32_t deg = static_cast<uint32_t>(f.size() - 1);
    for (uint32_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            PPoly g = decode(v, p, d);
            g.push_back(1);  // monic
            if (pmod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(uint64_t p, uint32_t k, uint64_t max_q) : p_(p), k_(k) {
    if (!is_prime(p)) throw DomainError("NotPrime: " + std::to_string(p));
    if (k < 1) throw DomainError("DegreeZero: extension degree must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > max_q)
            throw DomainError("field size exceeds configured cap " +
                              std::to_string(max_q));
    }

    if (k == 1) {
        modulus_ = {0, 1};  // x
    } else {
        uint64_t count = q_;  // p^k choices of lower coefficients
        for (uint64_t v = 0; v < count; ++v) {
            PPoly f = decode(v, p, k);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }

    // Tables.
    size_t q = static_cast<size_t>(q_);
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (size_t a = 0; a < q; ++a) {
        PPoly ca = decode(a, p, k);
        PPoly na(k);
        for (uint32_t i = 0; i < k; ++i)
            na[i] = static_cast<uint32_t>((p - ca[i]) % p);
        neg_[a] = static_cast<uint32_t>(encode(na, p));
        for (size_t b = 0; b < q; ++b) {
            PPoly cb = decode(b, p, k);
            PPoly s(k);
            for (uint32_t i = 0; i < k; ++i)
                s[i] = static_cast<uint32_t>((ca[i] + cb[i]) % p);
            add_[a * q + b] = static_cast<uint32_t>(encode(s, p));
            PPoly m = pmul(ca, cb, p);
            trim(m);
            if (!m.empty() && m.size() > k) m = pmod(m, modulus_, p);
            m.resize(k, 0);
            mul_[a * q + b] = static_cast<uint32_t>(encode(m, p));
        }
    }
    for (size_t a = 1; a < q; ++a) {
        for (size_t b = 1; b < q; ++b) {
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<uint32_t>(b);
                break;
            }
        }
    }
}

uint32_t FiniteField::inv(uint32_t a) const {
    if (a == 0) throw DomainError("DivisionByZero");
    if (a >= q_) throw DomainError("element value out of range");
    return inv_[a];
}

uint32_t FiniteField::pow(uint32_t a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint32_t r = 1, base = a;
    uint64_t ue = static_cast<uint64_t>(e);
    while (ue) {
        if (ue & 1) r = mul(r, base);
        base = mul(base, base);
        ue >>= 1;
    }
    return r;
}

uint32_t FiniteField::from_int(int64_t n) const {
    int64_t m = n % static_cast<int64_t>(p_);
    if (m < 0) m += static_cast<int64_t>(p_);
    return static_cast<uint32_t>(m);
}

FieldElement FiniteField::element(uint32_t v) const {
    if (v >= q_) throw DomainError("element value out of range");
    return FieldElement{this, v};
}

std::vector<FieldElement> FiniteField::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(q_));
    for (uint32_t v = 0; v < q_; ++v) out.push_back(FieldElement{this, v});
    return out;
}

std::vector<uint32_t> FiniteField::coeffs(uint32_t v) const {
    std::vector<uint32_t> c(k_);
    uint64_t x = v;
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = static_cast<uint32_t>(x % p_);
        x /= p_;
    }
    return c;
}

std::string FiniteField::to_string(uint32_t v) const {
    if (k_ == 1) return std::to_string(v);
    auto c = coeffs(v);
    std::string s;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += "a";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field && o.field && field->same_field(*o.field) && v == o.v;
}

namespace {
void check_match(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field || !a.field->same_field(*b.field))
        throw DomainError("FieldMismatch");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_match(a, b);
    return FieldElement{a.field, a.field->add(a.v, b.v)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_match(a, b);
    return FieldElement{a.field, a.field->sub(a.v, b.v)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_match(a, b);
    return FieldElement{a.field, a.field->mul(a.v, b.v)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_match(a, b);
    return FieldElement{a.field, a.field->div(a.v, b.v)};
}

}  // namespace toric
