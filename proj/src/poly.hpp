#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"

namespace toric {

using Exp = uint16_t;
using DegVec = std::vector<int64_t>;

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(ErrorCode::Schema, msg) {}
};

// Exponent vector of length r.
struct Monomial {
    std::vector<Exp> exps;

    static Monomial one(size_t r) { return Monomial{std::vector<Exp>(r, 0)}; }

    size_t nvars() const { return exps.size(); }
    int64_t total_degree() const;
    bool is_one() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;  // overflow-checked
    Monomial operator/(const Monomial& m) const;  // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& b) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Total multiplicative well-orders on monomials.
//
// Lex compares exponents along the priority list `perm` (perm[0] biggest).
// Block is an elimination order: degrevlex on the first `block_split`
// variables of `perm`, ties broken by degrevlex on the rest. Any monomial
// containing an eliminated variable is greater than any monomial without.
struct MonomialOrder {
    enum class Kind { Lex, Block };
    Kind kind = Kind::Lex;
    std::vector<uint32_t> perm;
    size_t block_split = 0;

    static MonomialOrder lex(size_t r);
    static MonomialOrder lex_perm(std::vector<uint32_t> perm);
    static MonomialOrder block(std::vector<uint32_t> perm, size_t split);

    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    // Stable key for Groebner-basis caches.
    std::string key() const;
};

// Polynomial ring F_q[x_1..x_r] graded by a d x r matrix beta with
// non-negative integer entries (column j = degree of variable j).
// beta may be empty, giving the ungraded helper rings used during
// elimination.
class GradedRing {
public:
    GradedRing(std::shared_ptr<const FiniteField> field,
               std::vector<std::string> var_names,
               std::vector<DegVec> beta);

    const FiniteField& field() const { return *field_; }
    std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
    size_t nvars() const { return var_names_.size(); }
    size_t d() const { return beta_.size(); }
    bool graded() const { return !beta_.empty(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::vector<DegVec>& beta() const { return beta_; }
    std::optional<size_t> var_index(const std::string& name) const;

    DegVec beta_degree(const Monomial& m) const;

    bool same_ring(const GradedRing& o) const;

private:
    std::shared_ptr<const FiniteField> field_;
    std::vector<std::string> var_names_;
    std::vector<DegVec> beta_;  // d rows of length r
};

using RingPtr = std::shared_ptr<const GradedRing>;

struct Term {
    Monomial m;
    uint32_t c;  // nonzero field element value
};

// Sparse polynomial; terms sorted descending under canonical lex
// (x_1 > x_2 > ... ), no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, uint32_t c);
    static Polynomial monomial(RingPtr ring, Monomial m, uint32_t c = 1);
    static Polynomial variable(RingPtr ring, size_t j);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(uint32_t c) const;
    Polynomial times_monomial(const Monomial& m, uint32_t c = 1) const;
    Polynomial negated() const;
    bool operator==(const Polynomial& o) const;

    // Monic under canonical lex.
    Polynomial monic() const;

    // beta-degree common to all terms, if any (zero polynomial counts as
    // homogeneous of unconstrained degree).
    std::optional<DegVec> homogeneous_degree() const;
    bool is_homogeneous() const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    uint32_t evaluate_values(const std::vector<uint32_t>& point) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Text parser per the documented grammar. Variables must exist in the
// ring; `a` denotes the modulus root for extension fields.
Polynomial parse_polynomial(const std::string& src, RingPtr ring);

// All monomials of beta-degree exactly alpha, exponent vectors in
// ascending lexicographic order.
std::vector<Monomial> graded_monomial_basis(const RingPtr& ring, const DegVec& alpha);

std::string monomial_to_string(const GradedRing& ring, const Monomial& m);

}  // namespace toric
