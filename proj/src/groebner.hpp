#pragma once

#include <map>
#include <vector>

#include "poly.hpp"

namespace toric {

// Resource budget for basis computations; exceeding it throws BudgetError.
struct Budget {
    uint64_t pair_budget = 2'000'000;
    int64_t degree_cap = 64;
};

// Ideal with per-order cache of reduced Groebner bases.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const;

    // Reduced Groebner basis (monic, pairwise normal, sorted by leading
    // term), unique per order.
    const std::vector<Polynomial>& groebner(const MonomialOrder& ord,
                                            const Budget& budget = Budget{}) const;

    bool contains(const Polynomial& f, const Budget& budget = Budget{}) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::map<std::string, std::vector<Polynomial>> gb_cache_;
};

// Remainder of F on division by G; no remainder term is divisible by any
// leading term of G, and F - remainder lies in <G>.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                       const MonomialOrder& ord);

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord,
                                   const Budget& budget = Budget{});

// Generators of I intersected with the subring omitting the dropped
// variables; the result lives in the contracted ring.
Ideal eliminate(const Ideal& ideal, const std::vector<size_t>& drop,
                const Budget& budget = Budget{});

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = Budget{});

// I : f and I : J (intersection over generators of J).
Ideal colon(const Ideal& ideal, const Polynomial& f, const Budget& budget = Budget{});
Ideal colon(const Ideal& ideal, const Ideal& divisor, const Budget& budget = Budget{});

Ideal saturate(const Ideal& ideal, const Ideal& divisor, const Budget& budget = Budget{});

// Equality via reduced Groebner bases under canonical lex.
bool ideal_equal(const Ideal& a, const Ideal& b, const Budget& budget = Budget{});

// Standard monomials of beta-degree alpha: the degree-alpha monomials not
// divisible by any leading term of the canonical Groebner basis.
std::vector<Monomial> quotient_graded_basis(const Ideal& ideal, const DegVec& alpha,
                                            const Budget& budget = Budget{});

// Exact division h / f; throws if f does not divide h.
Polynomial exact_divide(const Polynomial& h, const Polynomial& f);

// Map a polynomial into another ring by variable name; every variable
// occurring in f must exist in the target.
Polynomial map_to_ring(const Polynomial& f, const RingPtr& target);

}  // namespace toric
