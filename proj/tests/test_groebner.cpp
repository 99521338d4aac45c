#include <doctest.h>

#include <algorithm>
#include <random>

#include "groebner.hpp"

using namespace toric;

namespace {

RingPtr plain_ring(uint64_t p, std::vector<std::string> names) {
    auto F = std::make_shared<const FiniteField>(p, 1);
    return std::make_shared<GradedRing>(F, std::move(names), std::vector<DegVec>{});
}

RingPtr hirzebruch_ring(uint64_t p, int64_t ell) {
    auto F = std::make_shared<const FiniteField>(p, 1);
    return std::make_shared<GradedRing>(F, std::vector<std::string>{"x1", "x2", "x3", "x4"},
                                        std::vector<DegVec>{{1, 0, 1, ell}, {0, 1, 0, 1}});
}

const Term& lead(const Polynomial& f, const MonomialOrder& ord) {
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (ord.greater(t.m, best->m)) best = &t;
    return *best;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Term& lf = lead(f, ord);
    const Term& lg = lead(g, ord);
    Monomial l = Monomial::lcm(lf.m, lg.m);
    const auto& F = f.ring()->field();
    return f.times_monomial(l / lf.m, F.inv(lf.c)) - g.times_monomial(l / lg.m, F.inv(lg.c));
}

}  // namespace

TEST_CASE("normal form strips multiples") {
    auto ring = hirzebruch_ring(5, 3);
    auto ord = MonomialOrder::lex(4);
    Polynomial f1 = parse_polynomial("x1^5*x3-x1*x3^5", ring);
    Polynomial f = parse_polynomial("x2", ring) * f1 + parse_polynomial("x4", ring);
    Polynomial r = normal_form(f, {f1}, ord);
    CHECK(r == parse_polynomial("x4", ring));
    CHECK(normal_form(f1, {f1}, ord).is_zero());
}

TEST_CASE("reduced basis properties") {
    auto ring = plain_ring(7, {"x1", "x2", "x3"});
    std::vector<Polynomial> gens{
        parse_polynomial("x1^2+x2*x3-1", ring),
        parse_polynomial("x1*x2^2-x3", ring),
        parse_polynomial("x2*x3^2-x1+2", ring),
    };
    auto ord = MonomialOrder::lex(3);
    Ideal I(ring, gens);
    const auto& gb = I.groebner(ord);

    for (const auto& g : gb) {
        CHECK(lead(g, ord).c == 1);
        // No term of g is divisible by another leading term.
        for (const auto& h : gb) {
            if (&g == &h) continue;
            for (const auto& t : g.terms()) CHECK_FALSE(lead(h, ord).m.divides(t.m));
        }
    }
    // Buchberger criterion: all S-polynomials reduce to zero.
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j)
            CHECK(normal_form(spoly(gb[i], gb[j], ord), gb, ord).is_zero());

    // Uniqueness under generator reordering.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(Ideal(ring, shuffled).groebner(ord) == gb);
    }
}

TEST_CASE("elimination finds the twisted cubic relation") {
    auto ring = plain_ring(101, {"x", "y", "z"});
    Ideal I(ring, {parse_polynomial("y-x^2", ring), parse_polynomial("z-x^3", ring)});
    Ideal J = eliminate(I, {0});  // drop x
    REQUIRE(J.ring()->nvars() == 2);
    Polynomial rel = parse_polynomial("z^2-y^3", J.ring());
    CHECK(J.contains(rel));
    CHECK(ideal_equal(J, Ideal(J.ring(), {rel})));
}

TEST_CASE("intersect and colon on monomial ideals") {
    auto ring = plain_ring(3, {"x1", "x2"});
    Ideal A(ring, {parse_polynomial("x1^2", ring)});
    Ideal B(ring, {parse_polynomial("x1*x2", ring)});
    CHECK(ideal_equal(intersect(A, B), Ideal(ring, {parse_polynomial("x1^2*x2", ring)})));
    Ideal C(ring, {parse_polynomial("x1^2*x2", ring)});
    CHECK(ideal_equal(colon(C, parse_polynomial("x1", ring)),
                      Ideal(ring, {parse_polynomial("x1*x2", ring)})));
}

TEST_CASE("saturation removes all powers") {
    auto ring = plain_ring(5, {"x1", "x2"});
    Ideal I(ring, {parse_polynomial("x1^3*x2", ring)});
    Ideal x1(ring, {parse_polynomial("x1", ring)});
    Ideal sat = saturate(I, x1);
    CHECK(ideal_equal(sat, Ideal(ring, {parse_polynomial("x2", ring)})));
    // One colon step is not enough here, saturation is.
    CHECK_FALSE(ideal_equal(colon(I, parse_polynomial("x1", ring)), sat));
}

TEST_CASE("membership agrees with an evaluation check") {
    auto ring = plain_ring(3, {"x1", "x2", "x3"});
    Ideal I(ring, {parse_polynomial("x1^3-x1", ring), parse_polynomial("x2^3-x2", ring),
                   parse_polynomial("x3^3-x3", ring)});
    // Vanishes on all of F_3^3, so it lies in the ideal of the whole space.
    Polynomial f = parse_polynomial("x1^3*x2-x1*x2+x1*x3^3-x1*x3", ring);
    bool vanishes = true;
    for (uint32_t a = 0; a < 3; ++a)
        for (uint32_t b = 0; b < 3; ++b)
            for (uint32_t c = 0; c < 3; ++c)
                if (f.evaluate_values({a, b, c}) != 0) vanishes = false;
    CHECK(vanishes);
    CHECK(I.contains(f));
    CHECK_FALSE(I.contains(parse_polynomial("x1^2", ring)));
}

TEST_CASE("graded quotient basis") {
    auto ring = hirzebruch_ring(3, 2);
    Polynomial f1 = parse_polynomial("x1^3*x3-x1*x3^3", ring);
    Ideal I(ring, {f1});
    auto basis = quotient_graded_basis(I, {4, 0});
    // Degree (4,0) monomials: x1^a x3^c, a+c=4; x1^3*x3 is the lone leading term.
    REQUIRE(basis.size() == 4);
    std::vector<std::string> names;
    for (const auto& m : basis) names.push_back(monomial_to_string(*ring, m));
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"x1*x3^3", "x1^2*x3^2", "x1^4", "x3^4"});

    Ideal bad(ring, {parse_polynomial("x1+x2", ring)});
    CHECK_THROWS_AS(quotient_graded_basis(bad, {4, 0}), DomainError);
}

TEST_CASE("exact division") {
    auto ring = plain_ring(7, {"x1", "x2"});
    Polynomial f = parse_polynomial("x1^2-x2^2", ring);
    Polynomial g = parse_polynomial("x1+x2", ring);
    CHECK(exact_divide(f, g) == parse_polynomial("x1-x2", ring));
    CHECK_THROWS_AS(exact_divide(parse_polynomial("x1^2+1", ring), g), DomainError);
}

TEST_CASE("pair budget is enforced") {
    auto ring = plain_ring(7, {"x1", "x2", "x3"});
    Ideal I(ring, {parse_polynomial("x1^2+x2*x3", ring), parse_polynomial("x1*x2^2-x3", ring),
                   parse_polynomial("x2*x3^2-x1", ring)});
    Budget tiny{.pair_budget = 1, .degree_cap = 64};
    CHECK_THROWS_AS(I.groebner(MonomialOrder::lex(3), tiny), BudgetError);
}

TEST_CASE("map_to_ring relocates by variable name") {
    auto src = plain_ring(5, {"x2", "x1"});
    auto dst = plain_ring(5, {"x1", "x2", "x3"});
    Polynomial f = parse_polynomial("x1^2+2*x2", src);
    Polynomial g = map_to_ring(f, dst);
    CHECK(g == parse_polynomial("x1^2+2*x2", dst));
    CHECK_THROWS_AS(map_to_ring(parse_polynomial("x3", dst), src), DomainError);
}
