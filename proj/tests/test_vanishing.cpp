#include <doctest.h>

#include <algorithm>
#include <set>

#include "vanishing.hpp"

using namespace toric;

namespace {

bool vanishes_on(const Ideal& I, const std::vector<std::vector<uint32_t>>& pts) {
    for (const auto& g : I.gens())
        for (const auto& p : pts)
            if (g.evaluate_values(p) != 0) return false;
    return true;
}

bool all_homogeneous(const Ideal& I) {
    return std::all_of(I.gens().begin(), I.gens().end(),
                       [](const Polynomial& g) { return g.is_homogeneous(); });
}

}  // namespace

TEST_CASE("affine cellular ideal vanishes exactly on the right points") {
    auto field = std::make_shared<const FiniteField>(3, 1);
    IntMat beta{{1, 0, 1, 2}, {0, 1, 0, 1}};
    Ideal I = affine_cellular_ideal(field, beta);
    CHECK(all_homogeneous(I));

    auto pts = enumerate_region_points(field, beta, Region::Affine);
    CHECK(pts.size() == 81);
    CHECK(vanishes_on(I, pts));
    // Exactness: membership in I equals vanishing everywhere, sampled on
    // all monomials of a fixed degree.
    auto ring = make_cox_ring(field, beta);
    for (const auto& m : graded_monomial_basis(ring, {3, 1})) {
        Polynomial f = Polynomial::monomial(ring, m);
        bool v = true;
        for (const auto& p : pts)
            if (f.evaluate_values(p) != 0) v = false;
        CHECK(I.contains(f) == v);
    }
}

TEST_CASE("parameterized ideal vanishes on the image") {
    auto field = std::make_shared<const FiniteField>(3, 1);
    IntMat beta{{1, 0, 1, 2}, {0, 1, 0, 1}};
    RationalMap map;
    map.s = 4;
    map.f = {"1+y1", "1", "y3", "1+y3"};
    map.g = {"y2", "1", "1", "y4"};
    Ideal I = parameterized_vanishing_ideal(field, beta, map);
    CHECK(all_homogeneous(I));
    auto pts = enumerate_region_points(field, beta, Region::Image, map);
    CHECK_FALSE(pts.empty());
    CHECK(vanishes_on(I, pts));

    // Exactness on the image: a monomial lies in the ideal iff it vanishes
    // on every image point.
    auto ring = make_cox_ring(field, beta);
    for (const auto& m : graded_monomial_basis(ring, {2, 1})) {
        Polynomial f = Polynomial::monomial(ring, m);
        bool v = true;
        for (const auto& p : pts)
            if (f.evaluate_values(p) != 0) v = false;
        CHECK(I.contains(f) == v);
    }
}

TEST_CASE("cell and point ideals") {
    auto field = std::make_shared<const FiniteField>(3, 1);
    IntMat beta{{1, 0, 1, 2}, {0, 1, 0, 1}};
    Support eps = Support::normalized({0, 2});

    Ideal cell = cell_ideal(field, beta, eps);
    std::vector<std::vector<uint32_t>> cell_pts;
    for (const auto& p : enumerate_region_points(field, beta, Region::Affine))
        if (Support::of_point(p).epsilon == eps.epsilon) cell_pts.push_back(p);
    CHECK(cell_pts.size() == 4);
    CHECK(vanishes_on(cell, cell_pts));

    // The orbit ideal of P vanishes exactly on the orbit of P within the cell.
    std::vector<uint32_t> P{2, 0, 1, 0};
    Ideal orb = point_orbit_ideal(field, beta, P);
    auto fp = orbit_fingerprint(*field, beta, P);
    for (const auto& p : cell_pts) {
        bool v = true;
        for (const auto& g : orb.gens())
            if (g.evaluate_values(p) != 0) v = false;
        CHECK(v == (orbit_fingerprint(*field, beta, p) == fp));
    }
}

TEST_CASE("orbit counts split over regions") {
    auto field = std::make_shared<const FiniteField>(3, 1);
    ToricData toric = construct_hirzebruch(2);
    auto affine = enumerate_orbit_points(field, toric.beta, Region::Affine);
    auto minus = enumerate_orbit_points(field, toric.beta, Region::MinusVB, std::nullopt,
                                        toric.irrelevant);
    auto vb = enumerate_orbit_points(field, toric.beta, Region::VB, std::nullopt,
                                     toric.irrelevant);
    auto torus = enumerate_orbit_points(field, toric.beta, Region::Torus);

    // V(B) reps are per-support indicators, so count fingerprint classes
    // directly for the affine split.
    std::set<std::pair<std::vector<size_t>, std::vector<uint32_t>>> vb_classes;
    for (const auto& p : enumerate_region_points(field, toric.beta, Region::Affine)) {
        bool in_vb = true;
        for (const auto& m : toric.irrelevant) {
            bool kills = false;
            for (size_t j = 0; j < m.exps.size(); ++j)
                if (m.exps[j] > 0 && p[j] == 0) kills = true;
            if (!kills) in_vb = false;
        }
        if (in_vb)
            vb_classes.insert({Support::of_point(p).epsilon,
                               orbit_fingerprint(*field, toric.beta, p)});
    }
    CHECK(affine.size() == minus.size() + vb_classes.size());
    CHECK(vb.size() == 7);
    // Cross-check the torus count against explicit fingerprint classes.
    std::set<std::vector<uint32_t>> torus_classes;
    for (const auto& p : enumerate_region_points(field, toric.beta, Region::Torus))
        torus_classes.insert(orbit_fingerprint(*field, toric.beta, p));
    CHECK(torus.size() == torus_classes.size());
    CHECK(torus.size() == 4);
}

TEST_CASE("toric ideal via colon agrees with saturation and vanishes off V(B)") {
    auto field = std::make_shared<const FiniteField>(3, 1);
    ToricData toric = construct_hirzebruch(1);
    Ideal I = toric_vanishing_ideal(field, toric);  // throws if colon != saturation
    CHECK(all_homogeneous(I));
    auto pts = enumerate_region_points(field, toric.beta, Region::MinusVB, std::nullopt,
                                       toric.irrelevant);
    CHECK(vanishes_on(I, pts));
}

TEST_CASE("constructions") {
    ToricData h = construct_hirzebruch(3);
    CHECK(h.beta == IntMat{{1, 0, 1, 3}, {0, 1, 0, 1}});
    REQUIRE(h.irrelevant.size() == 4);

    ToricData prod = construct_product_projective({2, 3});
    CHECK(prod.beta == IntMat{{1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 1}});
    CHECK(prod.irrelevant.size() == 12);

    ToricData wps = construct_wps({1, 2, 3});
    CHECK(wps.beta == IntMat{{1, 2, 3}});
    CHECK_THROWS_AS(construct_wps({2, 3}), DomainError);
    CHECK_THROWS_AS(construct_wps({1, 2, 4}), DomainError);  // gcd(2,4) > 1
    CHECK_THROWS_AS(construct_hirzebruch(0), DomainError);
}

TEST_CASE("closed forms match the pipelines") {
    auto field = std::make_shared<const FiniteField>(2, 1);
    for (int64_t ell : {1, 2}) {
        ToricData h = construct_hirzebruch(ell);
        auto closed_aff = closed_form_affine_ideal(field, h);
        REQUIRE(closed_aff.has_value());
        CHECK(ideal_equal(*closed_aff, affine_cellular_ideal(field, h.beta)));
        auto closed_tor = closed_form_toric_ideal(field, h);
        REQUIRE(closed_tor.has_value());
        CHECK(ideal_equal(*closed_tor, toric_vanishing_ideal(field, h)));
    }
    ToricData custom;
    custom.beta = IntMat{{2, 3, 5}};
    CHECK_FALSE(closed_form_affine_ideal(field, custom).has_value());
}

TEST_CASE("rational map validation") {
    auto field = std::make_shared<const FiniteField>(3, 1);
    IntMat beta{{1, 1}};
    RationalMap bad;
    bad.s = 1;
    bad.f = {"y1", "y1^2"};
    bad.g = {"1", "y1-y1"};  // zero denominator polynomial
    CHECK_THROWS_AS(parameterized_vanishing_ideal(field, beta, bad), DomainError);

    RationalMap sizes;
    sizes.s = 1;
    sizes.f = {"y1"};
    sizes.g = {"1"};
    CHECK_THROWS_AS(parameterized_vanishing_ideal(field, beta, sizes), DomainError);
}

TEST_CASE("torus domain maps skip vanishing denominators") {
    auto field = std::make_shared<const FiniteField>(5, 1);
    IntMat beta{{1, 1}};
    RationalMap map;
    map.s = 1;
    map.f = {"1", "y1^2"};
    map.g = {"y1", "1"};
    map.domain = RationalMap::Domain::Torus;
    Ideal I = parameterized_vanishing_ideal(field, beta, map);
    auto pts = enumerate_region_points(field, beta, Region::Image, map);
    CHECK(pts.size() <= 4);
    CHECK_FALSE(pts.empty());
    CHECK(vanishes_on(I, pts));
}
