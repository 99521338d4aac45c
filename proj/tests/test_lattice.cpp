#include <doctest.h>

#include <random>

#include "lattice.hpp"

using namespace toric;

namespace {

RingPtr plain_ring(uint64_t p, std::vector<std::string> names) {
    auto F = std::make_shared<const FiniteField>(p, 1);
    return std::make_shared<GradedRing>(F, std::move(names), std::vector<DegVec>{});
}

// Random unimodular matrix as a product of elementary row operations.
IntMat random_unimodular(size_t n, std::mt19937_64& rng) {
    IntMat u(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < n; ++i) u[i][i] = 1;
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    std::uniform_int_distribution<int64_t> coef(-3, 3);
    for (int step = 0; step < 12; ++step) {
        size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int64_t c = coef(rng);
        for (size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
    }
    return u;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    IntMat r(a.size(), std::vector<int64_t>(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

}  // namespace

TEST_CASE("row HNF is canonical under unimodular row changes") {
    IntMat m{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    IntMat h = row_hnf(m);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(row_hnf(matmul(random_unimodular(3, rng), m)) == h);
    }
    // Pivots positive, entries above a pivot reduced.
    for (size_t i = 0; i < h.size(); ++i) {
        size_t piv = 0;
        while (piv < h[i].size() && h[i][piv] == 0) ++piv;
        REQUIRE(piv < h[i].size());
        CHECK(h[i][piv] > 0);
        for (size_t k = 0; k < i; ++k) {
            CHECK(h[k][piv] >= 0);
            CHECK(h[k][piv] < h[i][piv]);
        }
    }
}

TEST_CASE("kernel of the Hirzebruch grading") {
    for (int64_t ell : {1, 2, 3}) {
        IntMat beta{{1, 0, 1, ell}, {0, 1, 0, 1}};
        IntLattice ker = kernel_basis(beta);
        CHECK(ker.rank() == 2);
        // Known spanning set, compared through the canonical form.
        IntMat expected = row_hnf({{1, 0, -1, 0}, {0, 1, ell, -1}});
        CHECK(ker.basis == expected);
        for (const auto& row : ker.basis)
            for (size_t i = 0; i < beta.size(); ++i) {
                int64_t dot = 0;
                for (size_t j = 0; j < row.size(); ++j) dot += beta[i][j] * row[j];
                CHECK(dot == 0);
            }
    }
    CHECK_THROWS_AS(kernel_basis(IntMat{{1, 2}, {2, 4}}), DomainError);
}

TEST_CASE("support kernel restricts columns") {
    IntMat beta{{1, 0, 1, 2}, {0, 1, 0, 1}};
    IntLattice k13 = support_kernel(beta, Support::normalized({0, 2}));
    CHECK(k13.ambient_vars == std::vector<size_t>{0, 2});
    CHECK(k13.basis == IntMat{{1, -1}});
    IntLattice k1 = support_kernel(beta, Support::normalized({0}));
    CHECK(k1.is_zero());
}

TEST_CASE("lattice ideal is invariant under basis change") {
    auto ring = plain_ring(5, {"x1", "x2", "x3", "x4"});
    IntMat base{{1, 0, -1, 0}, {0, 1, 2, -1}};
    IntLattice lat{row_hnf(base), {0, 1, 2, 3}};
    Ideal I = lattice_ideal(lat, 4, ring);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        IntMat other = matmul(random_unimodular(2, rng), base);
        IntLattice lat2{row_hnf(other), {0, 1, 2, 3}};
        CHECK(lat2 == lat);
        CHECK(ideal_equal(lattice_ideal(lat2, 4, ring), I));
    }

    // x^{4v+} - x^{4v-} for v = (1,1,1,-1) in the lattice but outside the basis.
    CHECK(lat.contains({1, 1, 1, -1}));
    CHECK(I.contains(parse_polynomial("x1^4*x2^4*x3^4-x4^4", ring)));
    CHECK_FALSE(lat.contains({1, 0, 0, 0}));
    CHECK_FALSE(I.contains(parse_polynomial("x1^4-x2^4", ring)));
}

TEST_CASE("character lattice ideal matches the direct computation") {
    auto ring = plain_ring(5, {"x1", "x2", "x3", "x4"});
    // P = (2,0,1,0): support {x1,x3}, kernel of beta(eps) is Z(1,-1),
    // character value x1/x3 at P is 2, so the ideal is <x1 - 2*x3>.
    PartialCharacter chi;
    chi.point = {2, 0, 1, 0};
    chi.support = Support::of_point(chi.point);
    chi.lattice = support_kernel({{1, 0, 1, 2}, {0, 1, 0, 1}}, chi.support);
    Ideal I = character_lattice_ideal(chi, ring);
    CHECK(ideal_equal(I, Ideal(ring, {parse_polynomial("x1-2*x3", ring)})));
}

TEST_CASE("partial character input validation") {
    auto ring = plain_ring(5, {"x1", "x2"});
    PartialCharacter bad;
    bad.point = {2, 0};
    bad.support = Support::normalized({0, 1});  // claims x2 but P_2 = 0
    bad.lattice = IntLattice{{{1, -1}}, {0, 1}};
    CHECK_THROWS_AS(character_lattice_ideal(bad, ring), DomainError);
}

TEST_CASE("support helpers") {
    Support s = Support::of_point({0, 3, 0, 1});
    CHECK(s.epsilon == std::vector<size_t>{1, 3});
    CHECK(Support::normalized({3, 1, 1}).epsilon == std::vector<size_t>{1, 3});
    CHECK(Support::of_point({0, 0}).empty());
}
