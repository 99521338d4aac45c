#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "lattice.hpp"

namespace toric {

// Map F_q^s (or the torus) -> F_q^r given by rational coordinate
// functions f_j/g_j in the parameters y_1..y_s.
struct RationalMap {
    enum class Domain { FullAffine, Torus };
    size_t s = 0;
    std::vector<std::string> f;
    std::vector<std::string> g;
    Domain domain = Domain::FullAffine;
};

// Grading plus the irrelevant ideal B (squarefree monomial generators).
struct ToricData {
    enum class Family { Custom, Hirzebruch, WPS, Product };

    IntMat beta;
    std::vector<Monomial> irrelevant;  // over r variables
    std::string name;
    Family family = Family::Custom;
    std::vector<int64_t> params;
};

// One representative per orbit; two points are equivalent iff they share
// the support and the character values over a fixed kernel basis.
struct OrbitPoint {
    std::vector<uint32_t> rep;
    Support support;
    std::vector<uint32_t> fingerprint;
};

enum class Region { Affine, Torus, MinusVB, VB, Image };

using FieldPtr = std::shared_ptr<const FiniteField>;

// Cox ring F_q[x_1..x_r] graded by beta.
RingPtr make_cox_ring(const FieldPtr& field, const IntMat& beta);

// Elimination pipeline: the vanishing ideal of the orbit set of the image
// of a rational map, through the auxiliary ring in x, y, z, w.
Ideal parameterized_vanishing_ideal(const FieldPtr& field, const IntMat& beta,
                                    const RationalMap& map,
                                    const Budget& budget = Budget{});

// Cellular pipeline: sum over supports of x^eps times the scaled kernel
// lattice ideal, with divisibility pruning.
Ideal affine_cellular_ideal(const FieldPtr& field, const IntMat& beta,
                            const Budget& budget = Budget{}, size_t max_vars = 16);

Ideal cell_ideal(const FieldPtr& field, const IntMat& beta, const Support& eps,
                 const Budget& budget = Budget{});

Ideal point_orbit_ideal(const FieldPtr& field, const IntMat& beta,
                        const std::vector<uint32_t>& point,
                        const Budget& budget = Budget{});

// Vanishing ideal of the rational points of the toric quotient: colon of
// the affine (or parameterized) ideal by the irrelevant ideal, checked
// against iterated saturation.
Ideal toric_vanishing_ideal(const FieldPtr& field, const ToricData& toric,
                            const Budget& budget = Budget{});
Ideal toric_subset_vanishing_ideal(const FieldPtr& field, const ToricData& toric,
                                   const RationalMap& map,
                                   const Budget& budget = Budget{});

Ideal irrelevant_ideal(const RingPtr& ring, const ToricData& toric);

std::vector<uint32_t> orbit_fingerprint(const FiniteField& field, const IntMat& beta,
                                        const std::vector<uint32_t>& point);

std::vector<OrbitPoint> enumerate_orbit_points(
    const FieldPtr& field, const IntMat& beta, Region region,
    const std::optional<RationalMap>& map = std::nullopt,
    const std::vector<Monomial>& irrelevant = {}, uint64_t point_budget = 10'000'000);

// Raw region points before orbit reduction (used for soundness checks).
std::vector<std::vector<uint32_t>> enumerate_region_points(
    const FieldPtr& field, const IntMat& beta, Region region,
    const std::optional<RationalMap>& map = std::nullopt,
    const std::vector<Monomial>& irrelevant = {}, uint64_t point_budget = 10'000'000);

ToricData construct_hirzebruch(int64_t ell);
ToricData construct_wps(const std::vector<int64_t>& weights);
ToricData construct_product_projective(const std::vector<int64_t>& n_list);

// Published closed forms where one exists for the construction.
std::optional<Ideal> closed_form_affine_ideal(const FieldPtr& field, const ToricData& toric);
std::optional<Ideal> closed_form_toric_ideal(const FieldPtr& field, const ToricData& toric);

}  // namespace toric
