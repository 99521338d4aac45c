#pragma once

#include <optional>
#include <vector>

#include "vanishing.hpp"

namespace toric {

// Evaluation code on a point set: rows of `matrix` are the degree-alpha
// basis monomials evaluated at the points. k is the rank; delta is empty
// when the exhaustive search would exceed its budget.
struct EvaluationCode {
    std::vector<std::vector<uint32_t>> points;
    std::vector<Monomial> basis;
    std::vector<std::vector<uint32_t>> matrix;  // |basis| x n
    std::vector<std::vector<uint32_t>> row_basis;  // k x n, row reduced
    FieldPtr field;
    size_t n = 0;
    size_t k = 0;
    std::optional<size_t> delta;
};

// Basis comes from quotient_graded_basis(ideal, alpha) when an ideal is
// given, else all of S_alpha.
EvaluationCode build_evaluation_code(const FieldPtr& field, const IntMat& beta,
                                     const std::vector<std::vector<uint32_t>>& points,
                                     const DegVec& alpha,
                                     const std::optional<Ideal>& ideal = std::nullopt,
                                     const Budget& budget = Budget{},
                                     uint64_t distance_budget = 100'000'000);

size_t code_dimension(const EvaluationCode& code);

// Exact minimum Hamming weight; empty when q^k exceeds the budget.
std::optional<size_t> minimum_distance(const EvaluationCode& code,
                                       uint64_t distance_budget = 100'000'000);

// Nullspace of the evaluation map on all of S_alpha, as polynomials; a
// pure linear-algebra oracle with no Groebner dependency.
std::vector<Polynomial> graded_vanishing_space(
    const FieldPtr& field, const IntMat& beta,
    const std::vector<std::vector<uint32_t>>& points, const DegVec& alpha);

// Rank over GF(q) by Gaussian elimination; `rows` is left in reduced row
// echelon form with zero rows dropped.
size_t gf_rref(const FiniteField& field, std::vector<std::vector<uint32_t>>& rows);

uint32_t evaluate_monomial(const FiniteField& field, const Monomial& m,
                           const std::vector<uint32_t>& point);

}  // namespace toric
