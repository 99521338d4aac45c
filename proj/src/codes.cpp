#include "codes.hpp"

#include <algorithm>

namespace toric {

uint32_t evaluate_monomial(const FiniteField& field, const Monomial& m,
                           const std::vector<uint32_t>& point) {
    uint32_t v = 1;
    for (size_t j = 0; j < m.nvars(); ++j)
        if (m.exps[j] > 0) v = field.mul(v, field.pow(point[j], m.exps[j]));
    return v;
}

size_t gf_rref(const FiniteField& field, std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        uint32_t inv = field.inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = field.mul(v, inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            uint32_t c = rows[i][col];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = field.sub(rows[i][j], field.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

namespace {

bool fits_budget(uint64_t q, size_t k, uint64_t budget) {
    uint64_t n = 1;
    for (size_t i = 0; i < k; ++i) {
        if (n > budget / q) return false;
        n *= q;
    }
    return n <= budget;
}

// Visit every nonzero combination of the rows, reusing the accumulated
// word: one row addition per visited message.
void weight_rec(const FiniteField& field, const std::vector<std::vector<uint32_t>>& rows,
                size_t i, std::vector<uint32_t>& word, bool nonzero, size_t& best) {
    if (i == rows.size()) {
        if (!nonzero) return;
        size_t w = 0;
        for (auto v : word)
            if (v != 0) ++w;
        best = std::min(best, w);
        return;
    }
    weight_rec(field, rows, i + 1, word, nonzero, best);
    std::vector<uint32_t> saved = word;
    for (uint64_t c = 1; c < field.q(); ++c) {
        for (size_t j = 0; j < word.size(); ++j)
            word[j] = field.add(word[j], rows[i][j]);
        weight_rec(field, rows, i + 1, word, true, best);
    }
    word = saved;
}

}  // namespace

std::optional<size_t> minimum_distance(const EvaluationCode& code,
                                       uint64_t distance_budget) {
    if (code.k == 0) return std::nullopt;
    const auto& F = *code.field;
    if (!fits_budget(F.q(), code.k, distance_budget)) return std::nullopt;
    std::vector<uint32_t> word(code.n, 0);
    size_t best = code.n + 1;
    weight_rec(F, code.row_basis, 0, word, false, best);
    return best;
}

size_t code_dimension(const EvaluationCode& code) { return code.k; }

EvaluationCode build_evaluation_code(const FieldPtr& field, const IntMat& beta,
                                     const std::vector<std::vector<uint32_t>>& points,
                                     const DegVec& alpha,
                                     const std::optional<Ideal>& ideal,
                                     const Budget& budget, uint64_t distance_budget) {
    if (points.empty()) throw DomainError("EmptyPointSet");
    RingPtr ring = make_cox_ring(field, beta);
    for (const auto& p : points)
        if (p.size() != ring->nvars()) throw DomainError("point arity mismatch");

    EvaluationCode code;
    code.field = field;
    code.points = points;
    code.n = points.size();
    if (ideal) {
        if (!ideal->ring()->same_ring(*ring)) throw DomainError("ring mismatch");
        code.basis = quotient_graded_basis(*ideal, alpha, budget);
    } else {
        code.basis = graded_monomial_basis(ring, alpha);
    }

    for (const auto& m : code.basis) {
        std::vector<uint32_t> row(code.n);
        for (size_t i = 0; i < code.n; ++i)
            row[i] = evaluate_monomial(*field, m, points[i]);
        code.matrix.push_back(std::move(row));
    }
    code.row_basis = code.matrix;
    code.k = gf_rref(*field, code.row_basis);
    code.delta = minimum_distance(code, distance_budget);
    return code;
}

std::vector<Polynomial> graded_vanishing_space(
    const FieldPtr& field, const IntMat& beta,
    const std::vector<std::vector<uint32_t>>& points, const DegVec& alpha) {
    if (points.empty()) throw DomainError("EmptyPointSet");
    RingPtr ring = make_cox_ring(field, beta);
    auto monos = graded_monomial_basis(ring, alpha);
    if (monos.empty()) return {};
    size_t m = monos.size(), n = points.size();

    // Transpose of the evaluation matrix: solve A^T c = 0 for coefficient
    // vectors c over the monomial basis.
    std::vector<std::vector<uint32_t>> at(n, std::vector<uint32_t>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            at[j][i] = evaluate_monomial(*field, monos[i], points[j]);
    gf_rref(*field, at);

    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(m, false);
    for (const auto& row : at) {
        size_t col = 0;
        while (col < m && row[col] == 0) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = true;
    }

    std::vector<Polynomial> basis;
    for (size_t free = 0; free < m; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> c(m, 0);
        c[free] = 1;
        for (size_t i = 0; i < at.size(); ++i)
            c[pivot_col[i]] = field->neg(at[i][free]);
        std::vector<Term> terms;
        for (size_t i = 0; i < m; ++i)
            if (c[i] != 0) terms.push_back(Term{monos[i], c[i]});
        basis.push_back(Polynomial(ring, std::move(terms)));
    }
    return basis;
}

}  // namespace toric
