#include "lattice.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<BigInt>>;

BigMat to_big(const IntMat& m) {
    BigMat b(m.size());
    for (size_t i = 0; i < m.size(); ++i) b[i].assign(m[i].begin(), m[i].end());
    return b;
}

IntMat from_big(const BigMat& b) {
    IntMat m(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        m[i].reserve(b[i].size());
        for (const auto& v : b[i]) {
            if (v > INT64_MAX || v < INT64_MIN)
                throw DomainError("lattice entry overflows 64 bits");
            m[i].push_back(static_cast<int64_t>(v));
        }
    }
    return m;
}

// Row HNF by integer row operations; deterministic.
BigMat big_row_hnf(BigMat a) {
    if (a.empty()) return a;
    size_t rows = a.size(), cols = a[0].size(), rr = 0;
    for (size_t col = 0; col < cols && rr < rows; ++col) {
        // Euclidean elimination below the pivot row.
        while (true) {
            size_t best = rows;
            for (size_t i = rr; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                if (best == rows || abs(a[i][col]) < abs(a[best][col])) best = i;
            }
            if (best == rows) break;
            std::swap(a[rr], a[best]);
            if (a[rr][col] < 0)
                for (auto& v : a[rr]) v = -v;
            bool clean = true;
            for (size_t i = rr + 1; i < rows; ++i) {
                if (a[i][col] == 0) continue;
                BigInt q = a[i][col] / a[rr][col];
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[rr][j];
                if (a[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[rr][col] == 0) continue;
        // Reduce entries above the pivot into [0, pivot).
        for (size_t i = 0; i < rr; ++i) {
            BigInt q = a[i][col] / a[rr][col];
            if (a[i][col] - q * a[rr][col] < 0) q -= 1;
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[rr][j];
        }
        ++rr;
    }
    a.resize(rr);  // drop zero rows
    return a;
}

size_t big_rank(BigMat a) { return big_row_hnf(std::move(a)).size(); }

// Kernel via column reduction: U tracks column operations on [M; I].
BigMat big_kernel(const BigMat& m, size_t cols) {
    size_t rows = m.size();
    BigMat a = m;
    BigMat u(cols, std::vector<BigInt>(cols, 0));
    for (size_t j = 0; j < cols; ++j) u[j][j] = 1;

    auto col_swap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        for (size_t i = 0; i < cols; ++i) std::swap(u[i][x], u[i][y]);
    };
    auto col_axpy = [&](size_t dst, size_t src, const BigInt& q) {
        for (size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (size_t i = 0; i < cols; ++i) u[i][dst] -= q * u[i][src];
    };

    size_t c0 = 0;
    for (size_t row = 0; row < rows && c0 < cols; ++row) {
        while (true) {
            size_t best = cols;
            for (size_t j = c0; j < cols; ++j) {
                if (a[row][j] == 0) continue;
                if (best == cols || abs(a[row][j]) < abs(a[row][best])) best = j;
            }
            if (best == cols) break;
            col_swap(c0, best);
            bool clean = true;
            for (size_t j = c0 + 1; j < cols; ++j) {
                if (a[row][j] == 0) continue;
                BigInt q = a[row][j] / a[row][c0];
                col_axpy(j, c0, q);
                if (a[row][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[row][c0] != 0) ++c0;
    }

    // Columns past c0 of U span the kernel.
    BigMat kernel;
    for (size_t j = c0; j < cols; ++j) {
        std::vector<BigInt> v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = u[i][j];
        kernel.push_back(std::move(v));
    }
    return big_row_hnf(std::move(kernel));
}

}  // namespace

IntMat row_hnf(IntMat m) { return from_big(big_row_hnf(to_big(m))); }

bool IntLattice::contains(const std::vector<int64_t>& v) const {
    // v in L iff appending v leaves the HNF unchanged.
    if (v.size() != (basis.empty() ? v.size() : basis[0].size())) return false;
    IntMat ext = basis;
    ext.push_back(v);
    return row_hnf(std::move(ext)) == basis;
}

IntLattice kernel_basis(const IntMat& m) {
    if (m.empty()) throw DomainError("empty matrix");
    size_t cols = m[0].size();
    auto big = to_big(m);
    if (big_rank(big) != m.size())
        throw DomainError("RankDeficient: matrix rank below row count");
    IntLattice lat;
    lat.basis = from_big(big_kernel(big, cols));
    lat.ambient_vars.resize(cols);
    for (size_t j = 0; j < cols; ++j) lat.ambient_vars[j] = j;
    return lat;
}

Support Support::of_point(const std::vector<uint32_t>& point) {
    Support s;
    for (size_t j = 0; j < point.size(); ++j)
        if (point[j] != 0) s.epsilon.push_back(j);
    return s;
}

Support Support::normalized(std::vector<size_t> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return Support{std::move(idx)};
}

IntMat restrict_columns(const IntMat& beta, const Support& eps) {
    if (eps.empty()) throw DomainError("EmptySupport");
    IntMat out(beta.size());
    for (size_t i = 0; i < beta.size(); ++i)
        for (size_t j : eps.epsilon) {
            if (j >= beta[i].size()) throw DomainError("support index out of range");
            out[i].push_back(beta[i][j]);
        }
    return out;
}

IntLattice support_kernel(const IntMat& beta, const Support& eps) {
    IntMat sub = restrict_columns(beta, eps);
    // Rank may drop on a support; compute the kernel without the rank check.
    auto big = to_big(sub);
    IntLattice lat;
    lat.basis = from_big(big_kernel(big, eps.epsilon.size()));
    lat.ambient_vars = eps.epsilon;
    return lat;
}

namespace {

Polynomial lattice_binomial(const RingPtr& ring, const IntLattice& lat,
                            const std::vector<int64_t>& row, int64_t scale,
                            uint32_t neg_coeff) {
    Monomial pos = Monomial::one(ring->nvars());
    Monomial neg = Monomial::one(ring->nvars());
    for (size_t i = 0; i < row.size(); ++i) {
        int64_t v = row[i] * scale;
        if (v > UINT16_MAX || v < -static_cast<int64_t>(UINT16_MAX))
            throw DomainError("exponent overflow in lattice binomial");
        size_t var = lat.ambient_vars[i];
        if (v > 0) pos.exps[var] = static_cast<Exp>(v);
        else if (v < 0) neg.exps[var] = static_cast<Exp>(-v);
    }
    const auto& F = ring->field();
    return Polynomial(ring, {Term{pos, 1}, Term{neg, F.neg(neg_coeff)}});
}

Ideal saturate_by_ambient(Ideal ideal, const IntLattice& lat, const RingPtr& ring,
                          const Budget& budget) {
    Monomial prod = Monomial::one(ring->nvars());
    for (size_t var : lat.ambient_vars) prod.exps[var] = 1;
    Ideal vars(ring, {Polynomial::monomial(ring, prod)});
    return saturate(ideal, vars, budget);
}

}  // namespace

Ideal lattice_ideal(const IntLattice& lattice, int64_t scale, const RingPtr& ring,
                    const Budget& budget) {
    if (scale < 1) throw DomainError("scale must be positive");
    if (lattice.is_zero()) return Ideal(ring, {});
    std::vector<Polynomial> gens;
    for (const auto& row : lattice.basis)
        gens.push_back(lattice_binomial(ring, lattice, row, scale, 1));
    return saturate_by_ambient(Ideal(ring, std::move(gens)), lattice, ring, budget);
}

Ideal character_lattice_ideal(const PartialCharacter& chi, const RingPtr& ring,
                              const Budget& budget) {
    const auto& F = ring->field();
    for (size_t j : chi.support.epsilon)
        if (chi.point[j] == 0)
            throw DomainError("ZeroCoordinateOnSupport at variable " +
                              std::to_string(j + 1));
    if (chi.lattice.is_zero()) return Ideal(ring, {});
    std::vector<Polynomial> gens;
    for (const auto& row : chi.lattice.basis) {
        uint32_t value = 1;  // x^m(P) over the support, inverses for m_i < 0
        for (size_t i = 0; i < row.size(); ++i) {
            size_t var = chi.lattice.ambient_vars[i];
            value = F.mul(value, F.pow(chi.point[var], row[i]));
        }
        gens.push_back(lattice_binomial(ring, chi.lattice, row, 1, value));
    }
    return saturate_by_ambient(Ideal(ring, std::move(gens)), chi.lattice, ring, budget);
}

}  // namespace toric
