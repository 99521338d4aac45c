#pragma once

#include <cstdint>
#include <vector>

#include "groebner.hpp"
#include "poly.hpp"

namespace toric {

using IntMat = std::vector<std::vector<int64_t>>;

// Subgroup of Z^r spanned by the basis rows; rows are Z-linearly
// independent and kept in row Hermite normal form so equal lattices have
// equal bases. ambient_vars maps row coordinates to variable indices of
// the ring the lattice talks about.
struct IntLattice {
    IntMat basis;
    std::vector<size_t> ambient_vars;

    size_t rank() const { return basis.size(); }
    bool is_zero() const { return basis.empty(); }
    bool contains(const std::vector<int64_t>& v) const;
    bool operator==(const IntLattice& o) const {
        return basis == o.basis && ambient_vars == o.ambient_vars;
    }
};

// Sorted, duplicate-free subset of variable indices.
struct Support {
    std::vector<size_t> epsilon;

    static Support of_point(const std::vector<uint32_t>& point);
    static Support normalized(std::vector<size_t> idx);
    bool empty() const { return epsilon.empty(); }
};

struct PartialCharacter {
    std::vector<uint32_t> point;  // full-length point, nonzero on the support
    Support support;
    IntLattice lattice;  // on the support coordinates
};

// Row Hermite normal form (positive pivots, entries above a pivot reduced
// into [0, pivot)); canonical per lattice.
IntMat row_hnf(IntMat m);

// Basis of the full integer kernel {v : M v^T = 0}; requires full row rank.
IntLattice kernel_basis(const IntMat& m);

// Column submatrix beta(eps); rank may drop.
IntMat restrict_columns(const IntMat& beta, const Support& eps);

// Kernel lattice of beta(eps), tagged with the support's variable indices.
IntLattice support_kernel(const IntMat& beta, const Support& eps);

// Full lattice ideal of scale*L: basis binomials x^{(sm)+} - x^{(sm)-}
// saturated by the product of the ambient variables.
Ideal lattice_ideal(const IntLattice& lattice, int64_t scale, const RingPtr& ring,
                    const Budget& budget = Budget{});

// Lattice ideal twisted by the character m -> x^m(P).
Ideal character_lattice_ideal(const PartialCharacter& chi, const RingPtr& ring,
                              const Budget& budget = Budget{});

}  // namespace toric
