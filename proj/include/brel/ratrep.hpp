#pragma once

#include <vector>

#include "brel/exact.hpp"
#include "brel/group.hpp"
#include "brel/subgroup_lattice.hpp"

namespace brel {

/// Character of a virtual rational representation, stored on elements in code
/// order (every element is its own conjugacy class here).
struct RationalCharacter {
    GroupSpec ambient;
    std::vector<Int> values;
};

struct IrreducibleItem {
    int kernel_index = -1;       // lattice position of N, Gamma/N cyclic
    long long quotient_order = 1;  // m = [Gamma : N]
    RationalCharacter character;
};

/// One irreducible rational character per subgroup N with cyclic quotient,
/// canonically ordered by N.
struct IrreducibleBasis {
    GroupSpec ambient;
    std::vector<IrreducibleItem> items;
};

/// Character of the permutation module on Gamma/L: [Gamma:L] on L, 0 off L.
RationalCharacter perm_character(const LatticeIndex& idx, const Subgroup& L);

/// c_m(a): sum of a-th powers of the primitive m-th roots of unity.
long long ramanujan_sum(long long m, long long a);

IrreducibleBasis irreducible_basis(const LatticeIndex& idx);

/// Integer multiplicities of psi over the irreducible basis; throws
/// NotACharacter on non-exact division or failed reconstruction.
std::vector<Int> decompose(const RationalCharacter& psi, const IrreducibleBasis& basis);

/// The linearization map in irreducible coordinates: one row per basis
/// subgroup (all, or graph subgroups only), one column per irreducible.
struct FMatrix {
    IntMatrix m;
    std::vector<int> row_subgroups;  // lattice position per row
};

FMatrix f_matrix(const LatticeIndex& idx, bool graphs_only = false);

/// Nonzero Smith invariant factors of the map onto its full target; all ones
/// exactly when the map is surjective.
std::vector<Int> cokernel_invariants(const IntMatrix& m);

}  // namespace brel
