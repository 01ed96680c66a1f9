#pragma once

#include <string>
#include <vector>

#include "brel/exact.hpp"
#include "brel/group.hpp"
#include "brel/subgroup_lattice.hpp"

namespace brel {

/// Integral combination of subgroup basis elements, stored sparsely over the
/// canonical positions of one LatticeIndex instance. Elements are only
/// meaningful relative to that instance; mixing instances throws.
struct BurnsideElement {
    const LatticeIndex* lattice = nullptr;
    SparseVec coeffs;  // (subgroup index, coefficient), sorted, nonzero

    bool operator==(const BurnsideElement& o) const {
        return lattice == o.lattice && coeffs == o.coeffs;
    }
};

/// Element of B(G) (the target of the signature map), over the G-lattice.
struct SignatureElement {
    SparseVec coeffs;
};

BurnsideElement burnside_zero(const LatticeIndex& idx);
BurnsideElement burnside_basis(const LatticeIndex& idx, int pos, const Int& c = 1);
BurnsideElement burnside_from_sparse(const LatticeIndex& idx, SparseVec coeffs);

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement operator*(const Int& c, const BurnsideElement& a);

/// Ring product; abelian closed form [L][M] = [Gamma : L v M] [L ^ M].
BurnsideElement product(const BurnsideElement& x, const BurnsideElement& y);

/// Independent cross-check: decomposes Gamma/L x Gamma/M into orbits of the
/// literal diagonal action and reads off stabilizers.
BurnsideElement orbit_oracle_product(const LatticeIndex& idx, int lPos, int mPos);

/// Induction along K <= Gamma: the identity on basis subgroups of K. Elements
/// of B(K) are represented over the ambient lattice with support inside K.
BurnsideElement induce(const Subgroup& from, const BurnsideElement& x);

/// Restriction to L <= Gamma: [M] -> [Gamma : L v M] [L ^ M], result
/// supported on subgroups of L.
BurnsideElement restrict_to(const Subgroup& to, const BurnsideElement& x);

/// A fixed quotient K/N with an explicit abstract model q and elementwise
/// coset map, plus the induced subgroup correspondences.
struct QuotientContext {
    GroupSpec gamma;  // ambient of K and N
    Subgroup K, N;
    GroupSpec q;       // abstract model of K/N
    LatticeIndex latQ;
    std::vector<Code> drop_codes;  // q-code per element of K, aligned with K.elements()

    Code drop_element(Code k) const;
    Subgroup lift_subgroup(const Subgroup& sbar) const;  // subgroup of gamma
    Subgroup drop_subgroup(const Subgroup& s) const;     // requires N <= s <= K
};

QuotientContext make_quotient(const GroupSpec& gamma, const Subgroup& K, const Subgroup& N);

/// Inflation along K/N: basis S/N -> S; result lives over `ambient`.
BurnsideElement inflate(const QuotientContext& qc, const LatticeIndex& ambient, const BurnsideElement& x);

/// Deflation to K/N: basis M -> (M v N)/N; requires M v N <= K.
BurnsideElement deflate(const QuotientContext& qc, const BurnsideElement& x);

/// B(G)-module action on the relative module: M * (K x rho) =
/// [G : K v M] ((K ^ M) x rho restricted).
BurnsideElement module_action(const ProductContext& ctx, const Subgroup& m, const GraphDescriptor& g);

bool is_relative(const ProductContext& ctx, const BurnsideElement& x);
BurnsideElement project_nongraph(const ProductContext& ctx, const BurnsideElement& x);

/// sigma: B(Gamma) -> B(G), L x C_p -> L, everything else -> 0.
SignatureElement signature(const ProductContext& ctx, const BurnsideElement& x);

/// The section l: L -> L x C_p; sigma(lift_section(s)) == s.
BurnsideElement lift_section(const ProductContext& ctx, const SignatureElement& s);

std::string subgroup_name(const GroupSpec& spec, const Subgroup& s);
std::string pretty(const BurnsideElement& x);

}  // namespace brel
