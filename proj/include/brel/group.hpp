#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brel/errors.hpp"

namespace brel {

/// Elements are stored as mixed-radix codes: the code order coincides with
/// lexicographic order on residue vectors.
using Code = long long;

struct GroupElement {
    std::vector<int> residues;
};

/// A finite abelian p-group C_{p^e1} x ... x C_{p^er} with e1 >= ... >= er.
class GroupSpec {
public:
    GroupSpec() { init(); }

    static GroupSpec make(long long p, std::vector<int> exponents, long long max_order = 0);

    long long p() const { return p_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int rank() const { return static_cast<int>(exponents_.size()); }
    long long order() const { return order_; }
    long long modulus(int i) const { return moduli_[i]; }

    Code encode(const std::vector<int>& residues) const;
    std::vector<int> decode(Code c) const;

    Code add(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(long long k, Code a) const;
    long long element_order(Code a) const;

    bool operator==(const GroupSpec& o) const { return p_ == o.p_ && exponents_ == o.exponents_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void init();

    long long p_ = 2;
    std::vector<int> exponents_;
    std::vector<long long> moduli_;
    std::vector<long long> weights_;
    long long order_ = 1;
};

/// Parses the grammar `<p>:[e1,...,er]`. Empty exponent list denotes the
/// trivial group. Default order bound is p^6.
GroupSpec parse_group_spec(const std::string& text, long long max_order = 0);

/// The ambient group Gamma = G x C_p (one extra exponent 1 appended).
GroupSpec product_with_cp(const GroupSpec& g);

/// Immutable subgroup value: full sorted element set plus a minimal
/// generating list. Canonical key is (order, element list).
class Subgroup {
public:
    Subgroup() = default;

    static Subgroup from_elements(const GroupSpec& ambient, std::vector<Code> sorted_elements);

    const GroupSpec& ambient() const { return ambient_; }
    const std::vector<Code>& elements() const { return elems_; }
    const std::vector<Code>& generators() const { return gens_; }
    long long order() const { return static_cast<long long>(elems_.size()); }

    bool contains(Code c) const;
    bool subset_of(const Subgroup& other) const;
    bool is_trivial() const { return elems_.size() == 1; }

    bool operator==(const Subgroup& o) const { return ambient_ == o.ambient_ && elems_ == o.elems_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
    bool operator<(const Subgroup& o) const;  // canonical key order

private:
    GroupSpec ambient_;
    std::vector<Code> elems_{0};
    std::vector<Code> gens_;
};

Subgroup subgroup_from_generators(const GroupSpec& spec, const std::vector<GroupElement>& gens);
Subgroup subgroup_from_codes(const GroupSpec& spec, const std::vector<Code>& gens);
Subgroup trivial_subgroup(const GroupSpec& spec);
Subgroup full_subgroup(const GroupSpec& spec);

/// Closure of s together with one extra element.
std::vector<Code> adjoin_element(const GroupSpec& spec, const std::vector<Code>& sorted_subgroup, Code g);

std::pair<Subgroup, Subgroup> meet_join(const Subgroup& a, const Subgroup& b);

/// Invariant factors of K/N as p-power moduli, non-increasing. Empty list for
/// the trivial quotient.
std::vector<long long> quotient_invariants(const Subgroup& K, const Subgroup& N);

bool is_cyclic(const Subgroup& s);

/// Goursat data for S <= G x C_p. K, N live in G; A, B live in C_p (spec p:[1]).
/// theta holds the residue of theta(kN) in C_p for each element of K, aligned
/// with K.elements().
struct GoursatQuintuple {
    Subgroup K, N;
    Subgroup A, B;
    std::vector<int> theta;
};

GoursatQuintuple goursat_decompose(const GroupSpec& g, const Subgroup& S);
Subgroup goursat_compose(const GroupSpec& g, const GoursatQuintuple& q);

/// Graph subgroup K x rho of Gamma, recorded by its domain K <= G and the
/// value of rho at each stored generator of K.
struct GraphDescriptor {
    Subgroup domain;
    std::vector<int> rho_on_generators;
};

std::optional<GraphDescriptor> graph_classify(const GroupSpec& g, const Subgroup& S);

/// Builds {(k, rho(k))} from per-element values of rho (aligned with
/// domain.elements()).
Subgroup graph_subgroup(const GroupSpec& g, const Subgroup& domain, const std::vector<int>& rho_values);

/// K x C_p inside Gamma.
Subgroup times_cp(const GroupSpec& g, const Subgroup& domain);

/// All homomorphisms s -> C_p as per-element value vectors (aligned with
/// s.elements()), in a deterministic order starting with the trivial one.
std::vector<std::vector<int>> homs_to_cp(const Subgroup& s);

/// Value vector of the hom determined by assigning `gen_values` (mod p) to
/// the stored minimal generators of s.
std::vector<int> hom_from_generator_values(const Subgroup& s, const std::vector<int>& gen_values);

}  // namespace brel
