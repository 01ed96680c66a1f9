#pragma once

#include <map>
#include <string>
#include <vector>

#include "brel/group.hpp"

namespace brel {

/// The full subgroup lattice of a group, canonically ordered by
/// (order, lexicographic element list), with index-p cover edges.
class LatticeIndex {
public:
    GroupSpec spec;
    std::vector<Subgroup> subgroups;
    std::vector<std::pair<int, int>> covers;  // (sub, super) with index p

    int find(const std::vector<Code>& elements) const;
    int find(const Subgroup& s) const;
    int size() const { return static_cast<int>(subgroups.size()); }

    void build_position_map();

private:
    std::map<std::vector<Code>, int> pos_;
};

LatticeIndex all_subgroups(const GroupSpec& spec, std::size_t max_subgroups = 20000);

std::string lattice_dot(const LatticeIndex& idx);

struct Resolution {
    std::vector<int> chain;  // ascending by inclusion, chain.front() = L, chain.back() = G'
    int length() const { return static_cast<int>(chain.size()) - 1; }
};

/// All maximal index-p chains from L up to Gp, deterministically ordered.
std::vector<Resolution> resolutions(const LatticeIndex& idx, int lIdx, int gIdx);

/// All pairs N <= K with invariant factors of K/N equal to target
/// (target is a modulus list, [p,p] or [p,p,p]).
std::vector<std::pair<int, int>> subquotient_pairs(const LatticeIndex& idx,
                                                   const std::vector<long long>& target);

/// G together with Gamma = G x C_p, both lattices, and the standard
/// cross-reference tables.
struct ProductContext {
    GroupSpec g;
    GroupSpec gamma;
    LatticeIndex latG;  // lattice of G
    LatticeIndex lat;   // lattice of Gamma
    std::vector<char> is_graph;    // per Gamma subgroup
    std::vector<int> sigma_to;     // Gamma subgroup -> index of L in latG when it is L x C_p, else -1
    std::vector<int> g_times_cp;   // G subgroup -> Gamma index of that subgroup x C_p
    std::vector<int> g_times_eps;  // G subgroup -> Gamma index of the trivial graph over it
    int graph_count = 0;
};

ProductContext make_product_context(const GroupSpec& g);

enum class SelectionCase {
    ProductFromNoncyclic,  // (G' x C_p, L' x C_p), G'/L' = C_p x C_p
    GraphSurjective,       // (G' x lambda, L' x lambda)
    GraphTrivial,          // (G' x eps, L' x eps)
    ProductFromCyclic      // (G' x C_p, L' x eps), G'/L' = C_p
};

struct SelectionPair {
    int k = -1;       // index in Gamma lattice
    int nprime = -1;  // index in Gamma lattice
    int gprime = -1;  // source G' in G lattice
    int lprime = -1;  // chosen L' in G lattice
    SelectionCase kind = SelectionCase::GraphTrivial;
};

struct SelectionList {
    std::vector<SelectionPair> pairs;
};

enum class ChoicePolicy { First, Last };

SelectionList build_selection_list(const ProductContext& ctx, ChoicePolicy policy = ChoicePolicy::First);
SelectionList build_selection_list(const GroupSpec& g, ChoicePolicy policy = ChoicePolicy::First);

}  // namespace brel
