#include "brel/subgroup_lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace brel {

void LatticeIndex::build_position_map() {
    pos_.clear();
    for (int i = 0; i < size(); ++i) pos_[subgroups[i].elements()] = i;
}

int LatticeIndex::find(const std::vector<Code>& elements) const {
    auto it = pos_.find(elements);
    return it == pos_.end() ? -1 : it->second;
}

int LatticeIndex::find(const Subgroup& s) const { return find(s.elements()); }

LatticeIndex all_subgroups(const GroupSpec& spec, std::size_t max_subgroups) {
    std::set<std::vector<Code>> seen;
    std::deque<std::vector<Code>> work;
    seen.insert({0});
    work.push_back({0});
    while (!work.empty()) {
        std::vector<Code> s = std::move(work.front());
        work.pop_front();
        for (Code g = 1; g < spec.order(); ++g) {
            if (std::binary_search(s.begin(), s.end(), g)) continue;
            std::vector<Code> t = adjoin_element(spec, s, g);
            if (seen.insert(t).second) {
                if (seen.size() > max_subgroups)
                    throw OrderBoundExceeded("subgroup count exceeds limit " + std::to_string(max_subgroups));
                work.push_back(std::move(t));
            }
        }
    }

    LatticeIndex idx;
    idx.spec = spec;
    idx.subgroups.reserve(seen.size());
    for (const auto& elems : seen) idx.subgroups.push_back(Subgroup::from_elements(spec, elems));
    std::sort(idx.subgroups.begin(), idx.subgroups.end());
    idx.build_position_map();

    const long long p = spec.p();
    for (int i = 0; i < idx.size(); ++i) {
        for (int j = 0; j < idx.size(); ++j) {
            if (idx.subgroups[j].order() != idx.subgroups[i].order() * p) continue;
            if (idx.subgroups[i].subset_of(idx.subgroups[j])) idx.covers.emplace_back(i, j);
        }
    }
    return idx;
}

std::string lattice_dot(const LatticeIndex& idx) {
    std::ostringstream out;
    out << "digraph subgroups {\n";
    for (int i = 0; i < idx.size(); ++i)
        out << "  n" << i << " [label=\"#" << i << ":" << idx.subgroups[i].order() << "\"];\n";
    for (const auto& [sub, super] : idx.covers) out << "  n" << sub << " -> n" << super << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

void chains_dfs(const LatticeIndex& idx, const std::vector<std::vector<int>>& ups, int cur, int top,
                std::vector<int>& chain, std::vector<Resolution>& out) {
    if (cur == top) {
        out.push_back(Resolution{chain});
        return;
    }
    for (int next : ups[cur]) {
        if (!idx.subgroups[next].subset_of(idx.subgroups[top])) continue;
        chain.push_back(next);
        chains_dfs(idx, ups, next, top, chain, out);
        chain.pop_back();
    }
}

}  // namespace

std::vector<Resolution> resolutions(const LatticeIndex& idx, int lIdx, int gIdx) {
    if (lIdx < 0 || gIdx < 0 || lIdx >= idx.size() || gIdx >= idx.size())
        throw ValidationError("resolutions: subgroup index out of range");
    if (!idx.subgroups[lIdx].subset_of(idx.subgroups[gIdx]))
        throw NotASubgroup("resolutions: lower subgroup is not contained in the upper one");
    std::vector<std::vector<int>> ups(idx.size());
    for (const auto& [sub, super] : idx.covers) ups[sub].push_back(super);
    for (auto& u : ups) std::sort(u.begin(), u.end());
    std::vector<Resolution> out;
    std::vector<int> chain{lIdx};
    chains_dfs(idx, ups, lIdx, gIdx, chain, out);
    return out;
}

std::vector<std::pair<int, int>> subquotient_pairs(const LatticeIndex& idx,
                                                   const std::vector<long long>& target) {
    const long long p = idx.spec.p();
    if ((target.size() != 2 && target.size() != 3) ||
        std::any_of(target.begin(), target.end(), [p](long long m) { return m != p; }))
        throw UnsupportedTarget("subquotient_pairs: target must be [p,p] or [p,p,p]");
    long long ratio = 1;
    for (std::size_t i = 0; i < target.size(); ++i) ratio *= p;

    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < idx.size(); ++k) {
        const Subgroup& K = idx.subgroups[k];
        if (K.order() % ratio != 0) continue;
        for (int n = 0; n < idx.size(); ++n) {
            const Subgroup& N = idx.subgroups[n];
            if (N.order() * ratio != K.order()) continue;
            if (!N.subset_of(K)) continue;
            if (quotient_invariants(K, N) == target) out.emplace_back(k, n);
        }
    }
    return out;
}

ProductContext make_product_context(const GroupSpec& g) {
    ProductContext ctx;
    ctx.g = g;
    ctx.gamma = product_with_cp(g);
    ctx.latG = all_subgroups(g);
    ctx.lat = all_subgroups(ctx.gamma);

    const long long p = g.p();
    ctx.is_graph.assign(ctx.lat.size(), 0);
    ctx.sigma_to.assign(ctx.lat.size(), -1);
    for (int i = 0; i < ctx.lat.size(); ++i) {
        const Subgroup& S = ctx.lat.subgroups[i];
        if (S.contains(1)) {
            // S contains 1 x C_p, so S = L x C_p for its projection L.
            std::vector<Code> proj;
            for (Code c : S.elements())
                if (c % p == 0) proj.push_back(c / p);
            ctx.sigma_to[i] = ctx.latG.find(proj);
        } else {
            ctx.is_graph[i] = 1;
            ++ctx.graph_count;
        }
    }

    ctx.g_times_cp.assign(ctx.latG.size(), -1);
    ctx.g_times_eps.assign(ctx.latG.size(), -1);
    for (int i = 0; i < ctx.latG.size(); ++i) {
        const Subgroup& L = ctx.latG.subgroups[i];
        ctx.g_times_cp[i] = ctx.lat.find(times_cp(g, L).elements());
        std::vector<int> zeros(L.elements().size(), 0);
        ctx.g_times_eps[i] = ctx.lat.find(graph_subgroup(g, L, zeros).elements());
    }
    return ctx;
}

namespace {

// Positions of sub's elements inside sup's sorted element list.
std::vector<std::size_t> element_positions(const Subgroup& sub, const Subgroup& sup) {
    std::vector<std::size_t> pos;
    pos.reserve(sub.elements().size());
    std::size_t j = 0;
    for (Code c : sub.elements()) {
        while (sup.elements()[j] != c) ++j;
        pos.push_back(j);
    }
    return pos;
}

}  // namespace

SelectionList build_selection_list(const ProductContext& ctx, ChoicePolicy policy) {
    const long long p = ctx.g.p();
    SelectionList list;
    for (int gi = 0; gi < ctx.latG.size(); ++gi) {
        const Subgroup& Gp = ctx.latG.subgroups[gi];
        if (Gp.is_trivial()) continue;

        int lNoncyclic = -1;
        if (Gp.order() % (p * p) == 0) {
            for (int li = 0; li < ctx.latG.size(); ++li) {
                const Subgroup& L = ctx.latG.subgroups[li];
                if (L.order() * p * p != Gp.order() || !L.subset_of(Gp)) continue;
                if (quotient_invariants(Gp, L) == std::vector<long long>{p, p}) {
                    lNoncyclic = li;
                    if (policy == ChoicePolicy::First) break;
                }
            }
        }

        if (lNoncyclic >= 0) {
            const int li = lNoncyclic;
            const Subgroup& L = ctx.latG.subgroups[li];
            list.pairs.push_back({ctx.g_times_cp[gi], ctx.g_times_cp[li], gi, li,
                                  SelectionCase::ProductFromNoncyclic});
            auto pos = element_positions(L, Gp);
            for (const auto& lambda : homs_to_cp(Gp)) {
                if (std::all_of(lambda.begin(), lambda.end(), [](int v) { return v == 0; })) continue;
                std::vector<int> restricted(pos.size());
                for (std::size_t t = 0; t < pos.size(); ++t) restricted[t] = lambda[pos[t]];
                int k = ctx.lat.find(graph_subgroup(ctx.g, Gp, lambda).elements());
                int n = ctx.lat.find(graph_subgroup(ctx.g, L, restricted).elements());
                list.pairs.push_back({k, n, gi, li, SelectionCase::GraphSurjective});
            }
            list.pairs.push_back({ctx.g_times_eps[gi], ctx.g_times_eps[li], gi, li,
                                  SelectionCase::GraphTrivial});
        } else {
            // G' is cyclic: take the unique-style index-p choice instead.
            int lCyclic = -1;
            for (int li = 0; li < ctx.latG.size(); ++li) {
                const Subgroup& L = ctx.latG.subgroups[li];
                if (L.order() * p != Gp.order() || !L.subset_of(Gp)) continue;
                lCyclic = li;
                if (policy == ChoicePolicy::First) break;
            }
            if (lCyclic < 0) throw NoCertificate("build_selection_list: no index-p subgroup found");
            list.pairs.push_back({ctx.g_times_cp[gi], ctx.g_times_eps[lCyclic], gi, lCyclic,
                                  SelectionCase::ProductFromCyclic});
        }
    }
    return list;
}

SelectionList build_selection_list(const GroupSpec& g, ChoicePolicy policy) {
    return build_selection_list(make_product_context(g), policy);
}

}  // namespace brel
