#include <doctest.h>

#include <algorithm>
#include <set>

#include "brel/subgroup_lattice.hpp"

using namespace brel;

namespace {

// Gaussian binomial [n choose k]_p: number of rank-k subgroups of C_p^n.
long long gauss_binom(int n, int k, long long p) {
    auto bracket = [&](int m) {
        long long v = 0, q = 1;
        for (int i = 0; i < m; ++i) {
            v += q;
            q *= p;
        }
        return v;  // 1 + p + ... + p^{m-1}
    };
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= bracket(n - i);
        den *= bracket(i + 1);
    }
    return num / den;
}

}  // namespace

TEST_CASE("subgroup counts for elementary abelian groups match Gaussian binomials") {
    for (long long p : {2LL, 3LL}) {
        for (int n = 0; n <= 3; ++n) {
            GroupSpec spec = GroupSpec::make(p, std::vector<int>(n, 1));
            LatticeIndex idx = all_subgroups(spec);
            long long expect = 0;
            for (int k = 0; k <= n; ++k) expect += gauss_binom(n, k, p);
            CHECK(idx.size() == expect);
        }
    }
}

TEST_CASE("subgroup counts for mixed groups") {
    CHECK(all_subgroups(GroupSpec::make(2, {2})).size() == 3);       // C_4
    CHECK(all_subgroups(GroupSpec::make(2, {2, 1})).size() == 8);    // C_4 x C_2
    CHECK(all_subgroups(GroupSpec::make(2, {1, 1, 1})).size() == 16);
    CHECK(all_subgroups(GroupSpec::make(3, {2})).size() == 3);       // C_9
}

TEST_CASE("canonical ordering and position map") {
    LatticeIndex idx = all_subgroups(GroupSpec::make(2, {1, 1}));
    for (int i = 0; i + 1 < idx.size(); ++i) CHECK(idx.subgroups[i] < idx.subgroups[i + 1]);
    for (int i = 0; i < idx.size(); ++i) CHECK(idx.find(idx.subgroups[i]) == i);
    CHECK(idx.find(std::vector<Code>{0, 1, 2}) == -1);
    CHECK(idx.subgroups.front().is_trivial());
    CHECK(idx.subgroups.back().order() == 4);
}

TEST_CASE("cover edges") {
    LatticeIndex idx = all_subgroups(GroupSpec::make(2, {1, 1}));
    CHECK(idx.covers.size() == 6);  // 1 under each C_2 (3), each C_2 under G (3)
    for (const auto& [a, b] : idx.covers) {
        CHECK(idx.subgroups[a].order() * 2 == idx.subgroups[b].order());
        CHECK(idx.subgroups[a].subset_of(idx.subgroups[b]));
    }
}

TEST_CASE("subgroup explosion guard") {
    CHECK_THROWS_AS(all_subgroups(GroupSpec::make(2, {1, 1, 1}), 10), OrderBoundExceeded);
}

TEST_CASE("resolutions: counts and the quotient-type dichotomy") {
    {
        LatticeIndex idx = all_subgroups(GroupSpec::make(2, {2}));
        auto rs = resolutions(idx, 0, idx.size() - 1);
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].length() == 2);
    }
    {
        LatticeIndex idx = all_subgroups(GroupSpec::make(2, {1, 1}));
        auto rs = resolutions(idx, 0, idx.size() - 1);
        CHECK(rs.size() == 3);
        for (const auto& r : rs) CHECK(r.length() == 2);
        // degenerate chain: L == G'
        auto self = resolutions(idx, 2, 2);
        REQUIRE(self.size() == 1);
        CHECK(self[0].length() == 0);
    }
    // dichotomy: an index-p^2 pair has p+1 chains iff the quotient is [p,p],
    // and exactly 1 chain iff it is [p^2]
    for (const auto& spec : {GroupSpec::make(2, {2, 1}), GroupSpec::make(3, {1, 1})}) {
        LatticeIndex idx = all_subgroups(spec);
        const long long p = spec.p();
        for (int a = 0; a < idx.size(); ++a) {
            for (int b = 0; b < idx.size(); ++b) {
                if (idx.subgroups[a].order() * p * p != idx.subgroups[b].order()) continue;
                if (!idx.subgroups[a].subset_of(idx.subgroups[b])) continue;
                auto inv = quotient_invariants(idx.subgroups[b], idx.subgroups[a]);
                auto rs = resolutions(idx, a, b);
                if (inv == std::vector<long long>{p, p})
                    CHECK(rs.size() == static_cast<std::size_t>(p + 1));
                else
                    CHECK(rs.size() == 1);
            }
        }
    }
    {
        LatticeIndex idx = all_subgroups(GroupSpec::make(2, {1, 1}));
        CHECK_THROWS_AS(resolutions(idx, idx.size() - 1, 0), NotASubgroup);
    }
}

TEST_CASE("subquotient pairs") {
    LatticeIndex idx = all_subgroups(GroupSpec::make(2, {1, 1, 1}));
    auto ppp = subquotient_pairs(idx, {2, 2, 2});
    REQUIRE(ppp.size() == 1);
    CHECK(idx.subgroups[ppp[0].first].order() == 8);
    CHECK(idx.subgroups[ppp[0].second].order() == 1);

    auto pp = subquotient_pairs(idx, {2, 2});
    // (G', L) with G'/L = C_2 x C_2: order-4 over trivial (7) and order-8 over order-2 (7)
    CHECK(pp.size() == 14);
    for (const auto& [k, n] : pp)
        CHECK(quotient_invariants(idx.subgroups[k], idx.subgroups[n]) ==
              std::vector<long long>{2, 2});

    CHECK_THROWS_AS(subquotient_pairs(idx, {4}), UnsupportedTarget);
    CHECK_THROWS_AS(subquotient_pairs(idx, {2}), UnsupportedTarget);
    CHECK_THROWS_AS(subquotient_pairs(idx, {2, 2, 2, 2}), UnsupportedTarget);
}

TEST_CASE("product context tables") {
    for (const auto& g : {GroupSpec::make(2, {1, 1}), GroupSpec::make(3, {1}),
                          GroupSpec::make(2, {2, 1})}) {
        ProductContext ctx = make_product_context(g);
        const long long p = g.p();
        // graph count oracle: sum over K <= G of p^rank(K)
        long long expect = 0;
        for (const auto& k : ctx.latG.subgroups) {
            long long h = 1;
            auto rank = quotient_invariants(k, trivial_subgroup(g)).size();
            for (std::size_t i = 0; i < rank; ++i) h *= p;
            expect += h;
        }
        CHECK(ctx.graph_count == expect);
        for (int i = 0; i < ctx.lat.size(); ++i) {
            CHECK((ctx.is_graph[i] ? 1 : 0) + (ctx.sigma_to[i] >= 0 ? 1 : 0) == 1);
            if (ctx.sigma_to[i] >= 0)
                CHECK(ctx.latG.subgroups[ctx.sigma_to[i]].order() * p ==
                      ctx.lat.subgroups[i].order());
        }
        for (int i = 0; i < ctx.latG.size(); ++i) {
            CHECK(ctx.sigma_to[ctx.g_times_cp[i]] == i);
            CHECK(ctx.is_graph[ctx.g_times_eps[i]]);
            CHECK(ctx.lat.subgroups[ctx.g_times_eps[i]].order() ==
                  ctx.latG.subgroups[i].order());
        }
    }
}

TEST_CASE("selection list shape") {
    for (const auto& g : {GroupSpec::make(2, {1, 1}), GroupSpec::make(2, {2}),
                          GroupSpec::make(3, {1, 1}), GroupSpec::make(2, {2, 1})}) {
        ProductContext ctx = make_product_context(g);
        SelectionList sel = build_selection_list(ctx);
        long long noncyclic = 0;
        for (const auto& s : ctx.lat.subgroups)
            if (!is_cyclic(s)) ++noncyclic;
        CHECK(static_cast<long long>(sel.pairs.size()) == noncyclic);
        for (const auto& pr : sel.pairs) {
            const long long p = g.p();
            CHECK(quotient_invariants(ctx.lat.subgroups[pr.k], ctx.lat.subgroups[pr.nprime]) ==
                  std::vector<long long>{p, p});
        }
        // the alternate choice policy also yields one pair per non-cyclic subgroup
        SelectionList alt = build_selection_list(ctx, ChoicePolicy::Last);
        CHECK(alt.pairs.size() == sel.pairs.size());
    }
}

TEST_CASE("dot export") {
    LatticeIndex idx = all_subgroups(GroupSpec::make(2, {2}));
    std::string dot = lattice_dot(idx);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n0 [label=\"#0:1\"]") != std::string::npos);
    CHECK(dot.find("n2 [label=\"#2:4\"]") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("n1 -> n2") != std::string::npos);
}
