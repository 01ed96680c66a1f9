#include <doctest.h>

#include <algorithm>
#include <set>

#include "brel/burnside.hpp"

using namespace brel;

namespace {

int pos_of(const LatticeIndex& idx, const Subgroup& s) {
    int p = idx.find(s);
    REQUIRE(p >= 0);
    return p;
}

// Literal coset-orbit oracle for restriction: decompose Gamma/M as an L-set.
BurnsideElement restrict_oracle(const LatticeIndex& idx, const Subgroup& L, int mPos) {
    const GroupSpec& spec = idx.spec;
    const Subgroup& M = idx.subgroups[mPos];
    std::set<Code> done;
    SparseVec acc;
    for (Code g = 0; g < spec.order(); ++g) {
        // canonical coset key
        Code key = g;
        for (Code m : M.elements()) key = std::min(key, spec.add(g, m));
        if (!done.insert(key).second) continue;
        // mark the whole L-orbit of this coset
        for (Code l : L.elements()) {
            Code moved = spec.add(l, key);
            Code mk = moved;
            for (Code m : M.elements()) mk = std::min(mk, spec.add(moved, m));
            done.insert(mk);
        }
        // stabilizer of the coset g+M inside L: l+g+M == g+M iff l is in M
        std::vector<Code> stab;
        for (Code l : L.elements())
            if (M.contains(l)) stab.push_back(l);
        Subgroup s = Subgroup::from_elements(spec, stab);
        acc = sparse_axpy(acc, 1, {{pos_of(idx, s), 1}});
    }
    return burnside_from_sparse(idx, acc);
}

}  // namespace

TEST_CASE("ring product: identity and hand examples in C_2 x C_2") {
    GroupSpec g = GroupSpec::make(2, {1, 1});
    LatticeIndex idx = all_subgroups(g);
    int one = pos_of(idx, trivial_subgroup(g));
    int a = pos_of(idx, subgroup_from_codes(g, {2}));  // <(1,0)>
    int b = pos_of(idx, subgroup_from_codes(g, {1}));  // <(0,1)>
    int full = pos_of(idx, full_subgroup(g));

    BurnsideElement A = burnside_basis(idx, a);
    BurnsideElement B = burnside_basis(idx, b);
    BurnsideElement G = burnside_basis(idx, full);
    BurnsideElement one1 = burnside_basis(idx, one);

    CHECK(product(G, A) == A);
    CHECK(product(A, A) == burnside_basis(idx, a, 2));
    CHECK(product(A, B) == one1);  // join is G, meet is trivial
    CHECK(product(one1, one1) == burnside_basis(idx, one, 4));
    // bilinearity on a combination
    BurnsideElement x = A + B - G;
    CHECK(product(x, A) == product(A, A) + product(B, A) - product(G, A));
}

TEST_CASE("ring product matches the orbit-counting oracle on all basis pairs") {
    for (const auto& spec : {GroupSpec::make(2, {1, 1}), GroupSpec::make(2, {2}),
                             GroupSpec::make(3, {1}), GroupSpec::make(2, {1, 1, 1}),
                             GroupSpec::make(2, {2, 1})}) {
        LatticeIndex idx = all_subgroups(spec);
        for (int i = 0; i < idx.size(); ++i) {
            for (int j = i; j < idx.size(); ++j) {
                BurnsideElement lhs = product(burnside_basis(idx, i), burnside_basis(idx, j));
                CHECK(lhs == orbit_oracle_product(idx, i, j));
                CHECK(lhs == product(burnside_basis(idx, j), burnside_basis(idx, i)));
            }
        }
        // associativity on a few triples
        for (int i = 0; i < idx.size(); i += 2) {
            for (int j = 1; j < idx.size(); j += 3) {
                int k = (i + j) % idx.size();
                BurnsideElement x = burnside_basis(idx, i), y = burnside_basis(idx, j),
                                z = burnside_basis(idx, k);
                CHECK(product(product(x, y), z) == product(x, product(y, z)));
            }
        }
    }
}

TEST_CASE("restriction closed form matches the coset-orbit oracle") {
    for (const auto& spec : {GroupSpec::make(2, {1, 1}), GroupSpec::make(2, {2}),
                             GroupSpec::make(3, {1, 1})}) {
        LatticeIndex idx = all_subgroups(spec);
        for (const auto& L : idx.subgroups) {
            for (int m = 0; m < idx.size(); ++m) {
                BurnsideElement r = restrict_to(L, burnside_basis(idx, m));
                CHECK(r == restrict_oracle(idx, L, m));
                for (const auto& [i, c] : r.coeffs) CHECK(idx.subgroups[i].subset_of(L));
            }
        }
    }
}

TEST_CASE("induction is the identity on coefficients with support checking") {
    GroupSpec g = GroupSpec::make(2, {1, 1});
    LatticeIndex idx = all_subgroups(g);
    Subgroup a = subgroup_from_codes(g, {2});
    BurnsideElement x = burnside_basis(idx, pos_of(idx, a));
    CHECK(induce(a, x) == x);
    BurnsideElement top = burnside_basis(idx, idx.size() - 1);
    CHECK_THROWS_AS(induce(a, top), NotASubgroup);
}

TEST_CASE("quotient context: C_4 / C_2 and V_4 / 1") {
    {
        GroupSpec c4 = GroupSpec::make(2, {2});
        Subgroup K = full_subgroup(c4);
        Subgroup N = subgroup_from_codes(c4, {2});
        QuotientContext qc = make_quotient(c4, K, N);
        CHECK(qc.q.order() == 2);
        CHECK(qc.latQ.size() == 2);
        CHECK(qc.drop_element(0) == 0);
        CHECK(qc.drop_element(2) == 0);
        CHECK(qc.drop_element(1) == qc.drop_element(3));
        CHECK(qc.drop_element(1) != 0);
        // subgroup correspondence round trips
        for (const auto& sbar : qc.latQ.subgroups) {
            Subgroup lifted = qc.lift_subgroup(sbar);
            CHECK(N.subset_of(lifted));
            CHECK(qc.drop_subgroup(lifted).elements() == sbar.elements());
        }
        CHECK_THROWS_AS(qc.drop_subgroup(trivial_subgroup(c4)), NotAQuotient);
    }
    {
        GroupSpec v4 = GroupSpec::make(2, {1, 1});
        QuotientContext qc = make_quotient(v4, full_subgroup(v4), trivial_subgroup(v4));
        CHECK(qc.q.order() == 4);
        CHECK(qc.q.exponents() == std::vector<int>{1, 1});
        CHECK(qc.latQ.size() == 5);
        // drop is a bijection here
        std::set<Code> image;
        for (Code c = 0; c < 4; ++c) image.insert(qc.drop_element(c));
        CHECK(image.size() == 4);
    }
    {
        // C_4 x C_2 modulo the diagonal involution: quotient is C_4
        GroupSpec g = GroupSpec::make(2, {2, 1});
        Subgroup N = subgroup_from_codes(g, {g.encode({2, 1})});
        QuotientContext qc = make_quotient(g, full_subgroup(g), N);
        CHECK(qc.q.order() == 4);
        CHECK(qc.q.exponents() == std::vector<int>{2});
    }
}

TEST_CASE("inflate and deflate") {
    GroupSpec v4 = GroupSpec::make(2, {1, 1});
    LatticeIndex idx = all_subgroups(v4);
    Subgroup N = subgroup_from_codes(v4, {1});
    QuotientContext qc = make_quotient(v4, full_subgroup(v4), N);
    CHECK(qc.q.order() == 2);

    // inflate: Sbar -> its lift, over the ambient lattice
    BurnsideElement infl = inflate(qc, idx, burnside_basis(qc.latQ, 0));
    CHECK(infl == burnside_basis(idx, pos_of(idx, N)));
    BurnsideElement inflTop = inflate(qc, idx, burnside_basis(qc.latQ, qc.latQ.size() - 1));
    CHECK(inflTop == burnside_basis(idx, idx.size() - 1));

    // deflate: M -> (M v N)/N
    BurnsideElement defTriv = deflate(qc, burnside_basis(idx, 0));
    CHECK(defTriv == burnside_basis(qc.latQ, 0));
    BurnsideElement defOther = deflate(qc, burnside_basis(idx, pos_of(idx, subgroup_from_codes(v4, {2}))));
    CHECK(defOther == burnside_basis(qc.latQ, qc.latQ.size() - 1));
    // deflate then inflate of an N-saturated subgroup returns the subgroup
    CHECK(inflate(qc, idx, deflate(qc, burnside_basis(idx, pos_of(idx, N)))) ==
          burnside_basis(idx, pos_of(idx, N)));
}

TEST_CASE("quotient of K by itself and by the trivial subgroup") {
    GroupSpec g = GroupSpec::make(3, {1, 1});
    Subgroup K = subgroup_from_codes(g, {1});
    QuotientContext self = make_quotient(g, K, K);
    CHECK(self.q.order() == 1);
    QuotientContext triv = make_quotient(g, K, trivial_subgroup(g));
    CHECK(triv.q.order() == 3);
    CHECK(triv.q.exponents() == std::vector<int>{1});
}

TEST_CASE("module action on the relative module") {
    GroupSpec g = GroupSpec::make(2, {1, 1});
    ProductContext ctx = make_product_context(g);
    Subgroup a = subgroup_from_codes(g, {2});
    Subgroup b = subgroup_from_codes(g, {1});

    // acting by G fixes every graph generator
    for (int i = 0; i < ctx.lat.size(); ++i) {
        if (!ctx.is_graph[i]) continue;
        auto d = graph_classify(g, ctx.lat.subgroups[i]);
        REQUIRE(d.has_value());
        CHECK(module_action(ctx, full_subgroup(g), *d) == burnside_basis(ctx.lat, i));
    }
    // acting by 1 on K x rho gives [G:K] (1 x eps)
    GraphDescriptor bEps{b, {0}};
    BurnsideElement acted = module_action(ctx, trivial_subgroup(g), bEps);
    CHECK(acted == burnside_basis(ctx.lat, 0, 2));
    // <a> . (<b> x eps) = [G : G] (1 x eps) = 1 x eps
    CHECK(module_action(ctx, a, bEps) == burnside_basis(ctx.lat, 0));
}

TEST_CASE("relative support predicate and projection") {
    GroupSpec g = GroupSpec::make(2, {1, 1});
    ProductContext ctx = make_product_context(g);
    GroupSpec gamma = ctx.gamma;

    Subgroup diagDelta = subgroup_from_codes(gamma, {gamma.encode({1, 1, 1})});  // graph
    Subgroup oneCp = subgroup_from_codes(gamma, {1});                            // 1 x C_2
    int dPos = pos_of(ctx.lat, diagDelta);
    int cPos = pos_of(ctx.lat, oneCp);

    CHECK(is_relative(ctx, burnside_basis(ctx.lat, dPos)));
    CHECK_FALSE(is_relative(ctx, burnside_basis(ctx.lat, cPos)));
    BurnsideElement mix = burnside_basis(ctx.lat, dPos) + burnside_basis(ctx.lat, cPos);
    CHECK(project_nongraph(ctx, mix) == burnside_basis(ctx.lat, cPos));
    CHECK(project_nongraph(ctx, burnside_basis(ctx.lat, dPos)) == burnside_zero(ctx.lat));
}

TEST_CASE("signature and its section") {
    GroupSpec g = GroupSpec::make(2, {1, 1});
    ProductContext ctx = make_product_context(g);

    // sigma kills graphs, sends L x C_p to L
    for (int i = 0; i < ctx.lat.size(); ++i) {
        SignatureElement s = signature(ctx, burnside_basis(ctx.lat, i));
        if (ctx.is_graph[i]) {
            CHECK(s.coeffs.empty());
        } else {
            REQUIRE(s.coeffs.size() == 1);
            CHECK(s.coeffs[0].first == ctx.sigma_to[i]);
            CHECK(s.coeffs[0].second == 1);
        }
    }
    // sigma is a left inverse of the section
    for (int i = 0; i < ctx.latG.size(); ++i) {
        SignatureElement s{{{i, 3}}};
        BurnsideElement lifted = lift_section(ctx, s);
        SignatureElement back = signature(ctx, lifted);
        CHECK(back.coeffs == s.coeffs);
    }
    // relative elements are exactly the kernel of sigma restricted to basis spans
    BurnsideElement x = burnside_basis(ctx.lat, ctx.g_times_cp[0]) -
                        burnside_basis(ctx.lat, ctx.g_times_cp[1]);
    CHECK_FALSE(is_relative(ctx, x));
    CHECK_FALSE(signature(ctx, x).coeffs.empty());
}

TEST_CASE("pretty printing") {
    GroupSpec g = GroupSpec::make(2, {1, 1});
    LatticeIndex idx = all_subgroups(g);
    CHECK(subgroup_name(g, trivial_subgroup(g)) == "1");
    CHECK(subgroup_name(g, full_subgroup(g)) == "G");
    CHECK(subgroup_name(g, subgroup_from_codes(g, {1})) == "<(0,1)>");

    BurnsideElement x = burnside_basis(idx, 0) - burnside_basis(idx, 1) +
                        burnside_basis(idx, idx.size() - 1, 2);
    std::string s = pretty(x);
    CHECK(s.find("1 - ") == 0);
    CHECK(s.find("+ 2*G") != std::string::npos);
    CHECK(pretty(burnside_zero(idx)) == "0");
}

TEST_CASE("mixing lattice instances throws") {
    GroupSpec g = GroupSpec::make(2, {1});
    LatticeIndex a = all_subgroups(g);
    LatticeIndex b = all_subgroups(g);
    CHECK_THROWS_AS(burnside_basis(a, 0) + burnside_basis(b, 0), AmbientMismatch);
}
