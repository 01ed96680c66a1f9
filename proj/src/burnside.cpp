#include "brel/burnside.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace brel {

namespace {

void check_same(const BurnsideElement& a, const BurnsideElement& b) {
    if (a.lattice == nullptr || a.lattice != b.lattice)
        throw AmbientMismatch("burnside elements belong to different lattices");
}

BurnsideElement from_map(const LatticeIndex& idx, const std::map<int, Int>& acc) {
    BurnsideElement out;
    out.lattice = &idx;
    for (const auto& [i, c] : acc)
        if (c != 0) out.coeffs.emplace_back(i, c);
    return out;
}

}  // namespace

BurnsideElement burnside_zero(const LatticeIndex& idx) { return {&idx, {}}; }

BurnsideElement burnside_basis(const LatticeIndex& idx, int pos, const Int& c) {
    if (pos < 0 || pos >= idx.size()) throw ValidationError("basis position out of range");
    BurnsideElement out{&idx, {}};
    if (c != 0) out.coeffs.emplace_back(pos, c);
    return out;
}

BurnsideElement burnside_from_sparse(const LatticeIndex& idx, SparseVec coeffs) {
    for (const auto& [i, c] : coeffs)
        if (i < 0 || i >= idx.size()) throw ValidationError("coefficient index out of range");
    return {&idx, std::move(coeffs)};
}

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
    check_same(a, b);
    return {a.lattice, sparse_axpy(a.coeffs, 1, b.coeffs)};
}

BurnsideElement operator-(const BurnsideElement& a, const BurnsideElement& b) {
    check_same(a, b);
    return {a.lattice, sparse_axpy(a.coeffs, -1, b.coeffs)};
}

BurnsideElement operator*(const Int& c, const BurnsideElement& a) {
    return {a.lattice, sparse_scale(c, a.coeffs)};
}

BurnsideElement product(const BurnsideElement& x, const BurnsideElement& y) {
    check_same(x, y);
    const LatticeIndex& idx = *x.lattice;
    std::map<int, Int> acc;
    for (const auto& [i, ci] : x.coeffs) {
        for (const auto& [j, cj] : y.coeffs) {
            auto [meet, join] = meet_join(idx.subgroups[i], idx.subgroups[j]);
            Int mult = idx.spec.order() / join.order();
            acc[idx.find(meet)] += ci * cj * mult;
        }
    }
    return from_map(idx, acc);
}

BurnsideElement orbit_oracle_product(const LatticeIndex& idx, int lPos, int mPos) {
    const GroupSpec& spec = idx.spec;
    const Subgroup& L = idx.subgroups[lPos];
    const Subgroup& M = idx.subgroups[mPos];
    const long long n = spec.order();

    // Coset id of every group element, for each of the two coset spaces.
    auto coset_ids = [&](const Subgroup& S) {
        std::vector<int> id(n, -1);
        int next = 0;
        for (Code g = 0; g < n; ++g) {
            if (id[g] >= 0) continue;
            for (Code s : S.elements()) id[spec.add(g, s)] = next;
            ++next;
        }
        return std::pair(id, next);
    };
    auto [lid, nl] = coset_ids(L);
    auto [mid, nm] = coset_ids(M);

    std::vector<char> done(static_cast<std::size_t>(nl) * nm, 0);
    std::map<int, Int> acc;
    for (Code x = 0; x < n; ++x) {
        for (Code y = 0; y < n; ++y) {
            int key = lid[x] * nm + mid[y];
            if (done[key]) continue;
            // Walk the whole orbit of (xL, yM) and collect the stabilizer.
            std::vector<Code> stab;
            for (Code g = 0; g < n; ++g) {
                int k2 = lid[spec.add(x, g)] * nm + mid[spec.add(y, g)];
                done[k2] = 1;
                if (k2 == key) stab.push_back(g);
            }
            std::sort(stab.begin(), stab.end());
            acc[idx.find(stab)] += 1;
        }
    }
    return from_map(idx, acc);
}

BurnsideElement induce(const Subgroup& from, const BurnsideElement& x) {
    const LatticeIndex& idx = *x.lattice;
    for (const auto& [i, c] : x.coeffs)
        if (!idx.subgroups[i].subset_of(from))
            throw NotASubgroup("induce: support is not contained in the inducing subgroup");
    return x;
}

BurnsideElement restrict_to(const Subgroup& to, const BurnsideElement& x) {
    const LatticeIndex& idx = *x.lattice;
    if (to.ambient() != idx.spec) throw AmbientMismatch("restrict_to: wrong ambient group");
    std::map<int, Int> acc;
    for (const auto& [i, c] : x.coeffs) {
        auto [meet, join] = meet_join(to, idx.subgroups[i]);
        Int mult = idx.spec.order() / join.order();
        acc[idx.find(meet)] += c * mult;
    }
    return from_map(idx, acc);
}

Code QuotientContext::drop_element(Code k) const {
    const auto& elems = K.elements();
    auto it = std::lower_bound(elems.begin(), elems.end(), k);
    if (it == elems.end() || *it != k) throw NotASubgroup("drop_element: element outside K");
    return drop_codes[static_cast<std::size_t>(it - elems.begin())];
}

Subgroup QuotientContext::lift_subgroup(const Subgroup& sbar) const {
    std::vector<Code> elems;
    for (std::size_t i = 0; i < K.elements().size(); ++i)
        if (sbar.contains(drop_codes[i])) elems.push_back(K.elements()[i]);
    return Subgroup::from_elements(gamma, std::move(elems));
}

Subgroup QuotientContext::drop_subgroup(const Subgroup& s) const {
    if (!N.subset_of(s) || !s.subset_of(K))
        throw NotAQuotient("drop_subgroup: subgroup not between N and K");
    std::vector<Code> image;
    for (Code e : s.elements()) image.push_back(drop_element(e));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return Subgroup::from_elements(q, std::move(image));
}

QuotientContext make_quotient(const GroupSpec& gamma, const Subgroup& K, const Subgroup& N) {
    if (K.ambient() != gamma || N.ambient() != gamma)
        throw AmbientMismatch("make_quotient: wrong ambient group");
    if (!N.subset_of(K)) throw NotASubgroup("make_quotient: N is not contained in K");

    QuotientContext qc;
    qc.gamma = gamma;
    qc.K = K;
    qc.N = N;
    const long long p = gamma.p();

    const auto& gens = K.generators();
    const int s = static_cast<int>(gens.size());
    if (s == 0 || K.order() == N.order()) {
        qc.q = GroupSpec::make(p, {});
        qc.drop_codes.assign(K.elements().size(), 0);
        qc.latQ = all_subgroups(qc.q);
        return qc;
    }

    std::vector<long long> moduli(s);
    for (int i = 0; i < s; ++i) moduli[i] = gamma.element_order(gens[i]);

    // Enumerate generator-coordinate tuples; record one coordinate vector per
    // element of K and collect the relation lattice of the map onto K/N.
    std::map<Code, std::vector<long long>> coords_of;
    HnfBuilder lam(s);
    std::vector<long long> tup(s, 0);
    while (true) {
        Code e = 0;
        for (int i = 0; i < s; ++i) e = gamma.add(e, gamma.mul(tup[i], gens[i]));
        coords_of.emplace(e, tup);
        if (N.contains(e)) {
            SparseVec row;
            for (int i = 0; i < s; ++i)
                if (tup[i] != 0) row.emplace_back(i, tup[i]);
            lam.add(std::move(row));
        }
        int i = s - 1;
        while (i >= 0 && tup[i] + 1 == moduli[i]) tup[i--] = 0;
        if (i < 0) break;
        ++tup[i];
    }
    for (int i = 0; i < s; ++i) lam.add({{i, Int(moduli[i])}});
    if (lam.rank() != s) throw NoCertificate("make_quotient: relation lattice is not full rank");

    IntMatrix a(s, s);
    {
        auto rows = lam.canonical_rows();
        for (int r = 0; r < s; ++r)
            for (const auto& [cI, v] : rows[r]) a.at(r, cI) = v;
    }
    SnfResult sn = snf(a);
    std::vector<long long> d(s);
    for (int i = 0; i < s; ++i) d[i] = sn.s.at(i, i).convert_to<long long>();

    // d is ascending by divisibility; the abstract model lists moduli
    // non-increasing, so the nontrivial slots are taken in reverse.
    std::vector<int> slots;
    for (int i = s - 1; i >= 0; --i)
        if (d[i] > 1) slots.push_back(i);
    std::vector<int> exps;
    for (int j : slots) {
        long long m = d[j];
        int e = 0;
        while (m > 1) {
            if (m % p != 0) throw NoCertificate("make_quotient: non-p-power invariant factor");
            m /= p;
            ++e;
        }
        exps.push_back(e);
    }
    qc.q = GroupSpec::make(p, exps);
    if (qc.q.order() * N.order() != K.order())
        throw NoCertificate("make_quotient: quotient order mismatch");

    qc.drop_codes.resize(K.elements().size());
    for (std::size_t t = 0; t < K.elements().size(); ++t) {
        const auto& c = coords_of.at(K.elements()[t]);
        std::vector<int> residues(slots.size());
        for (std::size_t u = 0; u < slots.size(); ++u) {
            Int w = 0;
            for (int i = 0; i < s; ++i) w += Int(c[i]) * sn.v.at(i, slots[u]);
            Int r = w % d[slots[u]];
            if (r < 0) r += d[slots[u]];
            residues[u] = r.convert_to<int>();
        }
        qc.drop_codes[t] = qc.q.encode(residues);
    }

    // Homomorphism spot check: additivity against each generator implies the
    // full property.
    for (std::size_t t = 0; t < K.elements().size(); ++t) {
        for (Code g : gens) {
            Code lhs = qc.drop_element(gamma.add(K.elements()[t], g));
            Code rhs = qc.q.add(qc.drop_codes[t], qc.drop_element(g));
            if (lhs != rhs) throw NoCertificate("make_quotient: coset map is not a homomorphism");
        }
    }
    std::vector<Code> image(qc.drop_codes);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (static_cast<long long>(image.size()) != qc.q.order())
        throw NoCertificate("make_quotient: coset map is not surjective");

    qc.latQ = all_subgroups(qc.q);
    return qc;
}

BurnsideElement inflate(const QuotientContext& qc, const LatticeIndex& ambient, const BurnsideElement& x) {
    if (x.lattice != &qc.latQ) throw AmbientMismatch("inflate: element is not over the quotient lattice");
    if (ambient.spec != qc.gamma) throw AmbientMismatch("inflate: wrong ambient lattice");
    std::map<int, Int> acc;
    for (const auto& [i, c] : x.coeffs) {
        int pos = ambient.find(qc.lift_subgroup(qc.latQ.subgroups[i]).elements());
        if (pos < 0) throw NoCertificate("inflate: lifted subgroup missing from ambient lattice");
        acc[pos] += c;
    }
    return from_map(ambient, acc);
}

BurnsideElement deflate(const QuotientContext& qc, const BurnsideElement& x) {
    const LatticeIndex& idx = *x.lattice;
    if (idx.spec != qc.gamma) throw AmbientMismatch("deflate: wrong ambient lattice");
    std::map<int, Int> acc;
    for (const auto& [i, c] : x.coeffs) {
        auto [meet, join] = meet_join(idx.subgroups[i], qc.N);
        if (!join.subset_of(qc.K)) throw NotAQuotient("deflate: M v N is not contained in K");
        acc[qc.latQ.find(qc.drop_subgroup(join).elements())] += c;
    }
    return from_map(qc.latQ, acc);
}

BurnsideElement module_action(const ProductContext& ctx, const Subgroup& m, const GraphDescriptor& g) {
    if (m.ambient() != ctx.g || g.domain.ambient() != ctx.g)
        throw AmbientMismatch("module_action: arguments must live in G");
    auto [meet, join] = meet_join(g.domain, m);
    Int mult = ctx.g.order() / join.order();

    std::vector<int> rho = hom_from_generator_values(g.domain, g.rho_on_generators);
    std::vector<int> restricted;
    restricted.reserve(meet.elements().size());
    std::size_t j = 0;
    for (Code c : meet.elements()) {
        while (g.domain.elements()[j] != c) ++j;
        restricted.push_back(rho[j]);
    }
    int pos = ctx.lat.find(graph_subgroup(ctx.g, meet, restricted).elements());
    return burnside_basis(ctx.lat, pos, mult);
}

bool is_relative(const ProductContext& ctx, const BurnsideElement& x) {
    if (x.lattice != &ctx.lat) throw AmbientMismatch("is_relative: element is not over Gamma");
    return std::all_of(x.coeffs.begin(), x.coeffs.end(),
                       [&](const auto& t) { return ctx.is_graph[t.first]; });
}

BurnsideElement project_nongraph(const ProductContext& ctx, const BurnsideElement& x) {
    if (x.lattice != &ctx.lat) throw AmbientMismatch("project_nongraph: element is not over Gamma");
    BurnsideElement out{&ctx.lat, {}};
    for (const auto& [i, c] : x.coeffs)
        if (!ctx.is_graph[i]) out.coeffs.emplace_back(i, c);
    return out;
}

SignatureElement signature(const ProductContext& ctx, const BurnsideElement& x) {
    if (x.lattice != &ctx.lat) throw AmbientMismatch("signature: element is not over Gamma");
    std::map<int, Int> acc;
    for (const auto& [i, c] : x.coeffs)
        if (ctx.sigma_to[i] >= 0) acc[ctx.sigma_to[i]] += c;
    SignatureElement out;
    for (const auto& [i, c] : acc)
        if (c != 0) out.coeffs.emplace_back(i, c);
    return out;
}

BurnsideElement lift_section(const ProductContext& ctx, const SignatureElement& s) {
    std::map<int, Int> acc;
    for (const auto& [i, c] : s.coeffs) acc[ctx.g_times_cp[i]] += c;
    return from_map(ctx.lat, acc);
}

std::string subgroup_name(const GroupSpec& spec, const Subgroup& s) {
    if (s.is_trivial()) return "1";
    if (s.order() == spec.order()) return "G";
    std::ostringstream out;
    out << "<";
    bool first = true;
    for (Code g : s.generators()) {
        if (!first) out << ",";
        first = false;
        auto res = spec.decode(g);
        if (res.size() == 1) {
            out << res[0];
        } else {
            out << "(";
            for (std::size_t i = 0; i < res.size(); ++i) out << (i ? "," : "") << res[i];
            out << ")";
        }
    }
    out << ">";
    return out.str();
}

std::string pretty(const BurnsideElement& x) {
    if (x.coeffs.empty()) return "0";
    const LatticeIndex& idx = *x.lattice;
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : x.coeffs) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out << a << "*";
        out << subgroup_name(idx.spec, idx.subgroups[i]);
    }
    return out.str();
}

}  // namespace brel
