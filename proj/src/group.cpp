#include "brel/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace brel {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long ipow(long long base, int e) {
    long long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

void GroupSpec::init() {
    moduli_.clear();
    weights_.clear();
    order_ = 1;
    for (int e : exponents_) moduli_.push_back(ipow(p_, e));
    weights_.assign(exponents_.size(), 1);
    for (int i = static_cast<int>(exponents_.size()) - 2; i >= 0; --i)
        weights_[i] = weights_[i + 1] * moduli_[i + 1];
    for (long long m : moduli_) order_ *= m;
}

GroupSpec GroupSpec::make(long long p, std::vector<int> exponents, long long max_order) {
    if (!is_prime(p)) throw ValidationError("p must be prime, got " + std::to_string(p));
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] <= 0) throw ValidationError("exponents must be positive");
        if (i > 0 && exponents[i] > exponents[i - 1])
            throw ValidationError("exponents must be non-increasing");
    }
    int total = std::accumulate(exponents.begin(), exponents.end(), 0);
    long long bound = max_order > 0 ? max_order : ipow(p, 6);
    long long order = 1;
    for (int i = 0; i < total; ++i) {
        order *= p;
        if (order > bound)
            throw OrderBoundExceeded("group order exceeds bound " + std::to_string(bound));
    }
    GroupSpec s;
    s.p_ = p;
    s.exponents_ = std::move(exponents);
    s.init();
    return s;
}

Code GroupSpec::encode(const std::vector<int>& residues) const {
    if (residues.size() != exponents_.size())
        throw ValidationError("residue vector has wrong length");
    Code c = 0;
    for (size_t i = 0; i < residues.size(); ++i) {
        if (residues[i] < 0 || residues[i] >= moduli_[i])
            throw ValidationError("residue out of range");
        c += residues[i] * weights_[i];
    }
    return c;
}

std::vector<int> GroupSpec::decode(Code c) const {
    std::vector<int> r(exponents_.size());
    for (size_t i = 0; i < exponents_.size(); ++i) {
        r[i] = static_cast<int>(c / weights_[i]);
        c %= weights_[i];
    }
    return r;
}

Code GroupSpec::add(Code a, Code b) const {
    Code c = 0;
    for (size_t i = 0; i < exponents_.size(); ++i) {
        long long ra = (a / weights_[i]) % moduli_[i];
        long long rb = (b / weights_[i]) % moduli_[i];
        c += ((ra + rb) % moduli_[i]) * weights_[i];
    }
    return c;
}

Code GroupSpec::neg(Code a) const {
    Code c = 0;
    for (size_t i = 0; i < exponents_.size(); ++i) {
        long long ra = (a / weights_[i]) % moduli_[i];
        c += ((moduli_[i] - ra) % moduli_[i]) * weights_[i];
    }
    return c;
}

Code GroupSpec::mul(long long k, Code a) const {
    Code c = 0;
    for (size_t i = 0; i < exponents_.size(); ++i) {
        long long ra = (a / weights_[i]) % moduli_[i];
        long long kk = ((k % moduli_[i]) + moduli_[i]) % moduli_[i];
        c += ((ra * kk) % moduli_[i]) * weights_[i];
    }
    return c;
}

long long GroupSpec::element_order(Code a) const {
    long long ord = 1;
    for (size_t i = 0; i < exponents_.size(); ++i) {
        long long ra = (a / weights_[i]) % moduli_[i];
        long long oi = moduli_[i] / std::gcd(ra, moduli_[i]);
        ord = std::max(ord, oi);
    }
    return ord;
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    os << p_ << ":[";
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ",";
        os << exponents_[i];
    }
    os << "]";
    return os.str();
}

GroupSpec parse_group_spec(const std::string& text, long long max_order) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&]() -> long long {
        skip_ws();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected integer in group spec at position " + std::to_string(start));
        return std::stoll(text.substr(start, i - start));
    };
    auto expect = [&](char ch) {
        skip_ws();
        if (i >= text.size() || text[i] != ch)
            throw ParseError(std::string("expected '") + ch + "' in group spec");
        ++i;
    };
    long long p = parse_int();
    expect(':');
    expect('[');
    std::vector<int> exps;
    skip_ws();
    if (i < text.size() && text[i] != ']') {
        for (;;) {
            long long e = parse_int();
            exps.push_back(static_cast<int>(e));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    expect(']');
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters in group spec");
    return GroupSpec::make(p, std::move(exps), max_order);
}

GroupSpec product_with_cp(const GroupSpec& g) {
    std::vector<int> exps = g.exponents();
    exps.push_back(1);
    // the appended exponent 1 is always allowed; bump the bound accordingly
    return GroupSpec::make(g.p(), std::move(exps), g.order() * g.p());
}

std::vector<Code> adjoin_element(const GroupSpec& spec, const std::vector<Code>& sorted_subgroup, Code g) {
    if (std::binary_search(sorted_subgroup.begin(), sorted_subgroup.end(), g)) return sorted_subgroup;
    long long k = 1;
    Code cur = g;
    while (!std::binary_search(sorted_subgroup.begin(), sorted_subgroup.end(), cur)) {
        cur = spec.add(cur, g);
        ++k;
    }
    std::vector<Code> out;
    out.reserve(sorted_subgroup.size() * k);
    Code shift = 0;
    for (long long j = 0; j < k; ++j) {
        for (Code e : sorted_subgroup) out.push_back(spec.add(e, shift));
        shift = spec.add(shift, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Code> closure_of(const GroupSpec& spec, const std::vector<Code>& gens) {
    std::vector<Code> t{0};
    for (Code g : gens) t = adjoin_element(spec, t, g);
    return t;
}

std::vector<Code> minimal_generators(const GroupSpec& spec, const std::vector<Code>& elems) {
    // Frattini quotient greedy: pS first, then adjoin elements not yet covered.
    std::vector<Code> frat;
    frat.reserve(elems.size());
    for (Code e : elems) frat.push_back(spec.mul(spec.p(), e));
    std::sort(frat.begin(), frat.end());
    frat.erase(std::unique(frat.begin(), frat.end()), frat.end());
    std::vector<Code> t = frat;
    std::vector<Code> gens;
    for (Code e : elems) {
        if (t.size() == elems.size()) break;
        if (!std::binary_search(t.begin(), t.end(), e)) {
            gens.push_back(e);
            t = adjoin_element(spec, t, e);
        }
    }
    return gens;
}

}  // namespace

Subgroup Subgroup::from_elements(const GroupSpec& ambient, std::vector<Code> sorted_elements) {
    std::sort(sorted_elements.begin(), sorted_elements.end());
    sorted_elements.erase(std::unique(sorted_elements.begin(), sorted_elements.end()), sorted_elements.end());
    if (sorted_elements.empty() || sorted_elements.front() != 0)
        throw ValidationError("subgroup must contain the identity");
    std::vector<Code> closed = closure_of(ambient, sorted_elements);
    if (closed.size() != sorted_elements.size())
        throw ValidationError("element set is not closed under the group law");
    Subgroup s;
    s.ambient_ = ambient;
    s.elems_ = std::move(sorted_elements);
    s.gens_ = minimal_generators(ambient, s.elems_);
    return s;
}

bool Subgroup::contains(Code c) const {
    return std::binary_search(elems_.begin(), elems_.end(), c);
}

bool Subgroup::subset_of(const Subgroup& other) const {
    if (ambient_ != other.ambient_) throw AmbientMismatch("subset test across ambients");
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
    return elems_ < o.elems_;
}

Subgroup subgroup_from_codes(const GroupSpec& spec, const std::vector<Code>& gens) {
    for (Code g : gens)
        if (g < 0 || g >= spec.order()) throw ValidationError("generator code out of range");
    return Subgroup::from_elements(spec, closure_of(spec, gens));
}

Subgroup subgroup_from_generators(const GroupSpec& spec, const std::vector<GroupElement>& gens) {
    std::vector<Code> codes;
    codes.reserve(gens.size());
    for (const auto& g : gens) codes.push_back(spec.encode(g.residues));
    return subgroup_from_codes(spec, codes);
}

Subgroup trivial_subgroup(const GroupSpec& spec) {
    return Subgroup::from_elements(spec, {0});
}

Subgroup full_subgroup(const GroupSpec& spec) {
    std::vector<Code> all(spec.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup::from_elements(spec, std::move(all));
}

std::pair<Subgroup, Subgroup> meet_join(const Subgroup& a, const Subgroup& b) {
    if (a.ambient() != b.ambient()) throw AmbientMismatch("meet_join across ambients");
    std::vector<Code> inter;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(inter));
    std::vector<Code> join = a.elements();
    for (Code g : b.generators()) join = adjoin_element(a.ambient(), join, g);
    return {Subgroup::from_elements(a.ambient(), std::move(inter)),
            Subgroup::from_elements(a.ambient(), std::move(join))};
}

std::vector<long long> quotient_invariants(const Subgroup& K, const Subgroup& N) {
    if (K.ambient() != N.ambient()) throw AmbientMismatch("quotient across ambients");
    if (!N.subset_of(K)) throw NotASubgroup("N is not contained in K");
    const GroupSpec& spec = K.ambient();
    long long p = spec.p();
    // s_j = log_p of the number of cosets killed by multiplication by p^j
    std::vector<int> s{0};
    long long pj = 1;
    for (;;) {
        pj *= p;
        long long count = 0;
        for (Code x : K.elements())
            if (N.contains(spec.mul(pj, x))) ++count;
        long long cosets = count / N.order();
        int sj = 0;
        while (cosets > 1) {
            cosets /= p;
            ++sj;
        }
        s.push_back(sj);
        if (count == K.order()) break;
    }
    int levels = static_cast<int>(s.size()) - 1;
    std::vector<int> d(levels + 1, 0);
    for (int j = 1; j <= levels; ++j) d[j] = s[j] - s[j - 1];
    std::vector<long long> invs;
    for (int i = 1; i <= d[1]; ++i) {
        int e = 0;
        for (int j = 1; j <= levels; ++j)
            if (d[j] >= i) ++e;
        long long m = 1;
        while (e-- > 0) m *= p;
        invs.push_back(m);
    }
    return invs;
}

bool is_cyclic(const Subgroup& s) {
    for (Code e : s.elements())
        if (s.ambient().element_order(e) == s.order()) return true;
    return false;
}

namespace {

GroupSpec cp_spec(long long p) {
    return GroupSpec::make(p, {1});
}

}  // namespace

GoursatQuintuple goursat_decompose(const GroupSpec& g, const Subgroup& S) {
    GroupSpec gamma = product_with_cp(g);
    if (S.ambient() != gamma) throw AmbientMismatch("subgroup is not in G x C_p");
    long long p = g.p();
    std::vector<Code> kElems, nElems, bResidues{0};
    bool nontrivial_fiber_value = false;
    std::map<Code, int> rho;
    for (Code e : S.elements()) {
        Code d = e / p;
        int c = static_cast<int>(e % p);
        kElems.push_back(d);
        if (c == 0) nElems.push_back(d);
        if (c != 0) nontrivial_fiber_value = true;
        if (d == 0 && c != 0) bResidues.push_back(c);
        if (!rho.count(d)) rho[d] = c;
    }
    std::sort(kElems.begin(), kElems.end());
    kElems.erase(std::unique(kElems.begin(), kElems.end()), kElems.end());
    GoursatQuintuple q;
    q.K = Subgroup::from_elements(g, std::move(kElems));
    q.N = Subgroup::from_elements(g, std::move(nElems));
    GroupSpec cp = cp_spec(p);
    q.A = nontrivial_fiber_value ? full_subgroup(cp) : trivial_subgroup(cp);
    std::sort(bResidues.begin(), bResidues.end());
    bResidues.erase(std::unique(bResidues.begin(), bResidues.end()), bResidues.end());
    std::vector<Code> bCodes(bResidues.begin(), bResidues.end());
    q.B = Subgroup::from_elements(cp, std::move(bCodes));
    bool bFull = q.B.order() == p;
    q.theta.reserve(q.K.order());
    for (Code d : q.K.elements()) q.theta.push_back(bFull ? 0 : rho[d]);
    return q;
}

Subgroup goursat_compose(const GroupSpec& g, const GoursatQuintuple& q) {
    long long p = g.p();
    if (q.K.ambient() != g || q.N.ambient() != g) throw InvalidQuintuple("K, N must live in G");
    if (!q.N.subset_of(q.K)) throw InvalidQuintuple("N not contained in K");
    if (!q.B.subset_of(q.A)) throw InvalidQuintuple("B not contained in A");
    if (q.K.order() * q.B.order() != q.N.order() * q.A.order())
        throw InvalidQuintuple("|K|/|N| != |A|/|B|");
    if (q.theta.size() != static_cast<size_t>(q.K.order()))
        throw InvalidQuintuple("theta must be defined on all of K");
    std::vector<Code> elems;
    for (size_t i = 0; i < q.theta.size(); ++i) {
        Code d = q.K.elements()[i];
        for (Code b : q.B.elements()) {
            long long c = (q.theta[i] + b) % p;
            elems.push_back(d * p + c);
        }
    }
    GroupSpec gamma = product_with_cp(g);
    Subgroup S;
    try {
        S = Subgroup::from_elements(gamma, std::move(elems));
    } catch (const ValidationError& e) {
        throw InvalidQuintuple(std::string("theta is not a coset isomorphism: ") + e.what());
    }
    if (S.order() != q.K.order() * q.B.order())
        throw InvalidQuintuple("theta is not well defined on cosets");
    // round-trip sanity on the pieces
    GoursatQuintuple back = goursat_decompose(g, S);
    if (back.K != q.K || back.N != q.N || back.A != q.A || back.B != q.B)
        throw InvalidQuintuple("quintuple data is inconsistent");
    return S;
}

std::optional<GraphDescriptor> graph_classify(const GroupSpec& g, const Subgroup& S) {
    GroupSpec gamma = product_with_cp(g);
    if (S.ambient() != gamma) throw AmbientMismatch("subgroup is not in G x C_p");
    long long p = g.p();
    for (long long c = 1; c < p; ++c)
        if (S.contains(c)) return std::nullopt;  // meets 1 x C_p
    std::vector<Code> domain;
    std::map<Code, int> rho;
    domain.reserve(S.order());
    for (Code e : S.elements()) {
        domain.push_back(e / p);
        rho[e / p] = static_cast<int>(e % p);
    }
    GraphDescriptor d;
    d.domain = Subgroup::from_elements(g, std::move(domain));
    for (Code gen : d.domain.generators()) d.rho_on_generators.push_back(rho[gen]);
    return d;
}

Subgroup graph_subgroup(const GroupSpec& g, const Subgroup& domain, const std::vector<int>& rho_values) {
    if (domain.ambient() != g) throw AmbientMismatch("graph domain must live in G");
    if (rho_values.size() != static_cast<size_t>(domain.order()))
        throw ValidationError("rho values must align with domain elements");
    long long p = g.p();
    std::vector<Code> elems;
    elems.reserve(domain.order());
    for (size_t i = 0; i < rho_values.size(); ++i)
        elems.push_back(domain.elements()[i] * p + rho_values[i] % p);
    return Subgroup::from_elements(product_with_cp(g), std::move(elems));
}

Subgroup times_cp(const GroupSpec& g, const Subgroup& domain) {
    if (domain.ambient() != g) throw AmbientMismatch("domain must live in G");
    long long p = g.p();
    std::vector<Code> elems;
    elems.reserve(domain.order() * p);
    for (Code d : domain.elements())
        for (long long c = 0; c < p; ++c) elems.push_back(d * p + c);
    return Subgroup::from_elements(product_with_cp(g), std::move(elems));
}

namespace {

// Coordinates of every element of s over its minimal generators, modulo the
// Frattini subgroup pS. coords[i] aligns with s.elements()[i].
std::vector<std::vector<int>> frattini_coordinates(const Subgroup& s) {
    const GroupSpec& spec = s.ambient();
    long long p = spec.p();
    int r = static_cast<int>(s.generators().size());
    std::vector<Code> frat;
    frat.reserve(s.order());
    for (Code e : s.elements()) frat.push_back(spec.mul(p, e));
    std::sort(frat.begin(), frat.end());
    frat.erase(std::unique(frat.begin(), frat.end()), frat.end());
    auto pos = [&](Code e) {
        return static_cast<size_t>(
            std::lower_bound(s.elements().begin(), s.elements().end(), e) - s.elements().begin());
    };
    std::vector<std::vector<int>> coords(s.order());
    std::vector<int> tuple(r, 0);
    for (;;) {
        Code e = 0;
        for (int i = 0; i < r; ++i) e = spec.add(e, spec.mul(tuple[i], s.generators()[i]));
        for (Code f : frat) coords[pos(spec.add(e, f))] = tuple;
        int i = r - 1;
        while (i >= 0 && ++tuple[i] == p) tuple[i--] = 0;
        if (i < 0) break;
    }
    return coords;
}

}  // namespace

std::vector<int> hom_from_generator_values(const Subgroup& s, const std::vector<int>& gen_values) {
    if (gen_values.size() != s.generators().size())
        throw ValidationError("one value per stored generator required");
    long long p = s.ambient().p();
    auto coords = frattini_coordinates(s);
    std::vector<int> values(s.order());
    for (size_t i = 0; i < coords.size(); ++i) {
        long long v = 0;
        for (size_t j = 0; j < gen_values.size(); ++j) v += 1LL * coords[i][j] * gen_values[j];
        values[i] = static_cast<int>(v % p);
    }
    return values;
}

std::vector<std::vector<int>> homs_to_cp(const Subgroup& s) {
    long long p = s.ambient().p();
    int r = static_cast<int>(s.generators().size());
    auto coords = frattini_coordinates(s);
    std::vector<std::vector<int>> out;
    std::vector<int> assign(r, 0);
    for (;;) {
        std::vector<int> values(s.order());
        for (size_t i = 0; i < coords.size(); ++i) {
            long long v = 0;
            for (int j = 0; j < r; ++j) v += 1LL * coords[i][j] * assign[j];
            values[i] = static_cast<int>(v % p);
        }
        out.push_back(std::move(values));
        int i = r - 1;
        while (i >= 0 && ++assign[i] == static_cast<int>(p)) assign[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace brel
