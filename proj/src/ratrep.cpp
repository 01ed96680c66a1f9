#include "brel/ratrep.hpp"

#include <algorithm>
#include <numeric>

namespace brel {

namespace {

long long euler_phi(long long m) {
    long long result = m;
    for (long long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            while (m % q == 0) m /= q;
            result -= result / q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long long moebius(long long m) {
    long long mu = 1;
    for (long long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            m /= q;
            if (m % q == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

}  // namespace

RationalCharacter perm_character(const LatticeIndex& idx, const Subgroup& L) {
    if (L.ambient() != idx.spec) throw NotASubgroup("perm_character: wrong ambient group");
    RationalCharacter chi;
    chi.ambient = idx.spec;
    chi.values.assign(idx.spec.order(), 0);
    Int index = idx.spec.order() / L.order();
    for (Code c : L.elements()) chi.values[c] = index;
    return chi;
}

long long ramanujan_sum(long long m, long long a) {
    if (m < 1) throw ValidationError("ramanujan_sum: m must be positive");
    long long d = std::gcd(((a % m) + m) % m, m);  // gcd(0, m) == m covers a == 0
    long long md = m / d;
    return moebius(md) * (euler_phi(m) / euler_phi(md));
}

IrreducibleBasis irreducible_basis(const LatticeIndex& idx) {
    const GroupSpec& spec = idx.spec;
    IrreducibleBasis basis;
    basis.ambient = spec;
    Subgroup full = full_subgroup(spec);

    for (int ni = 0; ni < idx.size(); ++ni) {
        const Subgroup& N = idx.subgroups[ni];
        auto inv = quotient_invariants(full, N);
        if (inv.size() > 1) continue;
        long long m = inv.empty() ? 1 : inv[0];

        IrreducibleItem item;
        item.kernel_index = ni;
        item.quotient_order = m;
        item.character.ambient = spec;
        item.character.values.assign(spec.order(), 0);

        if (m == 1) {
            std::fill(item.character.values.begin(), item.character.values.end(), Int(1));
        } else {
            // A generator of the cyclic quotient: first element whose coset
            // order equals m.
            Code gen = -1;
            for (Code g = 0; g < spec.order(); ++g) {
                long long k = 1;
                Code acc = g;
                while (!N.contains(acc)) {
                    acc = spec.add(acc, g);
                    ++k;
                }
                if (k == m) {
                    gen = g;
                    break;
                }
            }
            if (gen < 0) throw NoCertificate("irreducible_basis: cyclic quotient has no generator");
            // Discrete logs by direct walk through the powers of gen.
            std::vector<int> dlog(spec.order(), -1);
            Code acc = 0;
            for (long long k = 0; k < m; ++k) {
                for (Code n : N.elements()) dlog[spec.add(acc, n)] = static_cast<int>(k);
                acc = spec.add(acc, gen);
            }
            for (Code g = 0; g < spec.order(); ++g) {
                if (dlog[g] < 0) throw NoCertificate("irreducible_basis: incomplete discrete log table");
                item.character.values[g] = ramanujan_sum(m, dlog[g]);
            }
        }
        basis.items.push_back(std::move(item));
    }
    return basis;
}

std::vector<Int> decompose(const RationalCharacter& psi, const IrreducibleBasis& basis) {
    if (psi.ambient != basis.ambient) throw NotACharacter("decompose: ambient mismatch");
    const long long n = basis.ambient.order();
    if (static_cast<long long>(psi.values.size()) != n)
        throw NotACharacter("decompose: wrong value-vector length");

    std::vector<Int> mult;
    mult.reserve(basis.items.size());
    for (const auto& item : basis.items) {
        Int dot = 0;
        for (long long g = 0; g < n; ++g) dot += psi.values[g] * item.character.values[g];
        Int denom = Int(n) * euler_phi(item.quotient_order);
        if (dot % denom != 0) throw NotACharacter("decompose: non-integral multiplicity");
        mult.push_back(dot / denom);
    }

    std::vector<Int> rebuilt(n, 0);
    for (std::size_t i = 0; i < basis.items.size(); ++i)
        for (long long g = 0; g < n; ++g) rebuilt[g] += mult[i] * basis.items[i].character.values[g];
    for (long long g = 0; g < n; ++g)
        if (rebuilt[g] != psi.values[g]) throw NotACharacter("decompose: reconstruction failed");
    return mult;
}

FMatrix f_matrix(const LatticeIndex& idx, bool graphs_only) {
    IrreducibleBasis basis = irreducible_basis(idx);
    FMatrix out;
    for (int i = 0; i < idx.size(); ++i) {
        // Graph subgroups of G x C_p are exactly those avoiding 1 x C_p,
        // i.e. not containing the code-1 element of the last factor.
        if (graphs_only) {
            if (idx.spec.rank() == 0 || idx.spec.exponents().back() != 1)
                throw ValidationError("f_matrix: graphs_only requires an ambient of the form G x C_p");
            if (idx.subgroups[i].contains(1)) continue;
        }
        out.row_subgroups.push_back(i);
    }
    out.m = IntMatrix(static_cast<int>(out.row_subgroups.size()), static_cast<int>(basis.items.size()));
    for (int r = 0; r < out.m.rows; ++r) {
        auto mult = decompose(perm_character(idx, idx.subgroups[out.row_subgroups[r]]), basis);
        for (int c = 0; c < out.m.cols; ++c) out.m.at(r, c) = mult[c];
    }
    return out;
}

std::vector<Int> cokernel_invariants(const IntMatrix& m) {
    // The invariant factors depend only on the row lattice, so compress the
    // (often very tall) matrix through the sparse echelon before running the
    // dense Smith reduction on the small square remainder.
    std::vector<SparseVec> rows;
    rows.reserve(m.rows);
    for (int r = 0; r < m.rows; ++r) rows.push_back(m.row_sparse(r));
    Lattice rowLat = Lattice::from_rows(m.cols, rows);
    std::vector<Int> diag = snf_diagonal(rowLat.basis_matrix());
    std::vector<Int> out;
    for (const Int& d : diag)
        if (d != 0) out.push_back(d);
    return out;
}

}  // namespace brel
