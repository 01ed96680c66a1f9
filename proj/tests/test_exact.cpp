#include <doctest.h>

#include <algorithm>

#include "brel/exact.hpp"

using namespace brel;

namespace {

IntMatrix from_rows(std::vector<std::vector<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Int det_oracle(const IntMatrix& m) {
    // cofactor expansion
    int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * det_oracle(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

bool is_hnf(const IntMatrix& h) {
    int lastPivot = -1;
    bool zeroSeen = false;
    for (int r = 0; r < h.rows; ++r) {
        int pivot = -1;
        for (int c = 0; c < h.cols; ++c)
            if (h.at(r, c) != 0) {
                pivot = c;
                break;
            }
        if (pivot < 0) {
            zeroSeen = true;
            continue;
        }
        if (zeroSeen) return false;           // nonzero row after a zero row
        if (pivot <= lastPivot) return false;  // pivots must move right
        lastPivot = pivot;
        if (h.at(r, pivot) <= 0) return false;
        for (int k = 0; k < r; ++k)
            if (h.at(k, pivot) < 0 || h.at(k, pivot) >= h.at(r, pivot)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hnf: exhaustive small matrices") {
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (long long c = -2; c <= 2; ++c)
                for (long long d = -2; d <= 2; ++d) {
                    IntMatrix m = from_rows({{a, b}, {c, d}});
                    HnfResult r = hnf(m);
                    CHECK(is_hnf(r.h));
                    CHECK(mat_mul(r.u, m) == r.h);
                    CHECK((mat_det(r.u) == 1 || mat_det(r.u) == -1));
                    // HNF is a canonical form: row-permuted input gives the same h
                    IntMatrix swapped = from_rows({{c, d}, {a, b}});
                    CHECK(hnf(swapped).h == r.h);
                }
}

TEST_CASE("snf: transforms, divisibility chain") {
    std::vector<IntMatrix> cases = {
        from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
        from_rows({{1, 0}, {0, 1}}),
        from_rows({{0, 0}, {0, 0}}),
        from_rows({{6, 10}, {15, 4}}),
        from_rows({{2, 0, 0}, {0, 3, 0}}),
    };
    for (const auto& m : cases) {
        SnfResult r = snf(m);
        CHECK(mat_mul(mat_mul(r.u, m), r.v) == r.s);
        Int prev = 0;
        for (int i = 0; i < std::min(r.s.rows, r.s.cols); ++i) {
            for (int j = 0; j < r.s.cols; ++j)
                if (j != i) CHECK(r.s.at(i, j) == 0);
            const Int& d = r.s.at(i, i);
            CHECK(d >= 0);
            if (prev != 0 && d != 0) CHECK(d % prev == 0);
            if (d != 0) prev = d;
        }
        CHECK(snf_diagonal(m).size() == static_cast<std::size_t>(rank_of(m)));
    }
    CHECK(snf_diagonal(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
          std::vector<Int>{2, 6, 12});
}

TEST_CASE("determinant matches cofactor oracle") {
    std::vector<IntMatrix> cases = {
        from_rows({{3}}),
        from_rows({{1, 2}, {3, 4}}),
        from_rows({{2, 0, 1}, {-1, 3, 2}, {4, 1, -2}}),
        from_rows({{1, 2, 3, 4}, {0, -1, 2, 1}, {5, 0, 0, 2}, {1, 1, 1, 1}}),
        from_rows({{2, 4}, {1, 2}}),
    };
    for (const auto& m : cases) CHECK(mat_det(m) == det_oracle(m));
}

TEST_CASE("kernel_lattice annihilates and has the right rank") {
    std::vector<IntMatrix> cases = {
        from_rows({{1, 1}, {1, 1}, {2, 2}}),
        from_rows({{2, 0}, {0, 3}, {2, 3}, {4, 3}}),
        from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 0, 0}}),
        from_rows({{0, 0, 0}, {0, 0, 0}}),
    };
    for (const auto& m : cases) {
        Lattice k = kernel_lattice(m);
        CHECK(k.rank() == m.rows - rank_of(m));
        for (const auto& row : k.basis()) {
            std::vector<Int> prod(m.cols, 0);
            for (const auto& [i, c] : row)
                for (int j = 0; j < m.cols; ++j) prod[j] += c * m.at(i, j);
            for (const auto& v : prod) CHECK(v == 0);
        }
        // kernels of integer matrices are saturated
        CHECK(saturate(k) == k);
    }
}

TEST_CASE("lattice membership and coordinates") {
    Lattice l = Lattice::from_rows(3, {{{0, 2}, {1, 1}}, {{1, 3}}});
    CHECK(l.rank() == 2);
    CHECK(l.contains({{0, 2}, {1, 1}}));
    CHECK(l.contains({{0, 4}, {1, 5}}));
    CHECK_FALSE(l.contains({{0, 1}}));
    CHECK_FALSE(l.contains({{2, 1}}));
    auto coords = l.coordinates({{0, 4}, {1, 5}});
    REQUIRE(coords.has_value());
    // re-expand
    SparseVec re;
    for (std::size_t i = 0; i < coords->size(); ++i) re = sparse_axpy(re, (*coords)[i], l.basis()[i]);
    CHECK(re == SparseVec{{0, 4}, {1, 5}});
}

TEST_CASE("lattice combine and compare") {
    Lattice z2 = Lattice::from_rows(2, {{{0, 1}}, {{1, 1}}});
    Lattice even = Lattice::from_rows(2, {{{0, 2}}, {{1, 2}}});
    Lattice mixed = Lattice::from_rows(2, {{{0, 2}}, {{1, 3}}});

    LatticeComparison c = lattice_compare(even, z2);
    CHECK(c.a_in_b);
    CHECK_FALSE(c.b_in_a);
    CHECK_FALSE(c.equal);
    REQUIRE(c.index.has_value());
    CHECK(*c.index == 4);
    CHECK(c.saturation_equal);

    CHECK(lattice_compare(mixed, z2).index.value() == 6);
    CHECK(lattice_combine(even, mixed, CombineMode::Sum) ==
          Lattice::from_rows(2, {{{0, 2}}, {{1, 1}}}));
    // intersection: lcm on each axis here
    CHECK(lattice_combine(even, mixed, CombineMode::Intersect) ==
          Lattice::from_rows(2, {{{0, 2}}, {{1, 6}}}));

    Lattice skew = Lattice::from_rows(2, {{{0, 1}, {1, 1}}});
    Lattice axis = Lattice::from_rows(2, {{{0, 1}}});
    Lattice inter = lattice_combine(skew, axis, CombineMode::Intersect);
    CHECK(inter.rank() == 0);
    CHECK_FALSE(lattice_compare(skew, axis).saturation_equal);
}

TEST_CASE("saturate recovers the rational span lattice") {
    Lattice l = Lattice::from_rows(3, {{{0, 2}, {1, 2}}, {{2, 3}}});
    Lattice s = saturate(l);
    CHECK(s.rank() == 2);
    CHECK(s.contains({{0, 1}, {1, 1}}));
    CHECK(s.contains({{2, 1}}));
    CHECK_FALSE(s.contains({{0, 1}}));
    CHECK(lattice_compare(l, s).saturation_equal);
}

TEST_CASE("solve_in_span and SpanSolver provenance") {
    IntMatrix gens = from_rows({{2, 0, 1}, {0, 3, 1}, {2, 3, 2}});  // row2 = row0 + row1
    auto sol = solve_in_span(gens, {4, 3, 3});  // 2*row0 + row1
    REQUIRE(sol.has_value());
    std::vector<Int> re(3, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) re[j] += (*sol)[i] * gens.at(i, j);
    CHECK(re == std::vector<Int>{4, 3, 3});
    CHECK_FALSE(solve_in_span(gens, {1, 0, 0}).has_value());

    SpanSolver solver(2);
    bool ins = false;
    solver.add_generator({{0, 2}}, &ins);
    CHECK(ins);
    solver.add_generator({{0, 4}}, &ins);  // already in the span
    CHECK_FALSE(ins);
    solver.add_generator({{0, 3}}, &ins);  // refines to pivot 1
    CHECK(ins);
    auto s = solver.solve({{0, 7}});
    REQUIRE(s.has_value());
    SparseVec re2;
    std::vector<SparseVec> rows = {{{0, 2}}, {{0, 4}}, {{0, 3}}};
    for (const auto& [i, c] : *s) re2 = sparse_axpy(re2, c, rows[i]);
    CHECK(re2 == SparseVec{{0, 7}});
    CHECK_FALSE(solver.solve({{1, 1}}).has_value());
}

TEST_CASE("HnfBuilder tracks rank and refinement") {
    HnfBuilder b(3);
    CHECK(b.add({{0, 2}, {2, 1}}) == 1);
    CHECK(b.add({{1, 1}}) == 1);
    CHECK(b.add({{0, 4}, {2, 2}}) == 0);
    // gcd refinement in column 0 also creates a new pivot, which dominates
    CHECK(b.add({{0, 3}, {2, 1}}) == 1);
    // the three independent rows span all of Z^3
    CHECK(b.rank() == 3);
    CHECK(b.reduces_to_zero({{0, 1}}));
    Lattice l = Lattice::from_rows(3, b.canonical_rows());
    CHECK(l.contains({{0, 2}, {2, 1}}));
    CHECK(l.contains({{0, 3}, {2, 1}}));
    CHECK(l.contains({{1, 1}}));
}
