#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "brel/errors.hpp"

namespace brel {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer row vector: (index, value) pairs, sorted by index, values
/// nonzero.
using SparseVec = std::vector<std::pair<int, Int>>;

SparseVec sparse_axpy(const SparseVec& a, const Int& c, const SparseVec& b);  // a + c*b
SparseVec sparse_scale(const Int& c, const SparseVec& a);
SparseVec sparse_from_dense(const std::vector<Int>& v);
std::vector<Int> sparse_to_dense(int n, const SparseVec& v);

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    IntMatrix transpose() const;
    SparseVec row_sparse(int r) const;
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Int mat_det(const IntMatrix& a);  // via fraction-free elimination, square only

void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t);
Int floor_div(const Int& a, const Int& b);  // b > 0

struct HnfResult {
    IntMatrix h;  // row HNF, zero rows at the bottom
    IntMatrix u;  // unimodular, u*a = h
};
HnfResult hnf(const IntMatrix& a);

struct SnfResult {
    IntMatrix s;  // diagonal, d_i | d_{i+1}
    IntMatrix u, v;  // unimodular, u*a*v = s
};
SnfResult snf(const IntMatrix& a);
std::vector<Int> snf_diagonal(IntMatrix a);  // nonzero diagonal only, no transforms

int rank_of(const IntMatrix& a);

/// Incremental echelon basis over Z. Pivot rows always span exactly the
/// lattice generated by the rows added so far.
class HnfBuilder {
public:
    explicit HnfBuilder(int dim) : dim_(dim) {}

    /// 0: row was already in the span; 1: rank increased; 2: span refined.
    int add(SparseVec row);
    bool reduces_to_zero(SparseVec row) const;
    int rank() const { return static_cast<int>(pivots_.size()); }
    int dim() const { return dim_; }

    /// Fully normalized HNF rows (positive pivots, entries above reduced
    /// into [0, pivot)), sorted by pivot column.
    std::vector<SparseVec> canonical_rows() const;

private:
    // Both keep stored entries small: every entry sitting on another pivot's
    // column is reduced into [0, pivot). Without this the incremental
    // echelon suffers exponential coefficient growth.
    void reduce_tail(SparseVec& row) const;
    void reduce_column(int c);

    int dim_;
    std::map<int, SparseVec> pivots_;
};

/// A sublattice of Z^n held in canonical row HNF. Equality is data equality.
class Lattice {
public:
    Lattice() = default;

    static Lattice zero(int ambient_dim);
    static Lattice from_rows(int ambient_dim, const std::vector<SparseVec>& rows);
    static Lattice from_matrix(const IntMatrix& m);

    int ambient_dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& basis() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    IntMatrix basis_matrix() const;

    bool contains(SparseVec v) const;
    /// Integer coordinates of v over the basis rows, if v is in the lattice.
    std::optional<std::vector<Int>> coordinates(SparseVec v) const;
    Int pivot_product() const;

    bool operator==(const Lattice& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    int dim_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<int> pivot_cols_;
};

/// Left kernel {x : x*a = 0} as an HNF lattice in Z^rows(a).
Lattice kernel_lattice(const IntMatrix& a);

enum class CombineMode { Sum, Intersect };
Lattice lattice_combine(const Lattice& a, const Lattice& b, CombineMode mode);

struct LatticeComparison {
    bool equal = false;
    bool a_in_b = false;
    bool b_in_a = false;
    std::optional<Int> index;      // [b : a] when a <= b with equal rank
    bool saturation_equal = false;
};
LatticeComparison lattice_compare(const Lattice& a, const Lattice& b);

Lattice saturate(const Lattice& a);

/// Integer coefficients c with c*gens = target, or absent.
std::optional<std::vector<Int>> solve_in_span(const IntMatrix& gens, const std::vector<Int>& target);

/// Echelon span with provenance: solves targets as integer combinations of
/// the original generator rows.
class SpanSolver {
public:
    explicit SpanSolver(int dim) : dim_(dim) {}

    /// Returns the generator's index (insertion order). When `inserted` is
    /// given it reports whether the row entered the internal echelon (rows
    /// recognized as span members are discarded and can never appear in
    /// solve() output).
    int add_generator(const SparseVec& row, bool* inserted = nullptr);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int generator_count() const { return ngens_; }

    /// Coefficients over generator indices, or absent if target is outside
    /// the Z-span.
    std::optional<SparseVec> solve(const SparseVec& target) const;

private:
    struct PRow {
        SparseVec v;
        SparseVec prov;  // coefficients over generator indices
    };
    // Same coefficient hygiene as HnfBuilder, applied to value and
    // provenance rows in lock step.
    void reduce_tail(PRow& row) const;
    void reduce_column(int c);

    int dim_;
    int ngens_ = 0;
    std::map<int, PRow> pivots_;
};

}  // namespace brel
