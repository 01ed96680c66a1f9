#include "brel/exact.hpp"

#include <algorithm>

namespace brel {

SparseVec sparse_axpy(const SparseVec& a, const Int& c, const SparseVec& b) {
    if (c == 0) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Int v = a[i].second + c * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const Int& c, const SparseVec& a) {
    if (c == 0) return {};
    SparseVec out;
    out.reserve(a.size());
    for (const auto& [k, v] : a) out.emplace_back(k, c * v);
    return out;
}

SparseVec sparse_from_dense(const std::vector<Int>& v) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

std::vector<Int> sparse_to_dense(int n, const SparseVec& v) {
    std::vector<Int> out(n);
    for (const auto& [k, val] : v) out[k] = val;
    return out;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

SparseVec IntMatrix::row_sparse(int r) const {
    SparseVec out;
    for (int c = 0; c < cols; ++c)
        if (at(r, c) != 0) out.emplace_back(c, at(r, c));
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix m(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) m.at(i, j) += v * b.at(k, j);
        }
    return m;
}

Int mat_det(const IntMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("determinant of non-square matrix");
    int n = a.rows;
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int old_r = a, r = b;
    Int old_s = 1, ss = 0;
    Int old_t = 0, tt = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * ss;
        old_s = ss;
        ss = tmp;
        tmp = old_t - q * tt;
        old_t = tt;
        tt = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    s = old_s;
    t = old_t;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b < 0) q -= 1;
    return q;
}

HnfResult hnf(const IntMatrix& a) {
    int n = a.rows, m = a.cols;
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(n);
    auto swap_rows = [&](IntMatrix& x, int i, int j) {
        for (int c = 0; c < x.cols; ++c) std::swap(x.at(i, c), x.at(j, c));
    };
    auto row_axpy = [&](IntMatrix& x, int dst, const Int& c, int src) {
        for (int cc = 0; cc < x.cols; ++cc) x.at(dst, cc) += c * x.at(src, cc);
    };
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (h.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            swap_rows(h, r, pivot);
            swap_rows(u, r, pivot);
        }
        for (int i = r + 1; i < n; ++i) {
            while (h.at(i, c) != 0) {
                if (h.at(i, c) % h.at(r, c) == 0) {
                    Int q = h.at(i, c) / h.at(r, c);
                    row_axpy(h, i, -q, r);
                    row_axpy(u, i, -q, r);
                } else {
                    // gcd rotation: bring gcd into the pivot row
                    Int g, s, t;
                    xgcd(h.at(r, c), h.at(i, c), g, s, t);
                    Int ar = h.at(r, c) / g, ai = h.at(i, c) / g;
                    for (int cc = 0; cc < m; ++cc) {
                        Int nr = s * h.at(r, cc) + t * h.at(i, cc);
                        Int ni = -ai * h.at(r, cc) + ar * h.at(i, cc);
                        h.at(r, cc) = nr;
                        h.at(i, cc) = ni;
                    }
                    for (int cc = 0; cc < n; ++cc) {
                        Int nr = s * u.at(r, cc) + t * u.at(i, cc);
                        Int ni = -ai * u.at(r, cc) + ar * u.at(i, cc);
                        u.at(r, cc) = nr;
                        u.at(i, cc) = ni;
                    }
                }
            }
        }
        if (h.at(r, c) < 0) {
            for (int cc = 0; cc < m; ++cc) h.at(r, cc) = -h.at(r, cc);
            for (int cc = 0; cc < n; ++cc) u.at(r, cc) = -u.at(r, cc);
        }
        for (int k = 0; k < r; ++k) {
            Int q = floor_div(h.at(k, c), h.at(r, c));
            if (q != 0) {
                row_axpy(h, k, -q, r);
                row_axpy(u, k, -q, r);
            }
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

namespace {

// Shared SNF elimination. u/v may be null when transforms are not needed.
void snf_inplace(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
    int n = s.rows, m = s.cols;
    auto row_axpy = [&](int dst, const Int& c, int src) {
        for (int cc = 0; cc < m; ++cc) s.at(dst, cc) += c * s.at(src, cc);
        if (u)
            for (int cc = 0; cc < u->cols; ++cc) u->at(dst, cc) += c * u->at(src, cc);
    };
    auto col_axpy = [&](int dst, const Int& c, int src) {
        for (int rr = 0; rr < n; ++rr) s.at(rr, dst) += c * s.at(rr, src);
        if (v)
            for (int rr = 0; rr < v->rows; ++rr) v->at(rr, dst) += c * v->at(rr, src);
    };
    auto swap_r = [&](int i, int j) {
        for (int cc = 0; cc < m; ++cc) std::swap(s.at(i, cc), s.at(j, cc));
        if (u)
            for (int cc = 0; cc < u->cols; ++cc) std::swap(u->at(i, cc), u->at(j, cc));
    };
    auto swap_c = [&](int i, int j) {
        for (int rr = 0; rr < n; ++rr) std::swap(s.at(rr, i), s.at(rr, j));
        if (v)
            for (int rr = 0; rr < v->rows; ++rr) std::swap(v->at(rr, i), v->at(rr, j));
    };
    int t = 0;
    while (t < n && t < m) {
        // locate a nonzero entry of minimal magnitude in the trailing block
        int pr = -1, pc = -1;
        Int best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                const Int& x = s.at(i, j);
                if (x == 0) continue;
                Int ax = x < 0 ? Int(-x) : x;
                if (pr < 0 || ax < best) {
                    pr = i;
                    pc = j;
                    best = ax;
                }
            }
        if (pr < 0) break;
        if (pr != t) swap_r(t, pr);
        if (pc != t) swap_c(t, pc);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < n; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);
                row_axpy(i, -q, t);
                if (s.at(i, t) != 0) {
                    swap_r(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < m; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                col_axpy(j, -q, t);
                if (s.at(t, j) != 0) {
                    swap_c(t, j);
                    dirty = true;
                }
            }
        }
        // divisibility fix: fold a bad entry into the pivot column and retry
        bool redo = false;
        for (int i = t + 1; i < n && !redo; ++i)
            for (int j = t + 1; j < m && !redo; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    row_axpy(t, 1, i);
                    redo = true;
                }
        if (redo) continue;
        if (s.at(t, t) < 0) {
            for (int cc = 0; cc < m; ++cc) s.at(t, cc) = -s.at(t, cc);
            if (u)
                for (int cc = 0; cc < u->cols; ++cc) u->at(t, cc) = -u->at(t, cc);
        }
        ++t;
    }
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
    SnfResult r;
    r.s = a;
    r.u = IntMatrix::identity(a.rows);
    r.v = IntMatrix::identity(a.cols);
    snf_inplace(r.s, &r.u, &r.v);
    return r;
}

std::vector<Int> snf_diagonal(IntMatrix a) {
    snf_inplace(a, nullptr, nullptr);
    std::vector<Int> d;
    for (int i = 0; i < std::min(a.rows, a.cols); ++i)
        if (a.at(i, i) != 0) d.push_back(a.at(i, i));
    return d;
}

int rank_of(const IntMatrix& a) {
    HnfBuilder b(a.cols);
    for (int r = 0; r < a.rows; ++r) b.add(a.row_sparse(r));
    return b.rank();
}

void HnfBuilder::reduce_tail(SparseVec& row) const {
    if (row.empty()) return;
    for (auto it = pivots_.upper_bound(row.front().first); it != pivots_.end(); ++it) {
        auto pos = std::lower_bound(row.begin(), row.end(), it->first,
                                    [](const auto& a, int b) { return a.first < b; });
        if (pos == row.end()) break;
        if (pos->first != it->first) continue;
        Int q = floor_div(pos->second, it->second.front().second);
        if (q != 0) row = sparse_axpy(row, -q, it->second);
    }
}

void HnfBuilder::reduce_column(int c) {
    auto pit = pivots_.find(c);
    const Int& d = pit->second.front().second;
    for (auto it = pivots_.begin(); it != pivots_.end() && it->first < c; ++it) {
        auto pos = std::lower_bound(it->second.begin(), it->second.end(), c,
                                    [](const auto& a, int b) { return a.first < b; });
        if (pos == it->second.end() || pos->first != c) continue;
        Int q = floor_div(pos->second, d);
        if (q != 0) it->second = sparse_axpy(it->second, -q, pit->second);
    }
}

int HnfBuilder::add(SparseVec row) {
    int result = 0;
    while (!row.empty()) {
        int c = row.front().first;
        auto it = pivots_.find(c);
        if (it == pivots_.end()) {
            if (row.front().second < 0) row = sparse_scale(-1, row);
            reduce_tail(row);
            pivots_.emplace(c, std::move(row));
            reduce_column(c);
            return 1;
        }
        const Int& a = it->second.front().second;
        const Int& b = row.front().second;
        if (b % a == 0) {
            row = sparse_axpy(row, -(b / a), it->second);
        } else {
            Int g, s, t;
            xgcd(a, b, g, s, t);
            SparseVec np = sparse_axpy(sparse_scale(s, it->second), t, row);
            SparseVec nr = sparse_axpy(sparse_scale(a / g, row), -(b / g), it->second);
            it->second = std::move(np);
            reduce_tail(it->second);
            reduce_column(c);
            row = std::move(nr);
            result = 2;
        }
    }
    return result;
}

bool HnfBuilder::reduces_to_zero(SparseVec row) const {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) return false;
        const Int& a = it->second.front().second;
        const Int& b = row.front().second;
        if (b % a != 0) return false;
        row = sparse_axpy(row, -(b / a), it->second);
    }
    return true;
}

std::vector<SparseVec> HnfBuilder::canonical_rows() const {
    std::vector<SparseVec> rows;
    rows.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) rows.push_back(r);
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
        int pc = rows[i].front().first;
        const Int& d = rows[i].front().second;
        for (int k = 0; k < i; ++k) {
            auto it = std::lower_bound(rows[k].begin(), rows[k].end(), pc,
                                       [](const auto& a, int b) { return a.first < b; });
            if (it == rows[k].end() || it->first != pc) continue;
            Int q = floor_div(it->second, d);
            if (q != 0) rows[k] = sparse_axpy(rows[k], -q, rows[i]);
        }
    }
    return rows;
}

Lattice Lattice::zero(int ambient_dim) {
    Lattice l;
    l.dim_ = ambient_dim;
    return l;
}

Lattice Lattice::from_rows(int ambient_dim, const std::vector<SparseVec>& rows) {
    HnfBuilder b(ambient_dim);
    // Adding rows with rightmost leading columns first minimizes the
    // back-reduction work inside the builder; the span is order-independent.
    std::vector<const SparseVec*> order;
    order.reserve(rows.size());
    for (const auto& r : rows) {
        if (!r.empty() && r.back().first >= ambient_dim)
            throw DimensionMismatch("row exceeds ambient dimension");
        if (!r.empty()) order.push_back(&r);
    }
    std::stable_sort(order.begin(), order.end(), [](const SparseVec* a, const SparseVec* b) {
        return a->front().first > b->front().first;
    });
    for (const SparseVec* r : order) b.add(*r);
    Lattice l;
    l.dim_ = ambient_dim;
    l.rows_ = b.canonical_rows();
    for (const auto& r : l.rows_) l.pivot_cols_.push_back(r.front().first);
    return l;
}

Lattice Lattice::from_matrix(const IntMatrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(m.rows);
    for (int r = 0; r < m.rows; ++r) rows.push_back(m.row_sparse(r));
    return from_rows(m.cols, rows);
}

IntMatrix Lattice::basis_matrix() const {
    IntMatrix m(rank(), dim_);
    for (int r = 0; r < rank(); ++r)
        for (const auto& [c, v] : rows_[r]) m.at(r, c) = v;
    return m;
}

bool Lattice::contains(SparseVec v) const {
    return coordinates(std::move(v)).has_value();
}

std::optional<std::vector<Int>> Lattice::coordinates(SparseVec v) const {
    std::vector<Int> coeffs(rows_.size());
    while (!v.empty()) {
        int c = v.front().first;
        auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), c);
        if (it == pivot_cols_.end() || *it != c) return std::nullopt;
        size_t idx = static_cast<size_t>(it - pivot_cols_.begin());
        const Int& d = rows_[idx].front().second;
        if (v.front().second % d != 0) return std::nullopt;
        Int q = v.front().second / d;
        v = sparse_axpy(v, -q, rows_[idx]);
        coeffs[idx] = q;
    }
    return coeffs;
}

Int Lattice::pivot_product() const {
    Int p = 1;
    for (const auto& r : rows_) p *= r.front().second;
    return p;
}

Lattice kernel_lattice(const IntMatrix& a) {
    int n = a.rows, m = a.cols;
    std::vector<std::vector<Int>> w(n);
    for (int i = 0; i < n; ++i) {
        w[i].resize(m);
        for (int j = 0; j < m; ++j) w[i][j] = a.at(i, j);
    }
    std::vector<SparseVec> u(n);
    for (int i = 0; i < n; ++i) u[i] = {{i, Int(1)}};
    std::vector<char> active(n, 1);
    for (int c = 0; c < m; ++c) {
        int pivot = -1;
        for (int i = 0; i < n; ++i) {
            if (!active[i] || w[i][c] == 0) continue;
            if (pivot < 0) {
                pivot = i;
                continue;
            }
            while (w[i][c] != 0) {
                const Int& pa = w[pivot][c];
                const Int& pb = w[i][c];
                if (pb % pa == 0) {
                    Int q = pb / pa;
                    for (int j = c; j < m; ++j) w[i][j] -= q * w[pivot][j];
                    u[i] = sparse_axpy(u[i], -q, u[pivot]);
                } else {
                    Int g, s, t;
                    xgcd(pa, pb, g, s, t);
                    Int ar = pa / g, ai = pb / g;
                    for (int j = c; j < m; ++j) {
                        Int np = s * w[pivot][j] + t * w[i][j];
                        Int ni = -ai * w[pivot][j] + ar * w[i][j];
                        w[pivot][j] = std::move(np);
                        w[i][j] = std::move(ni);
                    }
                    SparseVec np = sparse_axpy(sparse_scale(s, u[pivot]), t, u[i]);
                    SparseVec ni = sparse_axpy(sparse_scale(ar, u[i]), -ai, u[pivot]);
                    u[pivot] = std::move(np);
                    u[i] = std::move(ni);
                }
            }
        }
        if (pivot >= 0) active[pivot] = 0;
    }
    std::vector<SparseVec> rows;
    for (int i = 0; i < n; ++i)
        if (active[i]) rows.push_back(std::move(u[i]));
    return Lattice::from_rows(n, rows);
}

Lattice lattice_combine(const Lattice& a, const Lattice& b, CombineMode mode) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("lattice combine across ambient dimensions");
    if (mode == CombineMode::Sum) {
        std::vector<SparseVec> rows = a.basis();
        rows.insert(rows.end(), b.basis().begin(), b.basis().end());
        return Lattice::from_rows(a.ambient_dim(), rows);
    }
    // intersection via the kernel of the stacked bases
    int ra = a.rank(), rb = b.rank();
    IntMatrix stacked(ra + rb, a.ambient_dim());
    for (int i = 0; i < ra; ++i)
        for (const auto& [c, v] : a.basis()[i]) stacked.at(i, c) = v;
    for (int i = 0; i < rb; ++i)
        for (const auto& [c, v] : b.basis()[i]) stacked.at(ra + i, c) = v;
    Lattice ker = kernel_lattice(stacked);
    std::vector<SparseVec> rows;
    for (const auto& krow : ker.basis()) {
        SparseVec v;
        for (const auto& [idx, coef] : krow)
            if (idx < ra) v = sparse_axpy(v, coef, a.basis()[idx]);
        if (!v.empty()) rows.push_back(std::move(v));
    }
    return Lattice::from_rows(a.ambient_dim(), rows);
}

LatticeComparison lattice_compare(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("lattice compare across ambient dimensions");
    LatticeComparison r;
    r.a_in_b = true;
    for (const auto& row : a.basis())
        if (!b.contains(row)) {
            r.a_in_b = false;
            break;
        }
    r.b_in_a = true;
    for (const auto& row : b.basis())
        if (!a.contains(row)) {
            r.b_in_a = false;
            break;
        }
    r.equal = a == b;
    int sumRank = lattice_combine(a, b, CombineMode::Sum).rank();
    r.saturation_equal = a.rank() == b.rank() && sumRank == a.rank();
    if (r.equal) {
        r.index = Int(1);
    } else if (r.a_in_b && a.rank() == b.rank()) {
        r.index = a.pivot_product() / b.pivot_product();
    }
    return r;
}

Lattice saturate(const Lattice& a) {
    if (a.rank() == 0) return Lattice::zero(a.ambient_dim());
    Lattice rightKer = kernel_lattice(a.basis_matrix().transpose());
    if (rightKer.rank() == 0) {
        // full rank: saturation is all of Z^n
        std::vector<SparseVec> rows(a.ambient_dim());
        for (int i = 0; i < a.ambient_dim(); ++i) rows[i] = {{i, Int(1)}};
        return Lattice::from_rows(a.ambient_dim(), rows);
    }
    return kernel_lattice(rightKer.basis_matrix().transpose());
}

std::optional<std::vector<Int>> solve_in_span(const IntMatrix& gens, const std::vector<Int>& target) {
    if (static_cast<int>(target.size()) != gens.cols)
        throw DimensionMismatch("target dimension mismatch");
    SpanSolver solver(gens.cols);
    for (int r = 0; r < gens.rows; ++r) solver.add_generator(gens.row_sparse(r));
    auto c = solver.solve(sparse_from_dense(target));
    if (!c) return std::nullopt;
    return sparse_to_dense(gens.rows, *c);
}

void SpanSolver::reduce_tail(PRow& row) const {
    if (row.v.empty()) return;
    for (auto it = pivots_.upper_bound(row.v.front().first); it != pivots_.end(); ++it) {
        auto pos = std::lower_bound(row.v.begin(), row.v.end(), it->first,
                                    [](const auto& a, int b) { return a.first < b; });
        if (pos == row.v.end()) break;
        if (pos->first != it->first) continue;
        Int q = floor_div(pos->second, it->second.v.front().second);
        if (q != 0) {
            row.v = sparse_axpy(row.v, -q, it->second.v);
            row.prov = sparse_axpy(row.prov, -q, it->second.prov);
        }
    }
}

void SpanSolver::reduce_column(int c) {
    auto pit = pivots_.find(c);
    const Int& d = pit->second.v.front().second;
    for (auto it = pivots_.begin(); it != pivots_.end() && it->first < c; ++it) {
        auto pos = std::lower_bound(it->second.v.begin(), it->second.v.end(), c,
                                    [](const auto& a, int b) { return a.first < b; });
        if (pos == it->second.v.end() || pos->first != c) continue;
        Int q = floor_div(pos->second, d);
        if (q != 0) {
            it->second.v = sparse_axpy(it->second.v, -q, pit->second.v);
            it->second.prov = sparse_axpy(it->second.prov, -q, pit->second.prov);
        }
    }
}

int SpanSolver::add_generator(const SparseVec& row, bool* inserted) {
    int idx = ngens_++;
    if (inserted) *inserted = true;
    // cheap membership pre-test: pure subtraction reduction
    {
        SparseVec r = row;
        bool member = true;
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end() || r.front().second % it->second.v.front().second != 0) {
                member = false;
                break;
            }
            r = sparse_axpy(r, -(r.front().second / it->second.v.front().second), it->second.v);
        }
        if (member) {
            if (inserted) *inserted = false;
            return idx;
        }
    }
    PRow cur{row, {{idx, Int(1)}}};
    while (!cur.v.empty()) {
        int c = cur.v.front().first;
        auto it = pivots_.find(c);
        if (it == pivots_.end()) {
            if (cur.v.front().second < 0) {
                cur.v = sparse_scale(-1, cur.v);
                cur.prov = sparse_scale(-1, cur.prov);
            }
            reduce_tail(cur);
            pivots_.emplace(c, std::move(cur));
            reduce_column(c);
            return idx;
        }
        const Int& a = it->second.v.front().second;
        const Int& b = cur.v.front().second;
        if (b % a == 0) {
            Int q = b / a;
            cur.v = sparse_axpy(cur.v, -q, it->second.v);
            cur.prov = sparse_axpy(cur.prov, -q, it->second.prov);
        } else {
            Int g, s, t;
            xgcd(a, b, g, s, t);
            PRow np{sparse_axpy(sparse_scale(s, it->second.v), t, cur.v),
                    sparse_axpy(sparse_scale(s, it->second.prov), t, cur.prov)};
            PRow nr{sparse_axpy(sparse_scale(a / g, cur.v), -(b / g), it->second.v),
                    sparse_axpy(sparse_scale(a / g, cur.prov), -(b / g), it->second.prov)};
            it->second = std::move(np);
            reduce_tail(it->second);
            reduce_column(c);
            cur = std::move(nr);
        }
    }
    return idx;
}

std::optional<SparseVec> SpanSolver::solve(const SparseVec& target) const {
    SparseVec r = target;
    SparseVec coeffs;
    while (!r.empty()) {
        auto it = pivots_.find(r.front().first);
        if (it == pivots_.end()) return std::nullopt;
        const Int& d = it->second.v.front().second;
        if (r.front().second % d != 0) return std::nullopt;
        Int q = r.front().second / d;
        r = sparse_axpy(r, -q, it->second.v);
        coeffs = sparse_axpy(coeffs, q, it->second.prov);
    }
    return coeffs;
}

}  // namespace brel
