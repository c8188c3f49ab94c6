#include "braidlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace braidlab {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldScalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const FieldScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const FieldScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix add: shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(FieldScalar(-1)); }

Matrix Matrix::scaled(const FieldScalar& c) const {
    Matrix out = *this;
    for (auto& x : out.data_)
        if (!x.is_zero()) x *= c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix apply: shape mismatch");
    Vec out(rows_, FieldScalar(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const FieldScalar& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
        }
    return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::row(size_t r) const {
    Vec out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

void Matrix::set_row(size_t r, const Vec& v) {
    for (size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

namespace {

// RREF of a dense block; `rational` selects Bareiss-style fraction-free
// updates (two-term cross-multiplication with deferred division), otherwise
// plain Gaussian elimination.  Rows end up canonical either way.
void rref_dense(std::vector<Vec>& rows, bool rational) {
    if (rows.empty()) return;
    const size_t ncols = rows[0].size();
    size_t pr = 0;
    std::vector<size_t> pivots;
    std::vector<FieldScalar> row_prev(rows.size(), FieldScalar(1));

    for (size_t c = 0; c < ncols && pr < rows.size(); ++c) {
        size_t sel = pr;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pr], rows[sel]);
        std::swap(row_prev[pr], row_prev[sel]);
        const Vec& prow = rows[pr];
        for (size_t i = pr + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            if (rational) {
                // row_i <- (p*row_i - row_i[c]*prow) / prev_i
                FieldScalar p = prow[c], f = rows[i][c], d = row_prev[i];
                for (size_t j = c; j < ncols; ++j) {
                    FieldScalar t = p * rows[i][j] - f * prow[j];
                    rows[i][j] = d.is_one() ? t : t / d;
                }
                row_prev[i] = p;
            } else {
                FieldScalar f = rows[i][c] / prow[c];
                for (size_t j = c; j < ncols; ++j)
                    if (!prow[j].is_zero()) rows[i][j] -= f * prow[j];
            }
        }
        pivots.push_back(c);
        ++pr;
    }
    rows.resize(pr);

    // normalize leading entries and eliminate above pivots
    for (size_t k = pr; k-- > 0;) {
        size_t c = pivots[k];
        FieldScalar inv = rows[k][c].inverse();
        if (!inv.is_one())
            for (size_t j = c; j < ncols; ++j)
                if (!rows[k][j].is_zero()) rows[k][j] *= inv;
        for (size_t i = 0; i < k; ++i) {
            FieldScalar f = rows[i][c];
            if (f.is_zero()) continue;
            for (size_t j = c; j < ncols; ++j)
                if (!rows[k][j].is_zero()) rows[i][j] -= f * rows[k][j];
        }
    }
}

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Matrix rref(const Matrix& m) {
    const size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return Matrix(0, nc);

    bool rational = true;
    for (size_t i = 0; i < nr && rational; ++i)
        for (size_t j = 0; j < nc; ++j)
            if (!m.at(i, j).is_rational()) { rational = false; break; }

    // Column-connectivity components: rows with disjoint column supports
    // eliminate independently, and the merged result (sorted by pivot) is
    // exactly the global RREF.
    UnionFind uf(nc);
    std::vector<std::vector<size_t>> support(nr);
    for (size_t i = 0; i < nr; ++i) {
        for (size_t j = 0; j < nc; ++j)
            if (!m.at(i, j).is_zero()) support[i].push_back(j);
        for (size_t k = 1; k < support[i].size(); ++k)
            uf.unite(support[i][0], support[i][k]);
    }

    std::vector<std::vector<size_t>> comp_rows;
    std::vector<long> comp_of_col(nc, -1);
    for (size_t i = 0; i < nr; ++i) {
        if (support[i].empty()) continue;
        size_t root = uf.find(support[i][0]);
        if (comp_of_col[root] < 0) {
            comp_of_col[root] = (long)comp_rows.size();
            comp_rows.emplace_back();
        }
        comp_rows[(size_t)comp_of_col[root]].push_back(i);
    }

    std::vector<std::pair<size_t, Vec>> out_rows;  // (pivot col, row)
    for (const auto& rows_idx : comp_rows) {
        // local column set, in increasing order
        std::vector<size_t> cols;
        for (size_t i : rows_idx)
            cols.insert(cols.end(), support[i].begin(), support[i].end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

        std::vector<Vec> block(rows_idx.size(), Vec(cols.size(), FieldScalar(0)));
        for (size_t bi = 0; bi < rows_idx.size(); ++bi)
            for (size_t bj = 0; bj < cols.size(); ++bj) block[bi][bj] = m.at(rows_idx[bi], cols[bj]);

        rref_dense(block, rational);

        for (const auto& brow : block) {
            Vec full(nc, FieldScalar(0));
            size_t pivot = nc;
            for (size_t bj = 0; bj < cols.size(); ++bj) {
                if (brow[bj].is_zero()) continue;
                if (pivot == nc) pivot = cols[bj];
                full[cols[bj]] = brow[bj];
            }
            if (pivot < nc) out_rows.emplace_back(pivot, std::move(full));
        }
    }

    std::sort(out_rows.begin(), out_rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Matrix out(out_rows.size(), nc);
    for (size_t i = 0; i < out_rows.size(); ++i) out.set_row(i, out_rows[i].second);
    return out;
}

size_t rank(const Matrix& m) { return rref(m).rows(); }

Subspace::Subspace(size_t ambient_dim, const Matrix& span) : ambient_(ambient_dim) {
    if (span.cols() != ambient_dim)
        throw std::invalid_argument("Subspace: basis width != ambient dim");
    basis_ = rref(span);
    recompute_columns();
}

void Subspace::recompute_columns() {
    pivots_.clear();
    free_cols_.clear();
    size_t r = 0;
    for (size_t c = 0; c < ambient_; ++c) {
        if (r < basis_.rows() && !basis_.at(r, c).is_zero()) {
            pivots_.push_back(c);
            ++r;
        } else {
            free_cols_.push_back(c);
        }
    }
}

Subspace Subspace::full(size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::from_vectors(size_t ambient_dim, const std::vector<Vec>& vecs) {
    Matrix m(vecs.size(), ambient_dim);
    for (size_t i = 0; i < vecs.size(); ++i) m.set_row(i, vecs[i]);
    return Subspace(ambient_dim, m);
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dim mismatch");
    Vec out = v;
    for (size_t k = 0; k < basis_.rows(); ++k) {
        FieldScalar c = out[pivots_[k]];
        if (c.is_zero()) continue;
        for (size_t j = pivots_[k]; j < ambient_; ++j)
            if (!basis_.at(k, j).is_zero()) out[j] -= c * basis_.at(k, j);
    }
    return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    for (size_t i = 0; i < o.basis().rows(); ++i)
        if (!contains(o.basis().row(i))) return false;
    return true;
}

Vec Subspace::quotient_coords(const Vec& v) const {
    Vec red = reduce(v);
    Vec out(free_cols_.size());
    for (size_t i = 0; i < free_cols_.size(); ++i) out[i] = red[free_cols_[i]];
    return out;
}

Vec Subspace::quotient_lift(const Vec& coords) const {
    if (coords.size() != free_cols_.size())
        throw std::invalid_argument("quotient_lift: dim mismatch");
    Vec out(ambient_, FieldScalar(0));
    for (size_t i = 0; i < free_cols_.size(); ++i) out[free_cols_[i]] = coords[i];
    return out;
}

namespace {

// kernel from the RREF, without component splitting
Subspace kernel_dense(const Matrix& m) {
    Matrix r = rref(m);
    const size_t nc = m.cols();
    std::vector<size_t> pivots;
    std::vector<bool> is_pivot(nc, false);
    {
        size_t c = 0;
        for (size_t i = 0; i < r.rows(); ++i) {
            while (c < nc && r.at(i, c).is_zero()) ++c;
            if (c == nc) break;
            pivots.push_back(c);
            is_pivot[c] = true;
        }
    }
    std::vector<Vec> basis;
    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Vec v(nc, FieldScalar(0));
        v[f] = FieldScalar(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            if (!r.at(k, f).is_zero()) v[pivots[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(nc, basis);
}

}  // namespace

Subspace kernel_of_columns(size_t nrows, const std::vector<SparseVec>& cols) {
    const size_t nc = cols.size();
    UnionFind uf(nrows);
    for (const auto& col : cols)
        for (size_t k = 1; k < col.size(); ++k) uf.unite(col[0].first, col[k].first);

    std::vector<Vec> out_rows;
    // group columns by row component; zero columns are free kernel directions
    std::map<size_t, std::vector<size_t>> comp_cols;
    for (size_t j = 0; j < nc; ++j) {
        if (cols[j].empty()) {
            out_rows.push_back(unit_vec(nc, j));
            continue;
        }
        comp_cols[uf.find(cols[j][0].first)].push_back(j);
    }
    for (const auto& [root, cjs] : comp_cols) {
        std::vector<size_t> rows_here;
        for (size_t j : cjs)
            for (const auto& [r, c] : cols[j]) rows_here.push_back(r);
        std::sort(rows_here.begin(), rows_here.end());
        rows_here.erase(std::unique(rows_here.begin(), rows_here.end()), rows_here.end());
        std::map<size_t, size_t> row_pos;
        for (size_t k = 0; k < rows_here.size(); ++k) row_pos[rows_here[k]] = k;

        Matrix block(rows_here.size(), cjs.size());
        for (size_t bj = 0; bj < cjs.size(); ++bj)
            for (const auto& [r, c] : cols[cjs[bj]]) block.at(row_pos[r], bj) += c;
        Subspace k = kernel_dense(block);
        for (size_t r = 0; r < k.dim(); ++r) {
            Vec v(nc, FieldScalar(0));
            for (size_t bj = 0; bj < cjs.size(); ++bj) v[cjs[bj]] = k.basis().at(r, bj);
            out_rows.push_back(std::move(v));
        }
    }
    return Subspace::from_vectors(nc, out_rows);
}

Subspace kernel_basis(const Matrix& m) {
    std::vector<SparseVec> cols(m.cols());
    for (size_t j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) cols[j].emplace_back(i, m.at(i, j));
    return kernel_of_columns(m.rows(), cols);
}

Subspace image(const Matrix& m) {
    std::vector<Vec> cols;
    for (size_t j = 0; j < m.cols(); ++j) {
        Vec v(m.rows());
        for (size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
        cols.push_back(std::move(v));
    }
    return Subspace::from_vectors(m.rows(), cols);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    return Subspace(a.ambient_dim(), stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: ambient mismatch");
    // Zassenhaus: rref of [A|A ; B|0]; rows with zero left half carry the
    // intersection in their right half.
    const size_t n = a.ambient_dim();
    Matrix big(a.dim() + b.dim(), 2 * n);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < n; ++j) {
            big.at(i, j) = a.basis().at(i, j);
            big.at(i, n + j) = a.basis().at(i, j);
        }
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < n; ++j) big.at(a.dim() + i, j) = b.basis().at(i, j);
    Matrix r = rref(big);
    std::vector<Vec> inter;
    for (size_t i = 0; i < r.rows(); ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j)
            if (!r.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec v(n);
        for (size_t j = 0; j < n; ++j) v[j] = r.at(i, n + j);
        inter.push_back(std::move(v));
    }
    return Subspace::from_vectors(n, inter);
}

AffineSolution solve_affine(const Matrix& lin, const Vec& rhs) {
    if (lin.rows() != rhs.size())
        throw std::invalid_argument("solve_affine: rhs length != rows");
    AffineSolution sol;
    const size_t nc = lin.cols();
    Matrix aug(lin.rows(), nc + 1);
    for (size_t i = 0; i < lin.rows(); ++i) {
        for (size_t j = 0; j < nc; ++j) aug.at(i, j) = lin.at(i, j);
        aug.at(i, nc) = rhs[i];
    }
    Matrix r = rref(aug);
    sol.particular = zero_vec(nc);
    for (size_t i = 0; i < r.rows(); ++i) {
        size_t c = 0;
        while (c <= nc && r.at(i, c).is_zero()) ++c;
        if (c == nc) {
            sol.consistent = false;
            sol.kernel = Subspace(nc);
            return sol;  // pivot in augmented column: inconsistent
        }
        sol.particular[c] = r.at(i, nc);
    }
    // the "free variables = 0" particular solution; entries at pivot columns
    // come straight from the reduced augmented column
    sol.consistent = true;
    sol.kernel = kernel_basis(lin);
    return sol;
}

Matrix restrict_matrix(const Matrix& op, const Subspace& domain, const Subspace& target) {
    Matrix out(target.dim(), domain.dim());
    for (size_t i = 0; i < domain.dim(); ++i) {
        Vec w = op.apply(domain.basis().row(i));
        // read coefficients off the pivot coordinates of the RREF target basis
        Vec coeff(target.dim());
        for (size_t k = 0; k < target.dim(); ++k) coeff[k] = w[target.pivots()[k]];
        Vec check = w;
        for (size_t k = 0; k < target.dim(); ++k)
            for (size_t j = 0; j < w.size(); ++j)
                if (!target.basis().at(k, j).is_zero())
                    check[j] -= coeff[k] * target.basis().at(k, j);
        if (!is_zero_vec(check))
            throw std::domain_error("restrict_matrix: operator does not map domain into target");
        for (size_t k = 0; k < target.dim(); ++k) out.at(k, i) = coeff[k];
    }
    return out;
}

Vec unit_vec(size_t dim, size_t index) {
    Vec v(dim, FieldScalar(0));
    v[index] = FieldScalar(1);
    return v;
}

Vec zero_vec(size_t dim) { return Vec(dim, FieldScalar(0)); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out = a;
    for (size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) out[i] -= b[i];
    return out;
}

Vec scale(const Vec& v, const FieldScalar& c) {
    Vec out = v;
    for (auto& x : out)
        if (!x.is_zero()) x *= c;
    return out;
}

}  // namespace braidlab
