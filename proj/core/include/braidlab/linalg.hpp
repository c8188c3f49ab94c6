#pragma once

#include "braidlab/scalar.hpp"

#include <optional>
#include <vector>

namespace braidlab {

using Vec = std::vector<FieldScalar>;

// Dense row-major matrix over FieldScalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, FieldScalar(0)) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldScalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const FieldScalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const FieldScalar& c) const;
    Matrix transpose() const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    // Kronecker product: (A kron B)(v tensor w) = Av tensor Bw
    static Matrix kron(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Vec row(size_t r) const;
    void set_row(size_t r, const Vec& v);

private:
    size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

// Reduced row echelon form.  Pivot rule: first nonzero column, topmost
// available row; output is the canonical RREF of the row space (leading 1s,
// zeros above and below pivots, zero rows dropped).  Rational input goes
// through a fraction-free Bareiss-style elimination; cyclotomic entries fall
// back to plain Gaussian elimination.  Internally the matrix is split into
// column-connected components so block-diagonal inputs (the common case for
// graded operators) are eliminated blockwise.
Matrix rref(const Matrix& m);

size_t rank(const Matrix& m);

// A subspace of k^ambient stored as its canonical RREF row basis; equality
// of subspaces is bit-equality of bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {
        recompute_columns();
    }
    // Rows of `span` are spanning vectors; they are put into RREF.
    Subspace(size_t ambient_dim, const Matrix& span);

    static Subspace full(size_t ambient_dim);
    static Subspace from_vectors(size_t ambient_dim, const std::vector<Vec>& vecs);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    // v minus its projection onto the span along pivot coordinates; zero iff
    // v is in the subspace.
    Vec reduce(const Vec& v) const;

    // Coordinates of [v] in the canonical complement (the non-pivot
    // coordinates of reduce(v)); this is the quotient-space chart.
    Vec quotient_coords(const Vec& v) const;
    // Canonical lift: place quotient coordinates at non-pivot positions.
    Vec quotient_lift(const Vec& coords) const;
    size_t quotient_dim() const { return ambient_ - dim(); }
    const std::vector<size_t>& free_columns() const { return free_cols_; }

private:
    size_t ambient_ = 0;
    Matrix basis_;
    std::vector<size_t> pivots_;
    std::vector<size_t> free_cols_;
    void recompute_columns();
};

// Right null space {v : m v = 0} in canonical form.
Subspace kernel_basis(const Matrix& m);
// Column space of m.
Subspace image(const Matrix& m);

// Sparse column: (row index, value) pairs.
using SparseVec = std::vector<std::pair<size_t, FieldScalar>>;

// Kernel of the linear map whose j-th column is cols[j], without ever
// materializing the dense matrix; independent row-column components are
// solved separately.
Subspace kernel_of_columns(size_t nrows, const std::vector<SparseVec>& cols);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct AffineSolution {
    bool consistent = false;
    Vec particular;    // one solution when consistent
    Subspace kernel;   // solution set = particular + kernel
};

// Solve lin * x = rhs; never throws on inconsistency.
AffineSolution solve_affine(const Matrix& lin, const Vec& rhs);

// Matrix of op restricted to `domain` and corestricted to `target`, in the
// bases given by the two subspaces.  Throws if op does not map domain into
// target.
Matrix restrict_matrix(const Matrix& op, const Subspace& domain, const Subspace& target);

Vec unit_vec(size_t dim, size_t index);
Vec zero_vec(size_t dim);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const FieldScalar& c);

}  // namespace braidlab
