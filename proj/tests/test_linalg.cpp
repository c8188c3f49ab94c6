#include "braidlab/linalg.hpp"

#include <doctest.h>

using namespace braidlab;

namespace {

// deterministic little generator for small rational matrices
struct Lcg {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + (int)((s >> 33) % (uint64_t)(hi - lo + 1));
    }
};

Matrix random_matrix(Lcg& g, size_t r, size_t c) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = FieldScalar(g.next(-3, 3));
    return m;
}

// Independent oracle for intersections: v in A cap B iff v = A^T a = B^T b,
// solved as one joint kernel problem on (a, b).
Subspace intersect_oracle(const Subspace& a, const Subspace& b) {
    const size_t n = a.ambient_dim();
    Matrix joint(n, a.dim() + b.dim());
    for (size_t j = 0; j < a.dim(); ++j)
        for (size_t i = 0; i < n; ++i) joint.at(i, j) = a.basis().at(j, i);
    for (size_t j = 0; j < b.dim(); ++j)
        for (size_t i = 0; i < n; ++i) joint.at(i, a.dim() + j) = -b.basis().at(j, i);
    Subspace k = kernel_basis(joint);
    std::vector<Vec> vecs;
    for (size_t r = 0; r < k.dim(); ++r) {
        Vec v(n, FieldScalar(0));
        for (size_t j = 0; j < a.dim(); ++j)
            for (size_t i = 0; i < n; ++i) v[i] += k.basis().at(r, j) * a.basis().at(j, i);
        vecs.push_back(std::move(v));
    }
    return Subspace::from_vectors(n, vecs);
}

}  // namespace

TEST_CASE("kernel of the zero and identity maps") {
    CHECK(kernel_basis(Matrix(2, 2)).dim() == 2);
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
}

TEST_CASE("kernel over Q(zeta_2): 1x1 [1+zeta_2] is the zero map") {
    Matrix m(1, 1);
    m.at(0, 0) = FieldScalar(1) + FieldScalar::zeta(2);
    CHECK(m.at(0, 0).is_zero());
    CHECK(kernel_basis(m).dim() == 1);
}

TEST_CASE("rank-nullity on pseudo-random matrices") {
    Lcg g;
    for (int trial = 0; trial < 12; ++trial) {
        size_t r = 1 + (size_t)g.next(0, 5), c = 1 + (size_t)g.next(0, 5);
        Matrix m = random_matrix(g, r, c);
        CHECK(rank(m) + kernel_basis(m).dim() == c);
    }
}

TEST_CASE("RREF canonicality: equal spans give bit-identical bases") {
    // two different spanning sets of the plane x + y + z = 0
    Subspace a = Subspace::from_vectors(
        3, {{FieldScalar(1), FieldScalar(-1), FieldScalar(0)},
            {FieldScalar(0), FieldScalar(1), FieldScalar(-1)}});
    Subspace b = Subspace::from_vectors(
        3, {{FieldScalar(2), FieldScalar(-1), FieldScalar(-1)},
            {FieldScalar(1), FieldScalar(1), FieldScalar(-2)}});
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
}

TEST_CASE("intersection: idempotence and disjoint axes") {
    Subspace a = Subspace::from_vectors(2, {unit_vec(2, 0)});
    Subspace b = Subspace::from_vectors(2, {unit_vec(2, 1)});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, b).dim() == 0);
}

TEST_CASE("intersection: span{e1,e2} cap span{e2,e3} = span{e2}, against the oracle") {
    Subspace a = Subspace::from_vectors(3, {unit_vec(3, 0), unit_vec(3, 1)});
    Subspace b = Subspace::from_vectors(3, {unit_vec(3, 1), unit_vec(3, 2)});
    Subspace expected = intersect_oracle(a, b);
    CHECK(expected.dim() == 1);
    CHECK(expected.contains(unit_vec(3, 1)));
    CHECK(intersect(a, b) == expected);
}

TEST_CASE("intersection dims satisfy inclusion-exclusion on random pairs") {
    Lcg g;
    for (int trial = 0; trial < 10; ++trial) {
        size_t n = 4;
        Subspace a(n, random_matrix(g, (size_t)g.next(1, 3), n));
        Subspace b(n, random_matrix(g, (size_t)g.next(1, 3), n));
        Subspace cap = intersect(a, b);
        Subspace sum = subspace_sum(a, b);
        CHECK(cap.dim() + sum.dim() == a.dim() + b.dim());
        CHECK(cap == intersect_oracle(a, b));
        CHECK(a.contains(cap));
        CHECK(b.contains(cap));
    }
}

TEST_CASE("solve_affine: identity, zero, and an underdetermined row") {
    Vec v{FieldScalar(3), FieldScalar(-5)};
    AffineSolution s1 = solve_affine(Matrix::identity(2), v);
    CHECK(s1.consistent);
    CHECK(s1.particular == v);
    CHECK(s1.kernel.dim() == 0);

    AffineSolution s2 = solve_affine(Matrix(2, 2), zero_vec(2));
    CHECK(s2.consistent);
    CHECK(is_zero_vec(s2.particular));
    CHECK(s2.kernel.dim() == 2);

    Matrix row(1, 2);
    row.at(0, 0) = FieldScalar(1);
    row.at(0, 1) = FieldScalar(1);
    AffineSolution s3 = solve_affine(row, {FieldScalar(1)});
    CHECK(s3.consistent);
    CHECK(row.apply(s3.particular) == Vec{FieldScalar(1)});  // check by substitution
    CHECK(s3.kernel.dim() == 1);
    CHECK(s3.kernel.contains({FieldScalar(1), FieldScalar(-1)}));

    AffineSolution s4 = solve_affine(Matrix(2, 2), {FieldScalar(1), FieldScalar(0)});
    CHECK(!s4.consistent);
}

TEST_CASE("restrict composed with inclusion equals the operator on the subspace") {
    Matrix op(3, 3);
    op.at(0, 1) = FieldScalar(1);
    op.at(1, 0) = FieldScalar(1);
    op.at(2, 2) = FieldScalar(5);
    Subspace sub = Subspace::from_vectors(
        3, {{FieldScalar(1), FieldScalar(1), FieldScalar(0)}, unit_vec(3, 2)});
    Matrix r = restrict_matrix(op, sub, sub);
    for (size_t j = 0; j < sub.dim(); ++j) {
        Vec direct = op.apply(sub.basis().row(j));
        Vec through = zero_vec(3);
        for (size_t k = 0; k < sub.dim(); ++k)
            through = add(through, scale(sub.basis().row(k), r.at(k, j)));
        CHECK(direct == through);
    }
    // an operator that leaves the subspace is rejected
    Matrix bad(3, 3);
    bad.at(1, 0) = FieldScalar(1);
    CHECK_THROWS(restrict_matrix(bad, sub, sub));
}

TEST_CASE("quotient charts: lift then reduce is the identity on coordinates") {
    Lcg g;
    Subspace sub(4, random_matrix(g, 2, 4));
    for (int t = 0; t < 5; ++t) {
        Vec coords;
        for (size_t i = 0; i < sub.quotient_dim(); ++i) coords.push_back(FieldScalar(g.next(-4, 4)));
        Vec lifted = sub.quotient_lift(coords);
        CHECK(sub.quotient_coords(lifted) == coords);
    }
}

TEST_CASE("kernel_of_columns agrees with the dense kernel") {
    Lcg g;
    for (int trial = 0; trial < 8; ++trial) {
        Matrix m = random_matrix(g, 4, 5);
        std::vector<SparseVec> cols(5);
        for (size_t j = 0; j < 5; ++j)
            for (size_t i = 0; i < 4; ++i)
                if (!m.at(i, j).is_zero()) cols[j].emplace_back(i, m.at(i, j));
        CHECK(kernel_of_columns(4, cols) == kernel_basis(m));
    }
}

TEST_CASE("image dimension equals rank") {
    Lcg g;
    Matrix m = random_matrix(g, 4, 6);
    CHECK(image(m).dim() == rank(m));
}
