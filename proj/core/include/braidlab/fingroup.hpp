#pragma once

#include "braidlab/braid.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidlab {

// Invertible monomial matrix: M e_j = diag[j] * e_{perm[j]}.  Permutation
// matrices are the diag == 1 case.  Canonical key is the byte serialization
// of (perm, diag), so hashing needs no solved word problem.
struct MonomialMatrix {
    std::vector<int> perm;
    std::vector<FieldScalar> diag;

    static MonomialMatrix identity(size_t d);
    static MonomialMatrix from_perm(const Perm& p);

    size_t dim() const { return perm.size(); }
    MonomialMatrix operator*(const MonomialMatrix& o) const;
    MonomialMatrix inverse() const;
    bool operator==(const MonomialMatrix& o) const { return perm == o.perm && diag == o.diag; }
    std::string key() const;
    Matrix dense() const;
    bool is_identity() const;
};

// Finite group realized by closure of monomial matrix generators.  Element
// order is BFS discovery order (identity first), which is deterministic for
// a fixed generator list.
class FinGroup {
public:
    // Closes the generator set under multiplication; throws CapExceeded if
    // more than `cap` elements are found.
    static std::shared_ptr<const FinGroup> close_group(const std::vector<MonomialMatrix>& gens,
                                                       size_t cap);

    size_t size() const { return elements_.size(); }
    size_t identity() const { return 0; }
    const MonomialMatrix& element(size_t i) const { return elements_[i]; }
    size_t product(size_t a, size_t b) const;
    size_t inverse(size_t a) const;
    size_t conjugate(size_t x, size_t g) const;  // g^{-1} x g
    std::optional<size_t> index_of(const MonomialMatrix& m) const;
    size_t generator_count() const { return gens_.size(); }
    size_t generator(size_t k) const { return gens_[k]; }

    // Expression of an element as a word in the generators (indices into the
    // generator list), from the BFS spanning tree.
    std::vector<size_t> generator_word(size_t i) const;

private:
    FinGroup() = default;
    std::vector<MonomialMatrix> elements_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<size_t> gens_;                      // element indices of generators
    std::vector<std::pair<long, size_t>> parent_;   // (parent element, generator) per element
    mutable std::vector<size_t> inverse_cache_;
};

using FinGroupPtr = std::shared_ptr<const FinGroup>;

// Convenience: symmetric group S_n as permutation matrices on n points,
// generated by adjacent transpositions.
FinGroupPtr symmetric_group(size_t n);
// Cyclic group Z/m as the m-cycle.
FinGroupPtr cyclic_group(size_t m);

// A finite quotient B_n ->> Q, presented by the images of sigma_1..sigma_{n-1}.
// Braid relations are checked exactly at construction.
class BraidQuotient {
public:
    BraidQuotient(size_t strands, const std::vector<MonomialMatrix>& gen_images, size_t cap);

    size_t strands() const { return n_; }
    const FinGroupPtr& group() const { return group_; }
    size_t gen_image(size_t i) const { return gen_images_[i - 1]; }  // i in [1, n-1]

    size_t eval(const BraidWord& w) const;

private:
    size_t n_ = 0;
    FinGroupPtr group_;
    std::vector<size_t> gen_images_;
};

// The quotient B_n ->> S_n (sigma_i -> (i, i+1)).
BraidQuotient symmetric_quotient(size_t n);
// B_2 ->> Z/m, sigma -> generator.
BraidQuotient cyclic_quotient_b2(size_t m);

// Sparse element of k[Q]; no zero coefficients are stored.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(FinGroupPtr g) : group_(std::move(g)) {}

    static GroupAlgebraElement delta(FinGroupPtr g, size_t elt, FieldScalar c = FieldScalar(1));
    static GroupAlgebraElement from_vec(FinGroupPtr g, const Vec& v);

    const FinGroupPtr& group() const { return group_; }
    const std::map<size_t, FieldScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    FieldScalar coeff(size_t elt) const;
    void set_coeff(size_t elt, const FieldScalar& c);

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
    GroupAlgebraElement scaled(const FieldScalar& c) const;
    bool operator==(const GroupAlgebraElement& o) const;

    Vec to_vec() const;  // coordinates in the canonical element basis
    std::string str() const;

private:
    FinGroupPtr group_;
    std::map<size_t, FieldScalar> coeffs_;
};

// Push a formal sum through the quotient map k[B_n] -> k[Q].
GroupAlgebraElement eval_sum(const FormalBraidSum& s, const BraidQuotient& q);

// Antipode S(g) = g^{-1}, extended linearly; an anti-automorphism of k[Q].
GroupAlgebraElement antipode(const GroupAlgebraElement& x);

// |Q| x |Q| matrix of y -> x*y in the canonical element basis.
Matrix left_mult_matrix(const GroupAlgebraElement& x);

// span{x*g : g in Q} as a subspace of k[Q]
Subspace right_ideal(const GroupAlgebraElement& x);
// right-module closure of a subspace of k[Q]
Subspace right_ideal(const FinGroupPtr& g, const Subspace& seed);

// Functoriality along a factorization of quotients: carries an element of
// k[Qs] to k[Qt] by re-evaluating generator words.  Only meaningful when
// ker(B_n -> Qs) <= ker(B_n -> Qt).
GroupAlgebraElement push_forward(const GroupAlgebraElement& x, const BraidQuotient& source,
                                 const BraidQuotient& target);
Subspace push_forward(const Subspace& s, const BraidQuotient& source,
                      const BraidQuotient& target);

// --- Hurwitz action -------------------------------------------------------

// sigma_i: (..., g_i, g_{i+1}, ...) -> (..., g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}, ...)
// applied letter by letter, first letter first (a right action on tuples).
std::vector<size_t> hurwitz_act(const BraidWord& w, std::vector<size_t> tuple,
                                const FinGroup& q);

struct HurwitzReport {
    size_t orbit_size = 0;
    bool product_invariant = true;
    bool stabilizer_found = false;  // some freely reduced nonempty word of
                                    // length <= word_bound fixes the seed
    size_t word_bound = 0;
    BraidWord stabilizer_word;
};

// BFS closure of the seed tuple under the 2(n-1) generator moves.  Requires
// |Q|^n <= cap.  The freeness probe only ever refutes freeness up to the
// word-length bound; it never asserts it.
HurwitzReport hurwitz_orbit(size_t n, const FinGroupPtr& q, const std::vector<size_t>& seed,
                            size_t cap, size_t word_bound = 6);

}  // namespace braidlab
