#pragma once

#include "braidlab/scalar.hpp"

#include <string>
#include <vector>

namespace braidlab {

// Permutation of {1..n}, stored 0-based: img[i] = tau(i).
class Perm {
public:
    Perm() = default;
    explicit Perm(size_t n) : img_(n) {
        for (size_t i = 0; i < n; ++i) img_[i] = (int)i;
    }
    explicit Perm(std::vector<int> images_zero_based);

    static Perm transposition(size_t n, size_t i);  // s_i swaps i, i+1 (0-based i)

    size_t degree() const { return img_.size(); }
    int operator()(int x) const { return img_[(size_t)x]; }
    const std::vector<int>& images() const { return img_; }

    // (a*b)(x) = a(b(x))
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    size_t inversions() const;
    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
    std::string str() const;  // cycle notation, 1-based

private:
    std::vector<int> img_;
};

// generator index i in [1, n-1], sign e in {+1, -1}
struct BraidLetter {
    int i;
    int e;
    bool operator==(const BraidLetter& o) const { return i == o.i && e == o.e; }
    bool operator<(const BraidLetter& o) const {
        if (i != o.i) return i < o.i;
        return e > o.e;  // positive letters first
    }
};

// Word in the generators of B_n.  No rewriting is ever performed: two words
// are equal only if they are letterwise equal.  Identities in the braid
// group are only ever tested through representations or finite quotients.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(size_t strands) : n_(strands) {}
    BraidWord(size_t strands, std::vector<BraidLetter> letters);

    size_t strands() const { return n_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    BraidWord operator*(const BraidWord& o) const;  // concatenation
    BraidWord inverse() const;                      // reversed, signs flipped
    BraidWord power(long k) const;

    Perm underlying_perm() const;

    bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_; }
    // shortlex on letter sequences
    bool operator<(const BraidWord& o) const;

    std::string str() const;

private:
    size_t n_ = 0;
    std::vector<BraidLetter> letters_;
};

// Finite formal k-linear combination of braid words; the syntactic
// presentation of an element of k[B_n].
class FormalBraidSum {
public:
    FormalBraidSum() = default;
    explicit FormalBraidSum(size_t strands) : n_(strands) {}

    static FormalBraidSum unit(size_t strands) {
        FormalBraidSum s(strands);
        s.add_term(FieldScalar(1), BraidWord(strands));
        return s;
    }
    static FormalBraidSum from_terms(size_t strands,
                                     std::vector<std::pair<FieldScalar, BraidWord>> terms);

    size_t strands() const { return n_; }
    const std::vector<std::pair<FieldScalar, BraidWord>>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const FieldScalar& c, const BraidWord& w);

    FormalBraidSum operator+(const FormalBraidSum& o) const;
    FormalBraidSum scaled(const FieldScalar& c) const;
    FormalBraidSum operator*(const FormalBraidSum& o) const;  // concatenation product

    std::string str() const;

private:
    size_t n_ = 0;
    std::vector<std::pair<FieldScalar, BraidWord>> terms_;  // canonical: shortlex, no zeros
    void normalize();
};

// Matsumoto section S_n -> B_n.  The reduced word is the deterministic one
// obtained by repeatedly extracting the smallest descent, so outputs are
// reproducible letter-for-letter; any reduced word yields the same braid
// group element.
BraidWord matsumoto_lift(const Perm& t);

// All (p,q)-unshuffles (inverses of permutations increasing on the first p
// and last q positions), in the lexicographic order of the shuffles' image
// sets.  Cardinality binomial(p+q, p).
std::vector<Perm> unshuffles(size_t p, size_t q);

std::vector<Perm> all_perms(size_t n);  // lexicographic by image tuple

// S_{p,q} = sum of Matsumoto lifts of (p,q)-unshuffles
FormalBraidSum shuffle_sum(size_t p, size_t q);
// Sbar_{p,q} = sum of formal inverses of those lifts
FormalBraidSum coshuffle_sum(size_t p, size_t q);
// quantum symmetrizer S_n, n! terms
FormalBraidSum symmetrizer_sum(size_t n);
// norm bracket b_{2n} = (1/2n) sum_{i<2n} (-1)^i sigma^i on 2 strands
FormalBraidSum norm_bracket_sum(size_t n_half_period);

// gamma o_i rho: fatten the i-th strand (1-based) of `outer` to width
// inner.strands() and fill the tube with `inner`.  Words act on tensor slots
// with the last letter applied first; the cable word is built so the strand
// occupying position i at the start of the action is the fattened one.
BraidWord cable(const BraidWord& outer, const BraidWord& inner, size_t i);

// Permutation-level cabling; independent oracle for the word-level cable.
Perm cable_perm(const Perm& outer, const Perm& inner, size_t i);

FormalBraidSum cable(const FormalBraidSum& outer, const BraidWord& inner, size_t i);

}  // namespace braidlab
