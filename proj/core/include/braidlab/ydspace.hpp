#pragma once

#include "braidlab/braid.hpp"
#include "braidlab/fingroup.hpp"
#include "braidlab/linalg.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidlab {

// Finite-dimensional Yetter-Drinfeld module over a finite group G: a
// G-graded basis with a right G-action compatible with conjugation
// (X_g . h <= X_{g^h}).  Rack type and diagonal type are constructors, not
// separate representations, so braidings restrict mechanically to computed
// subquotients.  Basis vectors may carry internal weights (>= 1) used for
// the graded machinery of iterated associated-graded constructions.
//
// The braiding is sigma(a (x) b) = b (x) (a . deg b), invertible since the
// action is by group elements.  The braid equation on V^{(x)3} is checked at
// construction whenever d^3 fits under the tensor cap.
class YDSpace {
public:
    YDSpace(FinGroupPtr group, std::vector<size_t> degrees, std::vector<Matrix> gen_action,
            std::vector<unsigned> weights = {}, std::vector<std::string> labels = {},
            size_t ybe_cap = 4096);

    // Rack type: basis = conjugation-closed subset c of G, right-conjugation
    // permutation action.  gen_signs optionally twists the action of the
    // k-th group generator by -1 (a constant rack 2-cocycle when the signs
    // extend to a character of G; the action consistency check enforces
    // this).
    static YDSpace rack_space(FinGroupPtr group, const std::vector<size_t>& conj_closed,
                              const std::vector<int>& gen_signs = {},
                              std::vector<std::string> labels = {});

    // Diagonal type: sigma(e_i (x) e_j) = q[i][j] e_j (x) e_i with all q_ij
    // roots of unity; realized over the abelian group generated by the
    // diagonal matrices g_j = diag(q_1j, ..., q_dj).
    static YDSpace diagonal_space(const std::vector<std::vector<FieldScalar>>& q);

    static YDSpace direct_sum(const std::vector<YDSpace>& parts);

    size_t dim() const { return dim_; }
    const FinGroupPtr& group() const { return group_; }
    size_t degree(size_t basis) const { return degree_[basis]; }
    unsigned weight(size_t basis) const { return weights_[basis]; }
    const std::vector<unsigned>& weights() const { return weights_; }
    const std::string& label(size_t basis) const { return labels_[basis]; }
    bool monomial() const { return monomial_; }
    unsigned conductor() const { return conductor_; }
    size_t generator_count() const { return group_->generator_count(); }

    // Right action of an arbitrary group element, as the matrix sending
    // coordinates of v to coordinates of v.g  (column j = coords of e_j.g).
    const Matrix& act(size_t element) const;

    // d^2 x d^2 matrix of the braiding on V (x) V, basis e_a (x) e_b at
    // index a*d+b.
    Matrix braiding_matrix() const;

    struct BraidingOp {
        Matrix matrix;  // invertible by construction (action by group elements)
        bool is_monomial = false;
        std::optional<FieldScalar> scalar_if_onedim;
    };
    BraidingOp braiding() const;

private:
    FinGroupPtr group_;
    size_t dim_ = 0;
    std::vector<size_t> degree_;
    std::vector<unsigned> weights_;
    std::vector<std::string> labels_;
    std::vector<Matrix> gen_action_;
    bool monomial_ = false;
    unsigned conductor_ = 1;
    mutable std::unordered_map<size_t, Matrix> act_cache_;

    void validate(size_t ybe_cap) const;
};

// A word in basis indices of V; the basis monomial e_{w_1} (x) ... (x) e_{w_k}.
using TensorWord = std::vector<uint32_t>;

// An explicit basis of a B_*-stable space of tensor monomials: either the
// full n-th tensor power (all words of length n) or the total-weight-q
// component of T(V) (all words of weighted degree q, mixed lengths).  Braid
// letters act within a fixed length, permuting weights, so both bases are
// closed under the action.
class TensorComponent {
public:
    static TensorComponent power(const YDSpace& v, size_t n, size_t cap = 4096);
    static TensorComponent weight_component(const YDSpace& v, unsigned q, size_t cap = 4096);

    const YDSpace& space() const { return *v_; }
    size_t dim() const { return words_.size(); }
    const TensorWord& word(size_t i) const { return words_[i]; }
    size_t index(const TensorWord& w) const;
    size_t total_degree(size_t i) const { return degrees_[i]; }  // ordered product in G

    // sigma_i^{sign} applied to basis word w, as a sparse vector
    void apply_letter(size_t i, int sign, size_t word_index,
                      std::vector<std::pair<size_t, FieldScalar>>& out) const;
    Vec apply_word(const BraidWord& w, const Vec& v) const;
    Vec apply_sum_vec(const FormalBraidSum& s, const Vec& v) const;
    Matrix word_matrix(const BraidWord& w) const;
    Matrix sum_matrix(const FormalBraidSum& s) const;

private:
    const YDSpace* v_ = nullptr;
    std::vector<TensorWord> words_;
    std::unordered_map<std::string, size_t> index_;
    std::vector<size_t> degrees_;
    void finish();
    Vec apply_letter_vec(size_t i, int sign, const Vec& v) const;
};

// Action matrix of a braid word on V^{(x)n}; a homomorphism on word
// concatenation (the last letter acts first).
Matrix braid_action(const YDSpace& v, size_t n, const BraidWord& w, size_t cap = 4096);
// Coefficient-weighted sum of braid_action over the terms of s.
Matrix apply_sum(const YDSpace& v, size_t n, const FormalBraidSum& s, size_t cap = 4096);

// The finite group generated by the braid generator matrices on V^{(x)n},
// wrapped as a quotient of B_n.  Requires a monomial braiding.
BraidQuotient image_group(const YDSpace& v, size_t n, size_t cap);

// Ambient data for carving sub-Yetter-Drinfeld modules out of coordinate
// spaces (tensor components or their quotients): per-coordinate G-degree
// plus the ambient action of each G generator.
struct AmbientYD {
    FinGroupPtr group;
    std::vector<size_t> coord_degree;
    std::vector<Matrix> gen_action;
};

// Checks that s is G-homogeneous and G-stable inside the ambient space and
// returns the induced YD structure on an adapted basis, all basis vectors
// of the given weight.  Throws StructureError naming a witness otherwise.
// Outputs the adapted basis rows (lifted to ambient coordinates) in
// adapted_rows.
YDSpace sub_yd(const AmbientYD& amb, const Subspace& s, unsigned weight,
               std::vector<Vec>* adapted_rows = nullptr, size_t ybe_cap = 4096);

}  // namespace braidlab
