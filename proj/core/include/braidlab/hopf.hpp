#pragma once

#include "braidlab/ydspace.hpp"

#include <map>
#include <memory>
#include <vector>

namespace braidlab {

// Degree-indexed family of subspaces; `in_quotient` records whether members
// live in tensor-component coordinates or in quotient (A_n) coordinates.
struct GradedSubspaceFamily {
    std::map<unsigned, Subspace> at;
    bool in_quotient = false;
};

// A truncated presentation A = T(V)/I up to weighted degree D: per-degree
// ideal subspaces I_q inside the weight-q component of T(V), forming a
// graded Hopf ideal.  Construction checks (degree-wise, exactly):
//   - ideal closure      (V (x) I_{q-w}) + (I_{q-w} (x) V) <= I_q,
//   - the Hopf condition Delta_{p,q'}(I_q) <= I_p (x) T_q' + T_p (x) I_q',
//   - each I_q is a sub-Yetter-Drinfeld module.
// Quotient components A_q are charted by the non-pivot coordinates of the
// RREF of I_q, so all downstream dimensions are bit-stable.
class GradedHopfQuotient {
public:
    GradedHopfQuotient(std::shared_ptr<const YDSpace> v, unsigned cutoff,
                       std::map<unsigned, Subspace> ideal, size_t tensor_cap = 4096,
                       bool run_checks = true);

    static GradedHopfQuotient free_algebra(std::shared_ptr<const YDSpace> v, unsigned cutoff,
                                           size_t tensor_cap = 4096);
    static GradedHopfQuotient nichols_quotient(std::shared_ptr<const YDSpace> v,
                                               unsigned cutoff, size_t tensor_cap = 4096);

    const YDSpace& generators() const { return *v_; }
    std::shared_ptr<const YDSpace> generators_ptr() const { return v_; }
    unsigned cutoff() const { return d_; }
    size_t tensor_cap() const { return cap_; }

    const TensorComponent& component(unsigned q) const;
    const Subspace& ideal(unsigned q) const;
    size_t dim(unsigned q) const;                 // dim A_q
    std::vector<size_t> hilbert() const;          // dims for q = 0..D

    // quotient chart A_q = T_q / I_q
    Vec quotient_coords(unsigned q, const Vec& tensor_vec) const;
    Vec lift(unsigned q, const Vec& quotient_vec) const;

    // product A_p (x) A_q -> A_{p+q} in quotient coordinates
    Vec multiply(unsigned p, const Vec& a, unsigned q, const Vec& b) const;

    // weight-(p,q) component of the diagonal, T_{p+q} -> T_p (x) T_q
    // (basis index i_p * dim T_q + i_q)
    Matrix diagonal_component(unsigned p, unsigned q) const;

    // P(A)_n, as a subspace of A_n (quotient coordinates); computed on lifts
    // via {x : Delta_{p,q}(x) in I_p (x) T_q + T_p (x) I_q for all p+q=n}/I_n
    const Subspace& primitives(unsigned n) const;

    // (ker eps)^2 in degree n: the span of all products A_a * A_b, a+b=n
    Subspace ker_eps_squared(unsigned n) const;
    Subspace decomposable_primitives(unsigned n) const;
    size_t indecomposables_dim(unsigned n) const;  // dim Q(A)_n

    // generator image: span in A_n of the weight-n length-1 words
    Subspace generator_image(unsigned n) const;

    // re-checks the three type invariants; throws StructureError on failure
    void validate() const;

    // ambient data for sub-YD checks in T_q and in A_q coordinates
    AmbientYD component_ambient(unsigned q) const;
    AmbientYD quotient_ambient(unsigned q) const;

private:
    std::shared_ptr<const YDSpace> v_;
    unsigned d_ = 0;
    size_t cap_ = 4096;
    std::vector<TensorComponent> comp_;
    std::vector<Subspace> ideal_;
    mutable std::map<unsigned, Subspace> prim_cache_;

    void check_ideal_closure() const;
    void check_hopf_condition() const;
    void check_sub_yd() const;
};

// P(T(V))_n: for n = 1 all of V's weight-1 part; for n >= 2 the intersection
// of the kernels of all weight-(p,q) diagonal components on the weight-n
// component of T(V).
Subspace free_primitives(const YDSpace& v, unsigned n, size_t tensor_cap = 4096);

struct NicholsComponent {
    Subspace relations;  // ker of the quantum symmetrizer, blockwise in word length
    size_t dim = 0;      // dim B(V)_n = dim T_n - dim relations
};
NicholsComponent nichols_component(const YDSpace& v, unsigned n, size_t tensor_cap = 4096);

// u * w = Sbar_{p,q} (u (x) w) on plain tensor powers.
Vec quantum_shuffle(const YDSpace& v, size_t p, const Vec& u, size_t q, const Vec& w,
                    size_t tensor_cap = 4096);

// Smallest degree-wise two-sided ideal containing gens (given in tensor
// coordinates per degree), then validated as a Hopf ideal; throws
// StructureError with degree and witness if the Hopf condition fails.
GradedHopfQuotient ideal_generate(std::shared_ptr<const YDSpace> v,
                                  const std::map<unsigned, Subspace>& gens, unsigned cutoff,
                                  size_t tensor_cap = 4096);

// One step of the combinatorial-rank tower: quotient by the ideal generated
// by all decomposable primitives in degrees <= D.
GradedHopfQuotient quotient_step(const GradedHopfQuotient& a);

struct RankReport {
    unsigned rank = 0;            // steps taken until no decomposable primitives remain
    bool reached_fixed_point = false;  // false means `rank` is only a lower bound
    std::vector<std::vector<size_t>> tower_hilbert;  // Hilbert rows per tower stage
};

// Iterates quotient_step from the free algebra on V; every reported rank is
// "up to degree D".
RankReport combinatorial_rank(const YDSpace& v, unsigned cutoff, size_t tensor_cap = 4096,
                              unsigned max_iter = 32);

struct WoronowiczPrimitives {
    GradedSubspaceFamily family;      // P(A)_n + ker(a)_n per degree, quotient coords
    GradedSubspaceFamily kernel_a;    // ker of the tower map A -> B(Q(A)), per degree
    unsigned tower_steps = 0;
    bool tower_converged = false;
};

// P_{W*}(A) degree-wise: primitives plus the kernel of the iterated
// quotient-by-decomposable-primitives map.
WoronowiczPrimitives woronowicz_primitives(const GradedHopfQuotient& a,
                                           unsigned max_iter = 32);

// cached S_{p,q} / symmetrizer sums
const FormalBraidSum& cached_shuffle_sum(size_t p, size_t q);
const FormalBraidSum& cached_symmetrizer(size_t n);

}  // namespace braidlab
