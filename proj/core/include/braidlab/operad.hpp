#pragma once

#include "braidlab/fingroup.hpp"
#include "braidlab/ydspace.hpp"

namespace braidlab {

// The braided primitive operad and the Woronowicz ideal at a fixed finite
// quotient Q of B_n: level subspaces of k[Q], Garsia idempotents, and the
// worked counterexample showing the Woronowicz ideal is only a left ideal.

struct OperadLevel {
    size_t n = 0;
    Subspace brprim;  // cap over p+q=n of ker(S_{p,q} . -) in k[Q]
    Subspace woron;   // ker(S_n . -) in k[Q]
};

// cap_{p+q=n, p,q>0} ker(left multiplication by S_{p,q}) in k[Q]
Subspace brprim_level(const BraidQuotient& q);
// ker(left multiplication by S_n) in k[Q]
Subspace woronowicz_level(const BraidQuotient& q);

// Both levels, with the containment brprim <= woron and right-B_n-stability
// of both verified exactly.
OperadLevel operad_level(const BraidQuotient& q);

// The unique antipode-symmetric idempotent e with e k[Q] = I, for a right
// ideal I of k[Q] in characteristic zero.  Algorithm: Maschke-average a
// coordinate projection onto I into a right-module projection, take
// e0 = projection(1), then solve the affine system S(f) = f over the family
// f(t) = e0 + e0 t (1 - e0) of idempotent generators.  Failures of
// existence or uniqueness contradict the characteristic-zero theory and are
// reported loudly, never patched.
GroupAlgebraElement garsia_idempotent(const FinGroupPtr& g, const Subspace& ideal);

struct CounterexampleReport {
    size_t half_period = 0;   // the norm bracket level b_{2n} used
    Vec intermediate;         // (b o_1 mu)(x (x) x (x) y) in V^{(x)3}
    Vec final;                // S_3 applied to it
    bool nonzero = false;
    std::string intermediate_str;
    std::string final_str;
};

// Replays the proof that the Woronowicz ideal is not a right ideal: cables
// the norm bracket with the associative product on the first strand,
// applies it to x (x) x (x) y in the given rack-type space, and hits the
// result with the quantum symmetrizer S_3.  A nonzero outcome is the
// counterexample.
CounterexampleReport verify_not_right_ideal(const YDSpace& v, size_t cap = 4096);

struct SymmetrizationRow {
    size_t n = 0;
    size_t brprim_dim = 0;
    size_t woron_dim = 0;
    bool strict_inclusion = false;
};

// dims of the operad levels over Q = S_n for n = 2..n_max; the braided
// primitive dims land on the free-Lie dimensions (n-1)! by Ree's criterion.
std::vector<SymmetrizationRow> symmetrization_table(size_t n_max);

// image of b_{2n} under k[Z/2n] -> k[Z/2m] for m | n
GroupAlgebraElement push_norm_bracket(size_t n, size_t m);

}  // namespace braidlab
