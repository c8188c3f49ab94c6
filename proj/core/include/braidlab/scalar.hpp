#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace braidlab {

// Exact element of Q or of a cyclotomic field Q(zeta_m), m >= 2.
//
// Rationals are mpq_class (always canonical: lowest terms, positive
// denominator).  A cyclotomic value is a residue in Q[x]/Phi_m(x) stored in
// the power basis 1, z, ..., z^{phi(m)-1} with z = zeta_m = exp(2*pi*i/m).
// Values that reduce to a rational (zero tail) are demoted, so equality is
// structural.  Mixed conductors are handled by embedding into Q(zeta_lcm).
class FieldScalar {
public:
    FieldScalar() : rat_(0) {}
    FieldScalar(long n) : rat_(n) {}
    FieldScalar(long num, long den);
    explicit FieldScalar(const mpq_class& q) : rat_(q) { rat_.canonicalize(); }

    // zeta_m^k
    static FieldScalar zeta(unsigned m, long k = 1);
    static FieldScalar from_string(const std::string& text);

    bool is_rational() const { return m_ == 1; }
    bool is_zero() const { return m_ == 1 && rat_ == 0; }
    bool is_one() const { return m_ == 1 && rat_ == 1; }
    unsigned conductor() const { return m_; }

    // Only meaningful when is_rational().
    const mpq_class& rational() const { return rat_; }

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator-() const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator/(const FieldScalar& o) const;
    FieldScalar inverse() const;

    FieldScalar& operator+=(const FieldScalar& o) { *this = *this + o; return *this; }
    FieldScalar& operator-=(const FieldScalar& o) { *this = *this - o; return *this; }
    FieldScalar& operator*=(const FieldScalar& o) { *this = *this * o; return *this; }

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    // Total order used for canonical term ordering; compares the canonical
    // serialization, not any numeric embedding.
    bool operator<(const FieldScalar& o) const { return key() < o.key(); }

    // Canonical byte serialization; equal values have equal keys.
    std::string key() const;
    std::string str() const;  // human form, e.g. "-1/2" or "1+z4^1" style

    // Power-basis coordinates over the stated conductor (index 0 = rational
    // part).  Handles embedding if m differs from the stored conductor.
    std::vector<mpq_class> coords(unsigned m) const;

private:
    mpq_class rat_;              // value when m_ == 1
    unsigned m_ = 1;             // conductor; 1 means rational
    std::vector<mpq_class> cy_;  // size phi(m_) when m_ > 1

    void normalize();
    static FieldScalar make_cyclo(unsigned m, std::vector<mpq_class> coeffs);
    friend FieldScalar embed(const FieldScalar&, unsigned);
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& s);

unsigned euler_phi(unsigned m);
unsigned lcm_u(unsigned a, unsigned b);

// Monic cyclotomic polynomial Phi_m as integer coefficients (degree phi(m)).
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m);

// q-integer [n]_q, q-factorial [n]_q!, q-binomial; exact, used as an
// independent oracle for symmetrizer ranks on one-dimensional spaces.
FieldScalar q_int(long n, const FieldScalar& q);
FieldScalar q_factorial(long n, const FieldScalar& q);
FieldScalar q_binomial(long n, long k, const FieldScalar& q);

}  // namespace braidlab
