#include "braidlab/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace braidlab {

unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned lcm_u(unsigned a, unsigned b) {
    return a / std::gcd(a, b) * b;
}

namespace {

// Exact division of integer polynomials; the remainder must vanish.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> rem,
                                      const std::vector<mpz_class>& den) {
    const size_t dn = den.size() - 1;
    if (rem.size() <= dn) throw std::logic_error("poly_div_exact: degree underflow");
    std::vector<mpz_class> quot(rem.size() - dn, mpz_class(0));
    for (size_t i = rem.size(); i-- > dn;) {
        mpz_class c = rem[i] / den[dn];
        quot[i - dn] = c;
        for (size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m) {
    static std::map<unsigned, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, filled smallest divisor first
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<mpz_class> num(d + 1, mpz_class(0));
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) num = poly_div_exact(std::move(num), cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

FieldScalar::FieldScalar(long num, long den) : rat_(num, den) {
    if (den == 0) throw std::invalid_argument("FieldScalar: zero denominator");
    rat_.canonicalize();
}

void FieldScalar::normalize() {
    if (m_ == 1) return;
    bool tail_zero = true;
    for (size_t i = 1; i < cy_.size(); ++i)
        if (cy_[i] != 0) { tail_zero = false; break; }
    if (tail_zero) {
        rat_ = cy_.empty() ? mpq_class(0) : cy_[0];
        m_ = 1;
        cy_.clear();
    }
}

FieldScalar FieldScalar::make_cyclo(unsigned m, std::vector<mpq_class> coeffs) {
    // reduce mod Phi_m into the power basis of degree phi(m)
    const auto& phi = cyclotomic_polynomial(m);
    const size_t deg = phi.size() - 1;  // == euler_phi(m)
    for (size_t i = coeffs.size(); i-- > deg;) {
        mpq_class c = coeffs[i];
        if (c == 0) continue;
        coeffs[i] = 0;
        for (size_t j = 0; j < deg; ++j) {
            mpq_class t = c * phi[j];
            coeffs[i - deg + j] -= t;
        }
    }
    coeffs.resize(deg, mpq_class(0));
    for (auto& c : coeffs) c.canonicalize();
    FieldScalar out;
    out.m_ = m;
    out.cy_ = std::move(coeffs);
    out.normalize();
    return out;
}

FieldScalar FieldScalar::zeta(unsigned m, long k) {
    if (m == 0) throw std::invalid_argument("zeta: conductor must be positive");
    long r = k % (long)m;
    if (r < 0) r += m;
    if (m == 1) return FieldScalar(1);
    std::vector<mpq_class> coeffs((size_t)r + 1, mpq_class(0));
    coeffs[(size_t)r] = 1;
    return make_cyclo(m, std::move(coeffs));
}

FieldScalar embed(const FieldScalar& a, unsigned M) {
    if (a.m_ == M || a.m_ == 1) {
        if (a.m_ == 1 && M > 1) {
            FieldScalar out;
            out.m_ = M;
            out.cy_.assign(euler_phi(M), mpq_class(0));
            out.cy_[0] = a.rat_;
            out.normalize();
            return out;
        }
        return a;
    }
    if (M % a.m_ != 0) throw std::logic_error("embed: conductor mismatch");
    // zeta_m -> zeta_M^{M/m}: substitute into the power-basis expansion
    const unsigned step = M / a.m_;
    std::vector<mpq_class> coeffs((size_t)(a.cy_.size() - 1) * step + 1, mpq_class(0));
    for (size_t i = 0; i < a.cy_.size(); ++i) coeffs[i * step] = a.cy_[i];
    return FieldScalar::make_cyclo(M, std::move(coeffs));
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    if (m_ == 1 && o.m_ == 1) return FieldScalar(mpq_class(rat_ + o.rat_));
    unsigned M = lcm_u(m_, o.m_);
    FieldScalar a = embed(*this, M), b = embed(o, M);
    if (a.m_ == 1) std::swap(a, b);
    if (b.m_ == 1) {
        a.cy_[0] += b.rat_;
        a.normalize();
        return a;
    }
    for (size_t i = 0; i < a.cy_.size(); ++i) a.cy_[i] += b.cy_[i];
    a.normalize();
    return a;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar out = *this;
    if (out.m_ == 1) {
        out.rat_ = -out.rat_;
    } else {
        for (auto& c : out.cy_) c = -c;
    }
    return out;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    if (m_ == 1 && o.m_ == 1) return FieldScalar(mpq_class(rat_ * o.rat_));
    if (is_zero() || o.is_zero()) return FieldScalar(0);
    unsigned M = lcm_u(m_, o.m_);
    FieldScalar a = embed(*this, M), b = embed(o, M);
    if (a.m_ == 1 || b.m_ == 1) {
        if (a.m_ == 1) std::swap(a, b);
        for (auto& c : a.cy_) c *= b.rat_;
        a.normalize();
        return a;
    }
    std::vector<mpq_class> prod(a.cy_.size() + b.cy_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.cy_.size(); ++i) {
        if (a.cy_[i] == 0) continue;
        for (size_t j = 0; j < b.cy_.size(); ++j) {
            if (b.cy_[j] == 0) continue;
            prod[i + j] += a.cy_[i] * b.cy_[j];
        }
    }
    return make_cyclo(M, std::move(prod));
}

namespace {

// extended gcd in Q[x]: returns (g, u) with u*f == g mod phi, g constant
// (phi is irreducible over Q, so any nonzero f is invertible)
void poly_mod_inverse(const std::vector<mpq_class>& f,
                      const std::vector<mpz_class>& phi,
                      std::vector<mpq_class>& inv_out) {
    auto deg = [](const std::vector<mpq_class>& p) -> long {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return (long)i;
        return -1;
    };
    std::vector<mpq_class> r0(phi.size()), r1 = f;
    for (size_t i = 0; i < phi.size(); ++i) r0[i] = phi[i];
    std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<mpq_class> q(r0.size(), mpq_class(0));
        std::vector<mpq_class> rem = r0;
        long dr = deg(rem), d1 = deg(r1);
        while (dr >= d1 && dr >= 0) {
            mpq_class c = rem[(size_t)dr] / r1[(size_t)d1];
            q[(size_t)(dr - d1)] = c;
            for (long j = 0; j <= d1; ++j)
                rem[(size_t)(dr - d1 + j)] -= c * r1[(size_t)j];
            dr = deg(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        std::vector<mpq_class> s2(s0.size() + q.size(), mpq_class(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                if (i + j >= s2.size()) s2.resize(i + j + 1, mpq_class(0));
                s2[i + j] -= q[i] * s1[j];
            }
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    long d = deg(r1);
    if (d != 0) throw std::domain_error("FieldScalar: division by zero");
    mpq_class lead = r1[0];
    inv_out.assign(s1.size(), mpq_class(0));
    for (size_t i = 0; i < s1.size(); ++i) {
        inv_out[i] = s1[i] / lead;
        inv_out[i].canonicalize();
    }
}

}  // namespace

FieldScalar FieldScalar::inverse() const {
    if (m_ == 1) {
        if (rat_ == 0) throw std::domain_error("FieldScalar: division by zero");
        return FieldScalar(mpq_class(1 / rat_));
    }
    std::vector<mpq_class> inv;
    poly_mod_inverse(cy_, cyclotomic_polynomial(m_), inv);
    return make_cyclo(m_, std::move(inv));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
    if (m_ == 1 && o.m_ == 1) {
        if (o.rat_ == 0) throw std::domain_error("FieldScalar: division by zero");
        return FieldScalar(mpq_class(rat_ / o.rat_));
    }
    return *this * o.inverse();
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (m_ == 1 && o.m_ == 1) return rat_ == o.rat_;
    unsigned M = lcm_u(m_, o.m_);
    FieldScalar a = embed(*this, M), b = embed(o, M);
    if (a.m_ != b.m_) return false;  // one demoted to rational, other not
    if (a.m_ == 1) return a.rat_ == b.rat_;
    return a.cy_ == b.cy_;
}

std::vector<mpq_class> FieldScalar::coords(unsigned m) const {
    FieldScalar e = embed(*this, m);
    if (e.m_ == 1) {
        std::vector<mpq_class> out(m == 1 ? 1 : euler_phi(m), mpq_class(0));
        out[0] = e.rat_;
        return out;
    }
    return e.cy_;
}

std::string FieldScalar::key() const {
    std::ostringstream os;
    if (m_ == 1) {
        os << "r" << rat_;
    } else {
        os << "c" << m_ << ":";
        for (const auto& c : cy_) os << c << ",";
    }
    return os.str();
}

std::string FieldScalar::str() const {
    if (m_ == 1) {
        std::ostringstream os;
        os << rat_;
        return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < cy_.size(); ++i) {
        if (cy_[i] == 0) continue;
        mpq_class c = cy_[i];
        if (!first) {
            os << (c > 0 ? "+" : "-");
            c = abs(c);
        } else if (c < 0 && i > 0) {
            os << "-";
            c = abs(c);
        }
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "zeta(" << m_ << ")";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& s) { return os << s.str(); }

FieldScalar FieldScalar::from_string(const std::string& text) {
    // forms: "3", "-1/2", "zeta(4)", "zeta(6)^5", "2/3*zeta(8)^3"
    std::string t;
    for (char c : text)
        if (!isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("empty scalar");
    size_t zp = t.find("zeta(");
    if (zp == std::string::npos) {
        mpq_class q(t);
        q.canonicalize();
        return FieldScalar(q);
    }
    mpq_class coeff(1);
    if (zp > 0) {
        std::string pre = t.substr(0, zp);
        if (!pre.empty() && pre.back() == '*') pre.pop_back();
        if (pre == "-") {
            coeff = -1;
        } else if (!pre.empty()) {
            coeff = mpq_class(pre);
            coeff.canonicalize();
        }
    }
    size_t close = t.find(')', zp);
    if (close == std::string::npos) throw std::invalid_argument("bad zeta syntax: " + text);
    unsigned m = (unsigned)std::stoul(t.substr(zp + 5, close - zp - 5));
    long k = 1;
    if (close + 1 < t.size()) {
        if (t[close + 1] != '^') throw std::invalid_argument("bad zeta syntax: " + text);
        k = std::stol(t.substr(close + 2));
    }
    return FieldScalar(coeff) * zeta(m, k);
}

FieldScalar q_int(long n, const FieldScalar& q) {
    FieldScalar acc(0), pow(1);
    for (long i = 0; i < n; ++i) {
        acc += pow;
        pow = pow * q;
    }
    return acc;
}

FieldScalar q_factorial(long n, const FieldScalar& q) {
    FieldScalar acc(1);
    for (long i = 1; i <= n; ++i) acc = acc * q_int(i, q);
    return acc;
}

FieldScalar q_binomial(long n, long k, const FieldScalar& q) {
    // recurrence [n k] = [n-1 k-1] + q^k [n-1 k], valid at roots of unity
    if (k < 0 || k > n) return FieldScalar(0);
    std::vector<FieldScalar> row(1, FieldScalar(1));
    for (long i = 1; i <= n; ++i) {
        std::vector<FieldScalar> next((size_t)i + 1, FieldScalar(0));
        for (long j = 0; j <= i; ++j) {
            if (j > 0) next[(size_t)j] += row[(size_t)j - 1];
            if (j < i) {
                FieldScalar qk(1);
                for (long t = 0; t < j; ++t) qk = qk * q;
                next[(size_t)j] += qk * row[(size_t)j];
            }
        }
        row = std::move(next);
    }
    return row[(size_t)k];
}

}  // namespace braidlab
