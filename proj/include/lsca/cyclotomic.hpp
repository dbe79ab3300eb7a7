// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A CycScalar is a polynomial in zeta_m with rational coefficients, reduced
// modulo the m-th cyclotomic polynomial Phi_m, so equality is a coefficient
// comparison. Mixed-conductor arithmetic promotes both operands into the
// field of the lcm conductor. Values that turn out to be rational collapse
// to conductor 1, which keeps printing canonical ("z4^2" parses to "-1").

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsca {

using Rat = mpq_class;

// Error type for all input/arithmetic failures; the message carries context.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned euler_phi(unsigned m);

// Coefficients of Phi_m, ascending powers, monic, degree euler_phi(m).
std::vector<long> cyclotomic_polynomial(unsigned m);

unsigned lcm_conductor(unsigned a, unsigned b);

class CycScalar {
  public:
    CycScalar() : CycScalar(Rat(0)) {}
    CycScalar(long n) : CycScalar(Rat(n)) {}
    explicit CycScalar(const Rat& r);

    // zeta_m^power (power may be any integer; it is reduced mod m).
    static CycScalar root_of_unity(unsigned m, long power = 1);

    // Text syntax: terms "c*z<m>^e" joined by +/-, rationals as "p/q".
    // Examples: "3/2", "z4", "-1/3*z12^2 + 1". Round-trips with str().
    static CycScalar parse(std::string_view text);

    unsigned conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return m_ == 1; }
    // Value as a rational; throws if the value is irrational.
    Rat rational_value() const;

    // Embedding into Q(zeta_M); requires conductor() | M.
    CycScalar promoted(unsigned M) const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    CycScalar inverse() const;
    CycScalar pow(long e) const;

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // Number of nonzero coefficients (pivot-selection heuristic for
    // elimination; 0 iff the value is zero).
    std::size_t support() const;

    std::string str() const;

  private:
    CycScalar(unsigned m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
    void normalize();

    unsigned m_;              // conductor
    std::vector<Rat> c_;      // euler_phi(m_) coefficients, ascending powers
};

inline CycScalar operator*(long n, CycScalar a) { return a *= CycScalar(n); }

}  // namespace lsca
