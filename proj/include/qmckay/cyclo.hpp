#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qmckay/error.hpp"

namespace qmckay {

using Rat = mpq_class;

// Largest conductor reachable through lcm promotion in one session.
inline constexpr long kMaxConductor = 1000000;

long euler_phi(long n);

// lcm of two conductors; errors with errc::cap_exceeded past kMaxConductor.
long lcm_conductor(long a, long b);

// Monic N-th cyclotomic polynomial, ascending coefficients, degree phi(N).
// Memoized across calls.
const std::vector<Rat>& cyclotomic_poly(long n);

// Element of Q(zeta_N) on the power basis 1, z, ..., z^{phi(N)-1}, kept fully
// reduced mod the N-th cyclotomic polynomial. Operands at different
// conductors are promoted to the lcm, so equal field elements always compare
// equal regardless of how they were built.
class Cyc {
public:
    Cyc() : n_(1), c_(1, Rat(0)) {}
    explicit Cyc(long v) : n_(1), c_(1, Rat(v)) {}
    explicit Cyc(const Rat& r) : n_(1), c_(1, r) {}
    Cyc(long conductor, std::vector<Rat> coeffs);  // reduces mod Phi_N

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational() const;  // internal error when the element is irrational

    // Rewrites the element on the basis of Q(zeta_M); requires N | M.
    Cyc embedded(long m) const;

    Cyc inverse() const;  // internal error on zero
    Cyc pow(long k) const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Coefficient grammar: signed sum of rational terms and rational
    // multiples of z^k, e.g. "-1/2 + 3*z^7". Zero prints "0".
    std::string str() const;

private:
    long n_;
    std::vector<Rat> c_;
    void reduce_(std::vector<Rat> raw);
};

// Total order usable for canonical sorting; compares in the common field.
int cmp(const Cyc& a, const Cyc& b);

// e^{2 pi i k / n}, stored at the reduced conductor n / gcd(n, k).
Cyc root_of_unity(long n, long k);

struct RouLog {
    long order;     // n >= 1
    long exponent;  // 0 <= k < n, gcd(k, n) = 1 for n > 1
    Rat alpha() const { return Rat(exponent, order); }
};

// Exact discrete log: x = zeta_order^exponent, or nullopt when x is not a
// root of unity. Every root of unity in Q(zeta_N) is a power of
// zeta_{lcm(2,N)}, so the scan is complete.
std::optional<RouLog> rou_log(const Cyc& x);

}  // namespace qmckay
