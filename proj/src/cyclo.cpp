#include "qmckay/cyclo.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace qmckay {

namespace {

// Dense univariate polynomials over Q, ascending coefficients, no trailing
// zeros. Only what the cyclotomic reduction needs.
using Poly1 = std::vector<Rat>;

void trim(Poly1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 poly_mul(const Poly1& a, const Poly1& b) {
    if (a.empty() || b.empty()) return {};
    Poly1 r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// num = q*den + rem with deg rem < deg den. den must be nonzero.
void poly_divmod(Poly1 num, const Poly1& den, Poly1* q, Poly1* rem) {
    if (den.empty()) fail(errc::internal, "polynomial division by zero");
    Poly1 quot(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
    const Rat& lead = den.back();
    while (num.size() >= den.size()) {
        Rat f = num.back() / lead;
        size_t shift = num.size() - den.size();
        quot[shift] = f;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        trim(num);
    }
    trim(quot);
    if (q) *q = std::move(quot);
    if (rem) *rem = std::move(num);
}

}  // namespace

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        r -= r / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) r -= r / n;
    return r;
}

long lcm_conductor(long a, long b) {
    long g = std::gcd(a, b);
    long l = a / g;
    if (l > kMaxConductor / b)
        fail(errc::cap_exceeded, "conductor lcm(" + std::to_string(a) + "," +
                                     std::to_string(b) + ") exceeds cap " +
                                     std::to_string(kMaxConductor));
    return l * b;
}

const std::vector<Rat>& cyclotomic_poly(long n) {
    static std::map<long, Poly1> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    Poly1 p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        Poly1 q, rem;
        poly_divmod(p, cyclotomic_poly(d), &q, &rem);
        if (!rem.empty()) fail(errc::internal, "cyclotomic division left a remainder");
        p = std::move(q);
    }
    if ((long)p.size() != euler_phi(n) + 1)
        fail(errc::internal, "cyclotomic degree mismatch at n=" + std::to_string(n));
    return cache.emplace(n, std::move(p)).first->second;
}

Cyc::Cyc(long conductor, std::vector<Rat> coeffs) : n_(conductor) {
    if (conductor < 1) fail(errc::internal, "conductor must be positive");
    if (conductor > kMaxConductor)
        fail(errc::cap_exceeded, "conductor " + std::to_string(conductor) + " exceeds cap");
    reduce_(std::move(coeffs));
}

void Cyc::reduce_(std::vector<Rat> raw) {
    long deg = euler_phi(n_);
    if ((long)raw.size() > deg) {
        Poly1 rem;
        poly_divmod(std::move(raw), cyclotomic_poly(n_), nullptr, &rem);
        raw = std::move(rem);
    }
    raw.resize(deg, Rat(0));
    c_ = std::move(raw);
}

bool Cyc::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::rational() const {
    if (!is_rational()) fail(errc::internal, "element is not rational: " + str());
    return c_[0];
}

Cyc Cyc::embedded(long m) const {
    if (m == n_) return *this;
    if (m % n_) fail(errc::internal, "embedding requires divisible conductors");
    long step = m / n_;
    std::vector<Rat> raw((c_.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return Cyc(m, std::move(raw));
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    long l = lcm_conductor(n_, o.n_);
    Cyc a = embedded(l), b = o.embedded(l);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return *this = std::move(a);
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
    long l = lcm_conductor(n_, o.n_);
    Cyc a = embedded(l), b = o.embedded(l);
    Poly1 pa(a.c_.begin(), a.c_.end()), pb(b.c_.begin(), b.c_.end());
    trim(pa);
    trim(pb);
    Cyc r(l, poly_mul(pa, pb));
    return *this = std::move(r);
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long l = lcm_conductor(a.n_, b.n_);
    return a.embedded(l).c_ == b.embedded(l).c_;
}

Cyc Cyc::inverse() const {
    if (is_zero()) fail(errc::internal, "inverse of zero");
    if (is_rational()) return Cyc(Rat(1) / c_[0]);
    // Extended Euclid against Phi_N: r0 = Phi, r1 = this, s tracks the
    // cofactor of this, so s0 * this = gcd mod Phi at the end.
    Poly1 r0 = cyclotomic_poly(n_);
    Poly1 r1(c_.begin(), c_.end());
    trim(r1);
    Poly1 s0{}, s1{Rat(1)};
    while (!r1.empty()) {
        Poly1 q, rem;
        poly_divmod(r0, r1, &q, &rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly1 qs = poly_mul(q, s1);
        Poly1 ns = s0;
        ns.resize(std::max(ns.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        trim(ns);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    if (r0.size() != 1) fail(errc::internal, "cyclotomic polynomial split unexpectedly");
    for (Rat& x : s0) x /= r0[0];
    return Cyc(n_, std::move(s0));
}

Cyc Cyc::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Cyc r(1);
    Cyc base = *this;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

std::string Cyc::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1 && i > 0);
        if (!unit) out << a.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

int cmp(const Cyc& a, const Cyc& b) {
    long l = lcm_conductor(a.conductor(), b.conductor());
    Cyc x = a.embedded(l), y = b.embedded(l);
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        int c = ::cmp(x.coeffs()[i], y.coeffs()[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

Cyc root_of_unity(long n, long k) {
    if (n < 1) fail(errc::internal, "root_of_unity needs n >= 1");
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(k, n);
    long nn = n / g, kk = k / g;
    if (nn == 1) return Cyc(1);
    std::vector<Rat> raw(kk + 1, Rat(0));
    raw[kk] = 1;
    return Cyc(nn, std::move(raw));
}

std::optional<RouLog> rou_log(const Cyc& x) {
    if (x.is_zero()) return std::nullopt;
    long l = lcm_conductor(2, x.conductor());
    Cyc y = x.embedded(l);
    Cyc zeta = root_of_unity(l, 1).embedded(l);
    Cyc pw = Cyc(1).embedded(l);
    for (long j = 0; j < l; ++j) {
        if (y == pw) {
            long g = std::gcd(j, l);
            return RouLog{l / g, j / g};
        }
        pw *= zeta;
    }
    return std::nullopt;
}

}  // namespace qmckay
