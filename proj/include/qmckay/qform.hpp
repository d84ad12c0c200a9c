#pragma once
#include <map>
#include <string>
#include <vector>

#include "qmckay/linalg.hpp"

namespace qmckay {

// Sparse polynomial in a fixed number of variables over Q(zeta_N).
// Terms map exponent vectors to nonzero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Cyc>& terms() const { return terms_; }

    // Accumulates into an existing term; zero results are dropped.
    void add_term(std::vector<int> exp, const Cyc& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous(int degree) const;

    Cyc evaluate(const Vec& point) const;

    Poly& operator+=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly scaled(const Cyc& c) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& var_names) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Cyc> terms_;
};

// f(m t): each variable x_i of f becomes the linear form sum_j m[i][j] t_j.
// m has f.nvars() rows; the result lives in m.cols variables.
Poly substitute_linear(const Poly& f, const Mat& m);

// Homogeneous quintic in five variables.
struct QuinticForm {
    Poly p;
};

// Validates arity and homogeneity; schema error otherwise.
QuinticForm make_quintic(Poly p);

// F(a x) for a 5x5 matrix a.
QuinticForm substitute(const Mat& a, const QuinticForm& f);

// F restricted to the subspace spanned by the columns of basis (5 x d),
// as a polynomial in d coordinates.
Poly restrict_to(const QuinticForm& f, const Mat& basis);

// Number of distinct projective roots of a nonzero binary quintic (2 vars).
long distinct_projective_roots(const Poly& f);

// Greatest common divisor of two nonzero binary forms, as a binary form.
// Its distinct projective roots are exactly the common roots of f and g.
Poly binary_form_gcd(const Poly& f, const Poly& g);

}  // namespace qmckay
