#include "qmckay/qform.hpp"

#include <algorithm>
#include <sstream>

namespace qmckay {

void Poly::add_term(std::vector<int> exp, const Cyc& c) {
    if ((int)exp.size() != nvars_) fail(errc::internal, "term arity mismatch");
    for (int e : exp)
        if (e < 0) fail(errc::internal, "negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exp), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_homogeneous(int degree) const {
    for (const auto& [exp, c] : terms_) {
        int d = 0;
        for (int e : exp) d += e;
        if (d != degree) return false;
    }
    return true;
}

Cyc Poly::evaluate(const Vec& point) const {
    if ((int)point.size() != nvars_) fail(errc::internal, "evaluation arity mismatch");
    Cyc r(0);
    for (const auto& [exp, c] : terms_) {
        Cyc t = c;
        for (int i = 0; i < nvars_; ++i)
            if (exp[i]) t *= point[i].pow(exp[i]);
        r += t;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) fail(errc::internal, "sum arity mismatch");
    for (const auto& [exp, c] : o.terms_) add_term(exp, c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (nvars_ != o.nvars_) fail(errc::internal, "product arity mismatch");
    Poly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return *this = std::move(r);
}

Poly Poly::scaled(const Cyc& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [exp, coef] : terms_) r.add_term(exp, coef * c);
    return r;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (!exp[i]) continue;
            out << "*" << var_names[i];
            if (exp[i] > 1) out << "^" << exp[i];
        }
    }
    return out.str();
}

Poly substitute_linear(const Poly& f, const Mat& m) {
    if (m.rows != f.nvars()) fail(errc::internal, "substitution shape mismatch");
    int nv = m.cols;
    // Highest power of each variable that actually occurs.
    std::vector<int> max_exp(f.nvars(), 0);
    for (const auto& [exp, c] : f.terms())
        for (int i = 0; i < f.nvars(); ++i) max_exp[i] = std::max(max_exp[i], exp[i]);

    // powers[i][k] = (row-i linear form)^k.
    std::vector<std::vector<Poly>> powers(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        Poly one(nv);
        one.add_term(std::vector<int>(nv, 0), Cyc(1));
        Poly lin(nv);
        for (int j = 0; j < nv; ++j) {
            std::vector<int> e(nv, 0);
            e[j] = 1;
            lin.add_term(std::move(e), m.at(i, j));
        }
        powers[i].push_back(std::move(one));
        for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i][k - 1] * lin);
    }

    Poly r(nv);
    for (const auto& [exp, c] : f.terms()) {
        Poly t(nv);
        t.add_term(std::vector<int>(nv, 0), c);
        for (int i = 0; i < f.nvars(); ++i)
            if (exp[i]) t *= powers[i][exp[i]];
        r += t;
    }
    return r;
}

QuinticForm make_quintic(Poly p) {
    if (p.nvars() != 5) fail(errc::schema, "quintic form must have 5 variables");
    if (p.is_zero()) fail(errc::schema, "quintic form is zero");
    if (!p.is_homogeneous(5)) fail(errc::schema, "form is not homogeneous of degree 5");
    return QuinticForm{std::move(p)};
}

QuinticForm substitute(const Mat& a, const QuinticForm& f) {
    if (a.rows != 5 || a.cols != 5) fail(errc::internal, "group substitution needs 5x5");
    return QuinticForm{substitute_linear(f.p, a)};
}

Poly restrict_to(const QuinticForm& f, const Mat& basis) {
    if (basis.rows != 5) fail(errc::internal, "restriction basis must have 5 rows");
    return substitute_linear(f.p, basis);
}

namespace {

// Dense univariate polynomials over Q(zeta), ascending coefficients.
using UPoly = std::vector<Cyc>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return (int)p.size() - 1; }  // -1 for zero

UPoly urem(UPoly num, const UPoly& den) {
    Cyc lead_inv = den.back().inverse();
    while (num.size() >= den.size()) {
        Cyc f = num.back() * lead_inv;
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        utrim(num);
    }
    return num;
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Cyc((long)i));
    utrim(d);
    return d;
}

}  // namespace

namespace {

// f = s^a t^b * (affine part in u = s/t), with the affine part divisible by
// neither variable.
struct SplitForm {
    int a = 0, b = 0;
    UPoly affine;
};

SplitForm split_binary(const Poly& f) {
    if (f.nvars() != 2) fail(errc::internal, "binary form expected");
    if (f.is_zero()) fail(errc::internal, "binary form is zero");
    int a = 1 << 30, b = 1 << 30, deg = 0;
    for (const auto& [exp, c] : f.terms()) {
        a = std::min(a, exp[0]);
        b = std::min(b, exp[1]);
        deg = std::max(deg, exp[0] + exp[1]);
    }
    if (!f.is_homogeneous(deg)) fail(errc::internal, "binary form is not homogeneous");
    SplitForm s;
    s.a = a;
    s.b = b;
    s.affine.assign(deg - a - b + 1, Cyc(0));
    for (const auto& [exp, c] : f.terms()) s.affine[exp[0] - a] = c;
    utrim(s.affine);
    return s;
}

}  // namespace

long distinct_projective_roots(const Poly& f) {
    // Roots are (0:1) when s divides, (1:0) when t divides, and the distinct
    // affine roots of the remaining part, counted by the squarefree degree.
    SplitForm s = split_binary(f);
    long count = (s.a > 0) + (s.b > 0);
    if (udeg(s.affine) == 0) return count;
    UPoly g = ugcd(s.affine, uderiv(s.affine));
    return count + (udeg(s.affine) - udeg(g));
}

Poly binary_form_gcd(const Poly& f, const Poly& g) {
    SplitForm sf = split_binary(f), sg = split_binary(g);
    UPoly d = ugcd(sf.affine, sg.affine);
    // Monic affine part keeps the result canonical.
    Cyc lead_inv = d.back().inverse();
    int sa = std::min(sf.a, sg.a), sb = std::min(sf.b, sg.b);
    Poly r(2);
    for (int i = 0; i <= udeg(d); ++i)
        r.add_term({sa + i, sb + udeg(d) - i}, d[i] * lead_inv);
    return r;
}

}  // namespace qmckay
