#include "qmckay/fixloc.hpp"

#include <algorithm>

namespace qmckay {

const char* stratum_kind_name(StratumKind k) {
    switch (k) {
        case StratumKind::isolated_point: return "isolated_point";
        case StratumKind::finite_points: return "finite_points";
        case StratumKind::line: return "line";
        case StratumKind::plane_curve: return "plane_curve";
        case StratumKind::surface: return "surface";
        case StratumKind::whole_x: return "whole_x";
    }
    fail(errc::internal, "unknown stratum kind");
}

GorensteinReport gorenstein_check(const Mat& a, const QuinticForm& f) {
    GorensteinReport rep;
    QuinticForm g = substitute(a, f);
    const auto& [exp, lead] = *f.p.terms().begin();
    auto it = g.p.terms().find(exp);
    if (it == g.p.terms().end()) return rep;
    Cyc mu = it->second * lead.inverse();
    if (g.p != f.p.scaled(mu)) return rep;
    rep.preserves_form = true;
    rep.scalar = mu;
    rep.gorenstein = (mu == det(a));
    return rep;
}

Classification classify_subspace(const QuinticForm& f, const Mat& basis) {
    Classification c;
    int d = basis.cols;
    if (d == 0) return c;
    if (d == 5) {
        c = {false, StratumKind::whole_x, -200, 1};
        return c;
    }
    Poly r = restrict_to(f, basis);
    switch (d) {
        case 1:
            if (r.is_zero()) c = {false, StratumKind::isolated_point, 1, 1};
            break;
        case 2:
            if (r.is_zero()) {
                c = {false, StratumKind::line, 2, 1};
            } else {
                long k = distinct_projective_roots(r);
                c = {false, StratumKind::finite_points, k, k};
            }
            break;
        case 3:
            if (r.is_zero())
                fail(errc::schema, "the form vanishes on a plane, so the quintic is singular");
            c = {false, StratumKind::plane_curve, -10, 1};
            break;
        case 4:
            if (r.is_zero())
                fail(errc::schema, "the form vanishes on a hyperplane, so the quintic is singular");
            c = {false, StratumKind::surface, 55, 1};
            break;
        default:
            fail(errc::internal, "subspace dimension out of range");
    }
    return c;
}

Rat stratum_age(const FLift& lift, const Cyc& lambda) {
    // Ratios of the other four eigenvalues to lambda, then drop the normal
    // direction lambda^{-5}; the three survivors are the tangent directions.
    std::vector<Cyc> ratios;
    Cyc linv = lambda.inverse();
    bool removed_self = false;
    for (const auto& [mu, basis] : lift.eigen) {
        int mult = basis.cols;
        if (mu == lambda && !removed_self) {
            removed_self = true;
            --mult;
        }
        for (int i = 0; i < mult; ++i) ratios.push_back(mu * linv);
    }
    if (!removed_self || ratios.size() != 4)
        fail(errc::internal, "eigenvalue is not part of the lift");
    Cyc normal = linv.pow(5);
    auto it = std::find(ratios.begin(), ratios.end(), normal);
    if (it == ratios.end())
        fail(errc::schema,
             "fixed stratum lacks the normal eigendirection; the quintic cannot be smooth");
    ratios.erase(it);
    Rat age(0);
    for (const Cyc& r : ratios) {
        auto lg = rou_log(r);
        if (!lg) fail(errc::internal, "tangent ratio is not a root of unity");
        age += lg->alpha();
    }
    return age;
}

Session::Session(GroupTable group, QuinticForm form)
    : group_(std::move(group)), form_(std::move(form)) {
    lifts_.resize(group_.order());
    loci_.resize(group_.order());
}

const FLift& Session::lift(int g) {
    if (lifts_[g]) return *lifts_[g];

    FLift l;
    if (g == 0) {
        l.a = Mat::identity(5);
        l.order = 1;
    } else {
        const Mat& b = group_.elems[g];
        GorensteinReport rep = gorenstein_check(b, form_);
        if (!rep.preserves_form)
            fail(errc::internal, "group element does not preserve the form");
        if (!rep.gorenstein)
            fail(errc::not_gorenstein,
                 "element scales the form by something other than its determinant; no "
                 "volume-preserving lift exists");
        // For A = w b both requirements A(F) = F and det A = 1 reduce to
        // w^5 = det(b)^{-1}; choose the candidate whose scalar has the
        // smallest (order, exponent).
        auto dlog = rou_log(det(b).inverse());
        if (!dlog) fail(errc::internal, "determinant of a finite element must be a root of unity");
        Cyc w0 = root_of_unity(5 * dlog->order, dlog->exponent);
        Cyc best;
        std::pair<long, long> best_key{0, 0};
        for (long k = 0; k < 5; ++k) {
            Cyc w = w0 * root_of_unity(5, k);
            auto wl = rou_log(w);
            if (!wl) fail(errc::internal, "lift scalar is not a root of unity");
            std::pair<long, long> key{wl->order, wl->exponent};
            if (k == 0 || key < best_key) {
                best = w;
                best_key = key;
            }
        }
        l.a = scale(best, b);
        if (det(l.a) != Cyc(1)) fail(errc::internal, "lift determinant is not 1");
        if (substitute(l.a, form_).p != form_.p)
            fail(errc::internal, "lift does not preserve the form");
        // Matrix order = projective order times the order of the residual
        // scalar.
        long po = group_.order_of[g];
        Mat p = mat_pow(l.a, po);
        auto slog = rou_log(p.at(0, 0));
        if (!slog || p != scale(p.at(0, 0), Mat::identity(5)))
            fail(errc::internal, "projective power is not scalar");
        l.order = po * slog->order;
    }

    // Finite order makes the matrix diagonalizable with eigenvalues among
    // the order-th roots of unity.
    int total = 0;
    for (long k = 0; k < l.order && total < 5; ++k) {
        Cyc lam = root_of_unity(l.order, k);
        Mat shifted = l.a;
        for (int i = 0; i < 5; ++i) shifted.at(i, i) -= lam;
        Mat basis = column_space(kernel(shifted));
        if (basis.cols == 0) continue;
        total += basis.cols;
        l.eigen.emplace_back(lam, std::move(basis));
    }
    if (total != 5) fail(errc::internal, "eigenspace dimensions do not sum to 5");
    std::sort(l.eigen.begin(), l.eigen.end(), [](const auto& x, const auto& y) {
        auto lx = rou_log(x.first), ly = rou_log(y.first);
        return std::pair(lx->order, lx->exponent) < std::pair(ly->order, ly->exponent);
    });

    lifts_[g] = std::move(l);
    return *lifts_[g];
}

const std::vector<Stratum>& Session::fixed_locus(int g) {
    if (loci_[g]) return *loci_[g];

    const FLift& l = lift(g);
    std::vector<Stratum> strata;
    for (const auto& [lam, basis] : l.eigen) {
        Classification c = classify_cached(basis);
        if (c.empty) continue;
        Stratum s;
        s.eigenvalue = lam;
        s.basis = basis;
        s.dim = basis.cols;
        s.kind = c.kind;
        s.euler = c.euler;
        s.points = c.points;
        s.age = stratum_age(l, lam);
        if (g != 0 && s.age != 1 && s.age != 2)
            fail(errc::schema, "stratum age must be 1 or 2 for a nontrivial element on a "
                               "smooth quintic");
        strata.push_back(std::move(s));
    }
    loci_[g] = std::move(strata);
    return *loci_[g];
}

long Session::fixed_euler(int g) {
    long e = 0;
    for (const Stratum& s : fixed_locus(g)) e += s.euler;
    return e;
}

Classification Session::classify_cached(const Mat& basis) {
    auto it = classify_cache_.find(basis);
    if (it != classify_cache_.end()) return it->second;
    Classification c = classify_subspace(form_, basis);
    classify_cache_.emplace(basis, c);
    return c;
}

const Mat& Session::intersect_cached(const Mat& a, const Mat& b) {
    auto key = cmp(a, b) <= 0 ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = isect_cache_.find(key);
    if (it != isect_cache_.end()) return it->second;
    Mat w = intersect_column_spaces(key.first, key.second);
    return isect_cache_.emplace(std::move(key), std::move(w)).first->second;
}

long Session::pairwise_fixed_euler(int g, int h) {
    if (g == h || h == 0) return fixed_euler(g);
    if (g == 0) return fixed_euler(h);
    auto key = std::minmax(g, h);
    auto it = pair_euler_.find(key);
    if (it != pair_euler_.end()) return it->second;

    // X^g cap X^h splits over pairs of eigenspaces; distinct pairs meet in
    // disjoint projective subspaces, so Euler numbers add.
    long e = 0;
    for (const auto& [la, ba] : lift(g).eigen)
        for (const auto& [lb, bb] : lift(h).eigen) {
            const Mat& w = intersect_cached(ba, bb);
            if (w.cols == 0) continue;
            Classification c = classify_cached(w);
            if (!c.empty) e += c.euler;
        }
    pair_euler_.emplace(key, e);
    return e;
}

const std::vector<long>& Session::stratum_fixed_counts(int g, int h) {
    auto key = std::make_pair(g, h);
    auto it = fixed_counts_.find(key);
    if (it != fixed_counts_.end()) return it->second;

    const std::vector<Stratum>& strata = fixed_locus(g);
    std::vector<long> counts(strata.size(), 0);
    Cyc c = commutation_scalar(group_, g, h);
    if (c == Cyc(1)) {
        const Mat& hm = group_.elems[h];
        for (size_t i = 0; i < strata.size(); ++i) {
            const Stratum& s = strata[i];
            if (s.kind != StratumKind::finite_points) {
                // h preserves every eigenspace, so each connected component
                // is carried to itself.
                counts[i] = 1;
                continue;
            }
            // Restriction r of h to the stratum plane: h basis = basis r.
            Mat hb = hm * s.basis;
            Mat r(2, 2);
            for (int j = 0; j < 2; ++j) {
                Vec col(5), sol;
                for (int row = 0; row < 5; ++row) col[row] = hb.at(row, j);
                if (!solve(s.basis, col, &sol))
                    fail(errc::internal, "eigenspace is not preserved despite commuting");
                r.at(0, j) = sol[0];
                r.at(1, j) = sol[1];
            }
            if (r.at(0, 1).is_zero() && r.at(1, 0).is_zero() && r.at(0, 0) == r.at(1, 1)) {
                counts[i] = s.points;
                continue;
            }
            // Fixed points of r on the projective line, intersected with the
            // stratum's root set.
            Poly q(2);
            q.add_term({2, 0}, r.at(1, 0));
            q.add_term({1, 1}, r.at(1, 1) - r.at(0, 0));
            q.add_term({0, 2}, -r.at(0, 1));
            Poly f2 = restrict_to(form_, s.basis);
            counts[i] = distinct_projective_roots(binary_form_gcd(f2, q));
        }
    }
    return fixed_counts_.emplace(std::move(key), std::move(counts)).first->second;
}

}  // namespace qmckay
