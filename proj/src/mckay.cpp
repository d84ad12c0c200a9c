#include "qmckay/mckay.hpp"

#include <string>

#include "qmckay/error.hpp"

namespace qmckay {

namespace {

long exact_div(long num, long den, const char* what) {
    if (den <= 0 || num % den != 0)
        fail(errc::internal, std::string(what) + ": orbit sum " + std::to_string(num) +
                                 " not divisible by " + std::to_string(den));
    return num / den;
}

bool positive_dim(StratumKind k) {
    return k == StratumKind::line || k == StratumKind::plane_curve;
}

}  // namespace

long h11_class(Session& s, int cls) {
    const GroupTable& t = s.group();
    int g = t.class_rep[cls];
    if (g == 0) return 1;
    const std::vector<Stratum>& strata = s.fixed_locus(g);
    const std::vector<int>& cent = t.centralizer[cls];
    long total = 0;
    for (int h : cent) {
        const std::vector<long>& cnt = s.stratum_fixed_counts(g, h);
        for (size_t i = 0; i < strata.size(); ++i)
            if (strata[i].age == 1) total += cnt[i];
    }
    return exact_div(total, (long)cent.size(), "h11 sector");
}

long h22_class(Session& s, int cls) {
    const GroupTable& t = s.group();
    int g = t.class_rep[cls];
    if (g == 0) return 1;
    const std::vector<Stratum>& strata = s.fixed_locus(g);
    const std::vector<int>& cent = t.centralizer[cls];
    long total = 0;
    for (int h : cent) {
        const std::vector<long>& cnt = s.stratum_fixed_counts(g, h);
        for (size_t i = 0; i < strata.size(); ++i) {
            if (strata[i].age == 2) total += cnt[i];
            else if (strata[i].age == 1 && positive_dim(strata[i].kind)) total += cnt[i];
        }
    }
    return exact_div(total, (long)cent.size(), "h22 sector");
}

long euler_orbifold(Session& s) {
    const GroupTable& t = s.group();
    long total = 0;
    for (int c = 0; c < t.num_classes(); ++c) {
        int g = t.class_rep[c];
        long row = 0;
        for (int h : t.centralizer[c]) row += s.pairwise_fixed_euler(g, h);
        total += (long)t.classes[c].size() * row;
    }
    return exact_div(total, t.order(), "orbifold Euler number");
}

long euler_orbifold_direct(Session& s) {
    const GroupTable& t = s.group();
    int n = t.order();
    long total = 0;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (t.mult[g][h] == t.mult[h][g]) total += s.pairwise_fixed_euler(g, h);
    return exact_div(total, n, "orbifold Euler number");
}

long h21_from_euler(long h11, long euler) {
    long diff = 2 * h11 - euler;
    if (diff % 2 != 0) fail(errc::internal, "odd orbifold Euler defect");
    long h21 = diff / 2;
    if (h21 < 0) fail(errc::internal, "negative h21");
    return h21;
}

QuotientInfo fundamental_group(Session& s) {
    const GroupTable& t = s.group();
    std::vector<int> seeds;
    for (int c = 0; c < t.num_classes(); ++c) {
        int g = t.class_rep[c];
        if (!s.fixed_locus(g).empty()) seeds.push_back(g);
    }
    return quotient_diagnostics(t, normal_closure(t, seeds));
}

OrbifoldResult analyze(Session& s, bool with_h22) {
    const GroupTable& t = s.group();
    OrbifoldResult r;
    for (int c = 0; c < t.num_classes(); ++c) {
        ClassReport cr;
        cr.rep = t.class_rep[c];
        cr.order = t.order_of[cr.rep];
        cr.size = (int)t.classes[c].size();
        cr.fixed_euler = s.fixed_euler(cr.rep);
        cr.h11 = h11_class(s, c);
        if (with_h22) cr.h22 = h22_class(s, c);
        r.h11 += cr.h11;
        r.h22 += cr.h22;
        r.classes.push_back(cr);
    }
    if (with_h22 && r.h22 != r.h11) fail(errc::internal, "h11/h22 duality violated");
    r.euler = euler_orbifold(s);
    if (euler_orbifold_direct(s) != r.euler)
        fail(errc::internal, "Euler number routes disagree");
    r.h21 = h21_from_euler(r.h11, r.euler);
    r.pi1 = fundamental_group(s);
    return r;
}

}  // namespace qmckay
