#pragma once
#include <vector>

#include "qmckay/fixloc.hpp"

namespace qmckay {

// One conjugacy class row of the final table.
struct ClassReport {
    int rep = 0;   // element index in the group table
    int order = 1;
    int size = 1;
    long fixed_euler = 0;  // e(X^g)
    long h11 = 0;          // sector contribution to h^{1,1}
    long h22 = 0;          // sector contribution to h^{2,2}
};

struct OrbifoldResult {
    long h11 = 0;
    long h21 = 0;
    long h22 = 0;
    long euler = 0;
    QuotientInfo pi1;
    std::vector<ClassReport> classes;  // in group class order
};

// Sector contribution of one conjugacy class to h^{1,1}: 1 for the identity
// (the hyperplane class), otherwise the number of centralizer orbits of
// age-1 components of the fixed locus, by Burnside count.
long h11_class(Session& s, int cls);

// Sector contribution to h^{2,2}: 1 for the identity, otherwise orbits of
// age-2 components plus orbits of positive-dimensional age-1 components,
// whose top cohomology survives to the middle degree.
long h22_class(Session& s, int cls);

// Orbifold Euler number grouped by conjugacy class: sum of
// |class| * sum_{h in C(g)} e(X^g cap X^h), divided by |G|.
long euler_orbifold(Session& s);

// Same number from the raw double sum over commuting pairs. Independent of
// the conjugacy bookkeeping; analyze() checks the two routes agree.
long euler_orbifold_direct(Session& s);

// h^{2,1} from e = 2(h^{1,1} - h^{2,1}).
long h21_from_euler(long h11, long euler);

// G / (normal closure of every element with fixed points on X).
QuotientInfo fundamental_group(Session& s);

// Full invariant set with both Euler routes and, unless disabled, the
// h11/h22 duality check.
OrbifoldResult analyze(Session& s, bool with_h22 = true);

}  // namespace qmckay
