#pragma once
#include <vector>

#include "qmckay/linalg.hpp"

namespace qmckay {

// Scales an invertible matrix so its first nonzero entry in row-major order
// is 1. Projectively equal matrices normalize to the same matrix.
Mat normalize_projective(const Mat& m);

// Finite subgroup of PGL_5 given by a full multiplication table. Elements
// are stored normalized, all entries at the common conductor; index 0 is
// the identity. Conjugacy data is in a canonical order: classes sorted by
// (element order, class size, smallest member matrix).
struct GroupTable {
    long conductor = 1;
    std::vector<Mat> elems;
    std::vector<std::vector<int>> mult;  // mult[i][j] = index of elems[i]*elems[j]
    std::vector<int> inv;
    std::vector<int> order_of;

    std::vector<std::vector<int>> classes;      // ascending member indices
    std::vector<int> class_rep;                 // smallest member matrix
    std::vector<int> class_of;
    std::vector<std::vector<int>> centralizer;  // of class_rep[c], ascending

    int order() const { return (int)elems.size(); }
    int num_classes() const { return (int)classes.size(); }

    // Index of a matrix (up to scalar), or -1 when absent.
    int find(const Mat& m) const;
};

// Closes the generated group by breadth-first products. Errors with
// cap_exceeded when the order passes the cap and schema when a generator is
// singular or not 5x5.
GroupTable close_group(const std::vector<Mat>& generators, long cap = 20000);

// Scalar c with H G H^{-1} = c G on matrix representatives; well defined for
// projectively commuting pairs, internal error otherwise.
Cyc commutation_scalar(const GroupTable& t, int g, int h);

// Smallest normal subgroup containing the seeds, as ascending indices.
std::vector<int> normal_closure(const GroupTable& t, const std::vector<int>& seeds);

struct QuotientInfo {
    long order = 1;
    bool trivial = true;
    bool cyclic = true;
    bool abelian = true;
    std::vector<long> abelian_invariants;  // of the abelianization, d_1 | d_2 | ...
};

// Structure of G/N for a normal subgroup N given by ascending indices.
QuotientInfo quotient_diagnostics(const GroupTable& t, const std::vector<int>& normal_subgroup);

}  // namespace qmckay
