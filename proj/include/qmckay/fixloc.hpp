#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qmckay/pgroup.hpp"
#include "qmckay/qform.hpp"

namespace qmckay {

struct GorensteinReport {
    bool preserves_form = false;  // A(F) = mu F for some scalar mu
    bool gorenstein = false;      // additionally mu = det A
    Cyc scalar;                   // mu when preserves_form
};

// Substitution test of a single matrix against the form. Scale invariant:
// scalar multiples of A report the same verdict.
GorensteinReport gorenstein_check(const Mat& a, const QuinticForm& f);

// Linear representative of a projective element with A(F) = F and det A = 1.
struct FLift {
    Mat a;
    long order = 1;  // order of the matrix itself
    // Eigenvalues with canonical eigenspace bases, dimensions summing to 5,
    // sorted by (order, exponent) of the eigenvalue.
    std::vector<std::pair<Cyc, Mat>> eigen;
};

enum class StratumKind { isolated_point, finite_points, line, plane_curve, surface, whole_x };

const char* stratum_kind_name(StratumKind k);

// X cap P(E) for one eigenspace E of the lift.
struct Stratum {
    Cyc eigenvalue;
    Mat basis;  // 5 x dim, canonical
    int dim = 0;
    StratumKind kind = StratumKind::isolated_point;
    long euler = 0;   // topological Euler number of the piece
    long points = 0;  // component count: 1 for connected kinds, else the
                      // number of points
    Rat age;
};

// How X meets the projectivization of one subspace.
struct Classification {
    bool empty = true;
    StratumKind kind = StratumKind::isolated_point;
    long euler = 0;
    long points = 0;
};

// Splits on the subspace dimension and the restricted form. Errors with
// schema when the restriction vanishes on a subspace of dimension 3 or 4:
// a quintic through a whole plane is singular, violating the input contract.
Classification classify_subspace(const QuinticForm& f, const Mat& basis);

// Analysis workspace for one group acting on one form. Owns every cache:
// lifts, fixed loci, pairwise Euler numbers, subspace classifications and
// intersections, per-pair fixed-component counts.
class Session {
public:
    Session(GroupTable group, QuinticForm form);

    const GroupTable& group() const { return group_; }
    const QuinticForm& form() const { return form_; }

    // Distinguished lift of element g; not_gorenstein when none exists.
    const FLift& lift(int g);

    // Nonempty strata of X^g in canonical eigenvalue order.
    const std::vector<Stratum>& fixed_locus(int g);

    long fixed_euler(int g);                  // e(X^g)
    long pairwise_fixed_euler(int g, int h);  // e(X^g cap X^h), symmetric

    // For h projectively commuting with g: per stratum of X^g, how many of
    // its components h fixes as sets (each point of a finite stratum is its
    // own component; connected strata count 0 or 1).
    const std::vector<long>& stratum_fixed_counts(int g, int h);

private:
    GroupTable group_;
    QuinticForm form_;
    std::vector<std::optional<FLift>> lifts_;
    std::vector<std::optional<std::vector<Stratum>>> loci_;
    std::map<std::pair<int, int>, long> pair_euler_;
    std::map<std::pair<int, int>, std::vector<long>> fixed_counts_;
    std::map<Mat, Classification, MatLess> classify_cache_;
    std::map<std::pair<Mat, Mat>, Mat, PairMatLess> isect_cache_;

    Classification classify_cached(const Mat& basis);
    const Mat& intersect_cached(const Mat& a, const Mat& b);
};

// Age of the eigenvalue's stratum under the lift: the tangent-direction
// angle sum after removing the point's own direction and the normal
// direction lambda^{-5}.
Rat stratum_age(const FLift& lift, const Cyc& lambda);

}  // namespace qmckay
