#pragma once
#include <string>
#include <vector>

#include "qmckay/cyclo.hpp"

namespace qmckay {

// Dense matrix over Q(zeta_N); entries may sit at mixed conductors and are
// promoted lazily by Cyc arithmetic.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Cyc> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}

    Cyc& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Cyc& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(int n);
};

using Vec = std::vector<Cyc>;

Mat operator*(const Mat& x, const Mat& y);
Vec operator*(const Mat& x, const Vec& v);
bool operator==(const Mat& x, const Mat& y);
inline bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

Mat scale(const Cyc& c, Mat m);
Mat mat_pow(Mat m, long k);  // k >= 0
Mat transpose(const Mat& m);

// lcm of all entry conductors.
long mat_conductor(const Mat& m);
// Every entry rewritten at the given conductor.
Mat embedded(const Mat& m, long conductor);

Cyc det(Mat m);
Mat inverse(Mat m);  // internal error when singular
int rank(Mat m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat& m);

// Canonical basis of the column space: reduced column echelon form, one
// column per dimension. Equal subspaces yield identical matrices, whatever
// spanning set they came from.
Mat column_space(const Mat& m);

// Canonical basis of the null space {x : m x = 0}, one column per dimension.
Mat kernel(const Mat& m);

// Canonical basis of colspace(x) intersected with colspace(y).
Mat intersect_column_spaces(const Mat& x, const Mat& y);

// Any solution of m x = b; false when inconsistent.
bool solve(const Mat& m, const Vec& b, Vec* x);

// Total order for canonical sorting and map keys.
int cmp(const Mat& x, const Mat& y);
struct MatLess {
    bool operator()(const Mat& x, const Mat& y) const { return cmp(x, y) < 0; }
};
struct PairMatLess {
    bool operator()(const std::pair<Mat, Mat>& x, const std::pair<Mat, Mat>& y) const {
        int c = cmp(x.first, y.first);
        return c != 0 ? c < 0 : cmp(x.second, y.second) < 0;
    }
};

std::string str(const Mat& m);  // row-per-line debug form

}  // namespace qmckay
