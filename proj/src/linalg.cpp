#include "qmckay/linalg.hpp"

#include <numeric>
#include <sstream>

namespace qmckay {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
    return m;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) fail(errc::internal, "matrix product shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Cyc& f = x.at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += f * y.at(k, j);
            }
        }
    return r;
}

Vec operator*(const Mat& x, const Vec& v) {
    if (x.cols != (int)v.size()) fail(errc::internal, "matrix-vector shape mismatch");
    Vec r(x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            if (x.at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += x.at(i, j) * v[j];
        }
    return r;
}

bool operator==(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (x.a[i] != y.a[i]) return false;
    return true;
}

Mat scale(const Cyc& c, Mat m) {
    for (Cyc& e : m.a) e *= c;
    return m;
}

Mat mat_pow(Mat m, long k) {
    if (m.rows != m.cols) fail(errc::internal, "power of non-square matrix");
    if (k < 0) fail(errc::internal, "negative matrix power");
    Mat r = Mat::identity(m.rows);
    while (k) {
        if (k & 1) r = r * m;
        if (k >>= 1) m = m * m;
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

long mat_conductor(const Mat& m) {
    long l = 1;
    for (const Cyc& e : m.a) l = lcm_conductor(l, e.conductor());
    return l;
}

Mat embedded(const Mat& m, long conductor) {
    Mat r = m;
    for (Cyc& e : r.a) e = e.embedded(conductor);
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Cyc inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Cyc f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return (int)rref(m).size(); }

Cyc det(Mat m) {
    if (m.rows != m.cols) fail(errc::internal, "determinant of non-square matrix");
    Cyc d(1);
    for (int col = 0; col < m.cols; ++col) {
        int p = -1;
        for (int i = col; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Cyc(0);
        if (p != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Cyc inv = m.at(col, col).inverse();
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Cyc f = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Mat inverse(Mat m) {
    if (m.rows != m.cols) fail(errc::internal, "inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Cyc(1);
    }
    auto piv = rref(aug);
    if ((int)piv.size() != n || piv.back() != n - 1)
        fail(errc::internal, "matrix is singular");
    Mat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

Mat column_space(const Mat& m) {
    Mat t = transpose(m);
    auto piv = rref(t);
    Mat r(m.rows, (int)piv.size());
    for (int k = 0; k < (int)piv.size(); ++k)
        for (int i = 0; i < m.rows; ++i) r.at(i, k) = t.at(k, i);
    return r;
}

Mat kernel(const Mat& m) {
    Mat w = m;
    auto piv = rref(w);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (pi < piv.size() && piv[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Mat k(m.cols, (int)free_cols.size());
    for (int idx = 0; idx < (int)free_cols.size(); ++idx) {
        int fc = free_cols[idx];
        k.at(fc, idx) = Cyc(1);
        for (int r = 0; r < (int)piv.size(); ++r) k.at(piv[r], idx) = -w.at(r, fc);
    }
    return k;
}

Mat intersect_column_spaces(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) fail(errc::internal, "intersection shape mismatch");
    if (x.cols == 0 || y.cols == 0) return Mat(x.rows, 0);
    // Null vectors (u; v) of [x | y] give x u = -y v in the intersection.
    Mat joint(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) joint.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) joint.at(i, x.cols + j) = y.at(i, j);
    }
    Mat nul = kernel(joint);
    Mat gen(x.rows, nul.cols);
    for (int c = 0; c < nul.cols; ++c)
        for (int i = 0; i < x.rows; ++i)
            for (int j = 0; j < x.cols; ++j) gen.at(i, c) += x.at(i, j) * nul.at(j, c);
    return column_space(gen);
}

bool solve(const Mat& m, const Vec& b, Vec* x) {
    if (m.rows != (int)b.size()) fail(errc::internal, "solve shape mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols) return false;
    if (x) {
        x->assign(m.cols, Cyc(0));
        for (int r = 0; r < (int)piv.size(); ++r) (*x)[piv[r]] = aug.at(r, m.cols);
    }
    return true;
}

int cmp(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) return x.rows < y.rows ? -1 : 1;
    if (x.cols != y.cols) return x.cols < y.cols ? -1 : 1;
    for (size_t i = 0; i < x.a.size(); ++i) {
        int c = cmp(x.a[i], y.a[i]);
        if (c) return c;
    }
    return 0;
}

std::string str(const Mat& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows; ++i) {
        out << "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out << ", ";
            out << m.at(i, j).str();
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace qmckay
