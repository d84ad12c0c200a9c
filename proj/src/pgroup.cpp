#include "qmckay/pgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qmckay {

Mat normalize_projective(const Mat& m) {
    for (const Cyc& e : m.a) {
        if (e.is_zero()) continue;
        return scale(e.inverse(), m);
    }
    fail(errc::internal, "normalizing the zero matrix");
}

namespace {

// Plain multiplication table; element 0 is the identity.
struct Table {
    std::vector<std::vector<int>> m;
    int order() const { return (int)m.size(); }

    int inv(int x) const {
        for (int y = 0; y < order(); ++y)
            if (m[x][y] == 0) return y;
        fail(errc::internal, "element without inverse");
    }

    int element_order(int x) const {
        int ord = 1;
        for (int acc = x; acc != 0; acc = m[acc][x]) ++ord;
        return ord;
    }
};

std::vector<int> subgroup_closure(const Table& t, std::vector<int> gens) {
    std::vector<char> in(t.order(), 0);
    in[0] = 1;
    std::vector<int> members{0}, frontier{0};
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = t.m[x][g];
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Quotient by a normal subgroup; cosets are renumbered by their smallest
// member, so the identity coset is 0. Also reports the coset of each element.
Table quotient_table(const Table& t, const std::vector<int>& nsub, std::vector<int>* coset_of_out) {
    int n = t.order();
    std::vector<int> coset_min(n, -1);
    for (int x = 0; x < n; ++x) {
        if (coset_min[x] >= 0) continue;
        int mn = n;
        for (int k : nsub) mn = std::min(mn, t.m[x][k]);
        for (int k : nsub) coset_min[t.m[x][k]] = mn;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (coset_min[x] == x) reps.push_back(x);
    std::vector<int> id_of(n, -1);
    for (int i = 0; i < (int)reps.size(); ++i) id_of[reps[i]] = i;

    Table q;
    q.m.assign(reps.size(), std::vector<int>(reps.size()));
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j)
            q.m[i][j] = id_of[coset_min[t.m[reps[i]][reps[j]]]];
    if (coset_of_out) {
        coset_of_out->assign(n, -1);
        for (int x = 0; x < n; ++x) (*coset_of_out)[x] = id_of[coset_min[x]];
    }
    return q;
}

std::vector<int> derived_subgroup(const Table& t) {
    std::vector<int> gens;
    for (int x = 0; x < t.order(); ++x)
        for (int y = 0; y < t.order(); ++y) {
            int c = t.m[t.m[t.m[x][y]][t.inv(x)]][t.inv(y)];
            if (c != 0) gens.push_back(c);
        }
    if (gens.empty()) return {0};
    return subgroup_closure(t, std::move(gens));
}

bool is_abelian(const Table& t) {
    for (int x = 1; x < t.order(); ++x)
        for (int y = x + 1; y < t.order(); ++y)
            if (t.m[x][y] != t.m[y][x]) return false;
    return true;
}

// Invariant factors d_1 | d_2 | ... of an abelian table, largest last.
std::vector<long> abelian_invariants(Table t) {
    std::vector<long> inv;
    while (t.order() > 1) {
        int best = 1, best_ord = t.element_order(1);
        for (int x = 2; x < t.order(); ++x) {
            int o = t.element_order(x);
            if (o > best_ord) {
                best = x;
                best_ord = o;
            }
        }
        inv.push_back(best_ord);
        // A maximal-order cyclic subgroup splits off as a direct factor.
        std::vector<int> cyc{0};
        for (int acc = best; acc != 0; acc = t.m[acc][best]) cyc.push_back(acc);
        std::sort(cyc.begin(), cyc.end());
        t = quotient_table(t, cyc, nullptr);
    }
    std::reverse(inv.begin(), inv.end());
    return inv;
}

}  // namespace

int GroupTable::find(const Mat& m) const {
    Mat norm = normalize_projective(m);
    long l = lcm_conductor(conductor, mat_conductor(norm));
    Mat key = embedded(norm, l);
    for (int i = 0; i < order(); ++i)
        if (embedded(elems[i], l) == key) return i;
    return -1;
}

GroupTable close_group(const std::vector<Mat>& generators, long cap) {
    for (const Mat& g : generators) {
        if (g.rows != 5 || g.cols != 5) fail(errc::schema, "generators must be 5x5");
        if (det(g).is_zero()) fail(errc::schema, "generator matrix is singular");
    }
    long n0 = 1;
    std::vector<Mat> gens;
    for (const Mat& g : generators) {
        Mat ng = normalize_projective(g);
        n0 = lcm_conductor(n0, mat_conductor(ng));
        gens.push_back(std::move(ng));
    }
    for (Mat& g : gens) g = embedded(g, n0);

    GroupTable t;
    t.conductor = n0;
    t.elems.push_back(embedded(Mat::identity(5), n0));
    std::map<Mat, int, MatLess> index;
    index.emplace(t.elems[0], 0);

    // genmap[k][i] = index of elems[i] * gens[k]; parent/last record one
    // factorization of each element as parent * generator.
    std::vector<std::vector<int>> genmap(gens.size());
    std::vector<int> parent{-1}, last{-1};
    for (auto& gm : genmap) gm.push_back(-1);

    for (size_t i = 0; i < t.elems.size(); ++i) {
        for (size_t k = 0; k < gens.size(); ++k) {
            Mat prod = embedded(normalize_projective(t.elems[i] * gens[k]), n0);
            auto it = index.find(prod);
            int j;
            if (it != index.end()) {
                j = it->second;
            } else {
                j = (int)t.elems.size();
                if (j >= cap)
                    fail(errc::cap_exceeded,
                         "group order exceeds cap " + std::to_string(cap));
                t.elems.push_back(prod);
                index.emplace(std::move(prod), j);
                parent.push_back((int)i);
                last.push_back((int)k);
                for (auto& gm : genmap) gm.push_back(-1);
            }
            genmap[k][i] = j;
        }
    }

    int n = t.order();
    // mult[i][j] through the generator word of j: i * (p * g_k) = (i * p) * g_k.
    t.mult.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        t.mult[i][0] = i;
        for (int j = 1; j < n; ++j) t.mult[i][j] = genmap[last[j]][t.mult[i][parent[j]]];
    }

    t.inv.resize(n);
    for (int i = 0; i < n; ++i) {
        int j = 0;
        while (t.mult[i][j] != 0) ++j;
        t.inv[i] = j;
    }

    t.order_of.resize(n);
    for (int i = 0; i < n; ++i) {
        int ord = 1;
        for (int acc = i; acc != 0; acc = t.mult[acc][i]) ++ord;
        t.order_of[i] = ord;
    }

    // Conjugacy classes, then the canonical (order, size, smallest rep) sort.
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int h = 0; h < n; ++h) {
            int y = t.mult[t.mult[h][x]][t.inv[h]];
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::vector<int> reps;
    for (const auto& cls : classes) {
        int best = cls[0];
        for (int x : cls)
            if (cmp(t.elems[x], t.elems[best]) < 0) best = x;
        reps.push_back(best);
    }
    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        int oa = t.order_of[reps[a]], ob = t.order_of[reps[b]];
        if (oa != ob) return oa < ob;
        if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
        return cmp(t.elems[reps[a]], t.elems[reps[b]]) < 0;
    });
    for (int p : perm) {
        t.classes.push_back(classes[p]);
        t.class_rep.push_back(reps[p]);
    }
    t.class_of.assign(n, -1);
    for (int c = 0; c < t.num_classes(); ++c)
        for (int x : t.classes[c]) t.class_of[x] = c;

    t.centralizer.resize(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) {
        int r = t.class_rep[c];
        for (int h = 0; h < n; ++h)
            if (t.mult[h][r] == t.mult[r][h]) t.centralizer[c].push_back(h);
        if (t.centralizer[c].size() * t.classes[c].size() != (size_t)n)
            fail(errc::internal, "orbit-stabilizer mismatch in class data");
    }
    return t;
}

Cyc commutation_scalar(const GroupTable& t, int g, int h) {
    const Mat& G = t.elems[g];
    Mat P = t.elems[h] * G * t.elems[t.inv[h]];
    // elems[h] * elems[inv[h]] is the identity only up to a scalar.
    Mat S = t.elems[h] * t.elems[t.inv[h]];
    Cyc s = S.at(0, 0);
    Cyc c;
    for (size_t i = 0; i < G.a.size(); ++i)
        if (!G.a[i].is_zero()) {
            c = P.a[i] * G.a[i].inverse() * s.inverse();
            break;
        }
    if (P != scale(c * s, G))
        fail(errc::internal, "elements do not commute projectively");
    return c;
}

std::vector<int> normal_closure(const GroupTable& t, const std::vector<int>& seeds) {
    Table plain{t.mult};
    std::vector<int> gens;
    for (int s : seeds)
        for (int h = 0; h < t.order(); ++h) gens.push_back(t.mult[t.mult[h][s]][t.inv[h]]);
    if (gens.empty()) return {0};
    return subgroup_closure(plain, std::move(gens));
}

QuotientInfo quotient_diagnostics(const GroupTable& t, const std::vector<int>& normal_subgroup) {
    Table plain{t.mult};
    Table q = quotient_table(plain, normal_subgroup, nullptr);
    QuotientInfo info;
    info.order = q.order();
    info.trivial = q.order() == 1;
    info.abelian = is_abelian(q);
    info.cyclic = false;
    for (int x = 0; x < q.order(); ++x)
        if (q.element_order(x) == q.order()) {
            info.cyclic = true;
            break;
        }
    Table ab = quotient_table(q, derived_subgroup(q), nullptr);
    info.abelian_invariants = abelian_invariants(std::move(ab));
    return info;
}

}  // namespace qmckay
