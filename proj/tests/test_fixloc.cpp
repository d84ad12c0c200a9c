#include "qmckay/fixloc.hpp"

#include "doctest.h"

using namespace qmckay;

namespace {

Poly mono(std::vector<int> e, Cyc c = Cyc(1)) {
    Poly p(5);
    p.add_term(std::move(e), c);
    return p;
}

QuinticForm fermat() {
    Poly p(5);
    for (int i = 0; i < 5; ++i) {
        std::vector<int> e(5, 0);
        e[i] = 5;
        p.add_term(std::move(e), Cyc(1));
    }
    return make_quintic(std::move(p));
}

// x1^4 x2 + x2^4 x1 + x3^5 + x4^5 + x5^5, invariant under diag(z3, z3^2, 1, 1, 1).
QuinticForm form_a() {
    Poly p = mono({4, 1, 0, 0, 0}) + mono({1, 4, 0, 0, 0}) + mono({0, 0, 5, 0, 0}) +
             mono({0, 0, 0, 5, 0}) + mono({0, 0, 0, 0, 5});
    return make_quintic(std::move(p));
}

// x1^4 x2 + x2^4 x1 + x3^4 x4 + x4^4 x3 + x5^5, with an order-15 symmetry.
QuinticForm form_b() {
    Poly p = mono({4, 1, 0, 0, 0}) + mono({1, 4, 0, 0, 0}) + mono({0, 0, 4, 1, 0}) +
             mono({0, 0, 1, 4, 0}) + mono({0, 0, 0, 0, 5});
    return make_quintic(std::move(p));
}

// x1^4 x2 + x2^5 + x3^4 x4 + x4^5 + x5^5 for the order-20 group.
QuinticForm form_d20() {
    Poly p = mono({4, 1, 0, 0, 0}) + mono({0, 5, 0, 0, 0}) + mono({0, 0, 4, 1, 0}) +
             mono({0, 0, 0, 5, 0}) + mono({0, 0, 0, 0, 5});
    return make_quintic(std::move(p));
}

Mat diag(std::vector<Cyc> d) {
    Mat m((int)d.size(), (int)d.size());
    for (int i = 0; i < (int)d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Mat perm5(const std::vector<int>& sigma) {
    Mat m(5, 5);
    for (int i = 0; i < 5; ++i) m.at(i, sigma[i]) = Cyc(1);
    return m;
}

Cyc z(long n, long k = 1) { return root_of_unity(n, k); }

}  // namespace

TEST_CASE("gorenstein_check recognizes the three outcomes") {
    QuinticForm f = fermat();
    Mat good = diag({Cyc(1), z(5), z(5, 2), z(5, 3), z(5, 4)});
    GorensteinReport r1 = gorenstein_check(good, f);
    CHECK(r1.preserves_form);
    CHECK(r1.gorenstein);
    CHECK(r1.scalar == Cyc(1));
    // Scale invariance of the verdict.
    GorensteinReport r1s = gorenstein_check(scale(z(5, 2), good), f);
    CHECK(r1s.gorenstein);

    // Preserves the form only up to the wrong scalar: diag(1,1,1,1,-1) on a
    // form with even x5 degrees has mu = 1 but determinant -1.
    Poly p = mono({5, 0, 0, 0, 0}) + mono({0, 5, 0, 0, 0}) + mono({0, 0, 5, 0, 0}) +
             mono({0, 0, 0, 5, 0}) + mono({1, 0, 0, 0, 4});
    QuinticForm even5 = make_quintic(std::move(p));
    Mat flip = diag({Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(-1)});
    GorensteinReport r2 = gorenstein_check(flip, even5);
    CHECK(r2.preserves_form);
    CHECK(r2.scalar == Cyc(1));
    CHECK_FALSE(r2.gorenstein);

    GorensteinReport r3 = gorenstein_check(diag({Cyc(2), Cyc(1), Cyc(1), Cyc(1), Cyc(1)}), f);
    CHECK_FALSE(r3.preserves_form);
}

TEST_CASE("classify_subspace over all dimensions") {
    QuinticForm f = fermat();
    Mat e1(5, 1);
    e1.at(0, 0) = Cyc(1);
    CHECK(classify_subspace(f, e1).empty);  // Fermat misses coordinate points

    QuinticForm fa = form_a();
    CHECK_FALSE(classify_subspace(fa, e1).empty);  // x1^5 is absent here
    Classification pt = classify_subspace(fa, e1);
    CHECK(pt.kind == StratumKind::isolated_point);
    CHECK(pt.euler == 1);

    Mat b12(5, 2);
    b12.at(0, 0) = Cyc(1);
    b12.at(1, 1) = Cyc(1);
    Classification fin = classify_subspace(f, b12);
    CHECK(fin.kind == StratumKind::finite_points);
    CHECK(fin.euler == 5);
    CHECK(fin.points == 5);

    // Restriction vanishing on a 2-plane: a line inside X.
    QuinticForm fb = form_b();
    Mat b13(5, 2);
    b13.at(0, 0) = Cyc(1);
    b13.at(2, 1) = Cyc(1);
    Classification lin = classify_subspace(fb, b13);
    CHECK(lin.kind == StratumKind::line);
    CHECK(lin.euler == 2);

    Mat b345(5, 3);
    b345.at(2, 0) = Cyc(1);
    b345.at(3, 1) = Cyc(1);
    b345.at(4, 2) = Cyc(1);
    Classification cur = classify_subspace(f, b345);
    CHECK(cur.kind == StratumKind::plane_curve);
    CHECK(cur.euler == -10);

    Mat b1234(5, 4);
    for (int i = 0; i < 4; ++i) b1234.at(i, i) = Cyc(1);
    Classification sur = classify_subspace(f, b1234);
    CHECK(sur.kind == StratumKind::surface);
    CHECK(sur.euler == 55);

    CHECK(classify_subspace(f, Mat::identity(5)).kind == StratumKind::whole_x);
    CHECK(classify_subspace(f, Mat::identity(5)).euler == -200);
    CHECK(classify_subspace(f, Mat(5, 0)).empty);

    // A quintic vanishing on a plane is singular: schema error.
    QuinticForm degenerate = make_quintic(mono({5, 0, 0, 0, 0}) + mono({0, 5, 0, 0, 0}));
    CHECK_THROWS_AS(classify_subspace(degenerate, b345), Error);
}

TEST_CASE("lift choice matches the frozen examples") {
    // Identity lifts to the identity.
    Session s(close_group({diag({Cyc(1), z(5), z(5, 2), z(5, 3), z(5, 4)})}), fermat());
    CHECK(s.lift(0).a == Mat::identity(5));
    CHECK(s.lift(0).order == 1);
    CHECK(s.lift(0).eigen.size() == 1);

    // diag(1, z5, z5^2, z5^3, z5^4) is already volume preserving.
    Mat d = diag({Cyc(1), z(5), z(5, 2), z(5, 3), z(5, 4)});
    int g = s.group().find(d);
    REQUIRE(g > 0);
    CHECK(s.lift(g).a == d);
    CHECK(s.lift(g).order == 5);
    CHECK(s.lift(g).eigen.size() == 5);

    // diag(-1,1,-1,1,1): the order-2 candidate beats the order-10 ones.
    Mat refl = diag({Cyc(-1), Cyc(1), Cyc(-1), Cyc(1), Cyc(1)});
    Session sd(close_group({refl}), form_d20());
    int r = sd.group().find(refl);
    REQUIRE(r > 0);
    CHECK(sd.lift(r).a == refl);
    CHECK(sd.lift(r).order == 2);

    // diag(z3, z3^2, 1, 1, 1): lift scalar z3, trace 2.
    Mat a3 = diag({z(3), z(3, 2), Cyc(1), Cyc(1), Cyc(1)});
    Session sa(close_group({a3}), form_a());
    int t = sa.group().find(a3);
    REQUIRE(t > 0);
    CHECK(sa.lift(t).a == a3);
    Cyc trace;
    for (int i = 0; i < 5; ++i) trace += sa.lift(t).a.at(i, i);
    CHECK(trace == Cyc(2));

    // Order-6 element on its invariant form: the lift is the matrix itself.
    QuinticForm f6 = make_quintic(mono({4, 1, 0, 0, 0}) + mono({1, 4, 0, 0, 0}) +
                                  mono({1, 0, 4, 0, 0}) + mono({0, 1, 0, 4, 0}) +
                                  mono({1, 0, 1, 3, 0}) + mono({0, 1, 3, 1, 0}, Cyc(-1)) +
                                  mono({0, 0, 0, 0, 5}));
    Mat a6 = diag({z(6, 2), z(6, 4), z(6), z(6, 5), Cyc(1)});
    REQUIRE(gorenstein_check(a6, f6).gorenstein);
    Session s6(close_group({a6}), f6);
    int u = s6.group().find(a6);
    REQUIRE(u > 0);
    CHECK(s6.lift(u).a == a6);
    CHECK(s6.lift(u).order == 6);
}

TEST_CASE("non-Gorenstein element refuses to lift") {
    Poly p = mono({5, 0, 0, 0, 0}) + mono({0, 5, 0, 0, 0}) + mono({0, 0, 5, 0, 0}) +
             mono({0, 0, 0, 5, 0}) + mono({1, 0, 0, 0, 4});
    QuinticForm even5 = make_quintic(std::move(p));
    Mat flip = diag({Cyc(1), Cyc(1), Cyc(1), Cyc(1), Cyc(-1)});
    Session s(close_group({flip}), even5);
    int g = s.group().find(flip);
    REQUIRE(g > 0);
    try {
        s.lift(g);
        FAIL("expected not_gorenstein");
    } catch (const Error& e) {
        CHECK(e.kind == errc::not_gorenstein);
    }
}

TEST_CASE("fixed loci with frozen strata") {
    // Order 2 on the order-20 form: plane curve plus a line, e = -8.
    Mat refl = diag({Cyc(-1), Cyc(1), Cyc(-1), Cyc(1), Cyc(1)});
    Session sd(close_group({refl}), form_d20());
    int r = sd.group().find(refl);
    const auto& strata = sd.fixed_locus(r);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].eigenvalue == Cyc(1));
    CHECK(strata[0].kind == StratumKind::plane_curve);
    CHECK(strata[0].euler == -10);
    CHECK(strata[0].age == Rat(1));
    CHECK(strata[1].eigenvalue == Cyc(-1));
    CHECK(strata[1].kind == StratumKind::line);
    CHECK(strata[1].euler == 2);
    CHECK(strata[1].age == Rat(1));
    CHECK(sd.fixed_euler(r) == -8);

    // Order 3: curve of age 1 plus two isolated points of ages 2 and 1.
    Mat a3 = diag({z(3), z(3, 2), Cyc(1), Cyc(1), Cyc(1)});
    Session sa(close_group({a3}), form_a());
    int t = sa.group().find(a3);
    const auto& st3 = sa.fixed_locus(t);
    REQUIRE(st3.size() == 3);
    CHECK(st3[0].eigenvalue == Cyc(1));
    CHECK(st3[0].kind == StratumKind::plane_curve);
    CHECK(st3[0].age == Rat(1));
    CHECK(st3[1].eigenvalue == z(3));
    CHECK(st3[1].kind == StratumKind::isolated_point);
    CHECK(st3[1].age == Rat(2));
    CHECK(st3[2].eigenvalue == z(3, 2));
    CHECK(st3[2].kind == StratumKind::isolated_point);
    CHECK(st3[2].age == Rat(1));
    CHECK(sa.fixed_euler(t) == -8);

    // Free action: diag(1, z5, z5^2, z5^3, z5^4) on Fermat has empty locus.
    Session sf(close_group({diag({Cyc(1), z(5), z(5, 2), z(5, 3), z(5, 4)})}), fermat());
    int g = sf.group().find(diag({Cyc(1), z(5), z(5, 2), z(5, 3), z(5, 4)}));
    CHECK(sf.fixed_locus(g).empty());
    CHECK(sf.fixed_euler(g) == 0);

    // Two finite strata of ages 1 and 2 on Fermat.
    Mat m2 = diag({Cyc(1), Cyc(1), z(5), z(5), z(5, 3)});
    Session sm(close_group({m2}), fermat());
    int q = sm.group().find(m2);
    const auto& stm = sm.fixed_locus(q);
    REQUIRE(stm.size() == 2);
    CHECK(stm[0].eigenvalue == Cyc(1));
    CHECK(stm[0].points == 5);
    CHECK(stm[0].age == Rat(1));
    CHECK(stm[1].eigenvalue == z(5));
    CHECK(stm[1].points == 5);
    CHECK(stm[1].age == Rat(2));
    CHECK(sm.fixed_euler(q) == 10);

    // Identity: the whole threefold.
    CHECK(sm.fixed_locus(0).size() == 1);
    CHECK(sm.fixed_locus(0)[0].kind == StratumKind::whole_x);
    CHECK(sm.fixed_euler(0) == -200);
}

TEST_CASE("pairwise fixed Euler numbers") {
    // Order-20 group: reflection meets the swap in 8 points.
    Mat a1 = diag({Cyc(-1), Cyc(1), Cyc(-1), Cyc(1), Cyc(1)});
    Mat a2 = diag({z(5), z(5), z(5, 4), z(5, 4), Cyc(1)});
    Mat sg = perm5({2, 3, 0, 1, 4});
    Session s(close_group({a1, a2, sg}), form_d20());
    int i1 = s.group().find(a1), is = s.group().find(sg);
    REQUIRE(i1 > 0);
    REQUIRE(is > 0);
    CHECK(s.pairwise_fixed_euler(i1, is) == 8);
    CHECK(s.pairwise_fixed_euler(is, i1) == 8);
    CHECK(s.pairwise_fixed_euler(i1, i1) == s.fixed_euler(i1));
    CHECK(s.pairwise_fixed_euler(0, is) == s.fixed_euler(is));

    // Coordinate 3x3 pair on the order-15 form: four common points.
    Mat g1 = diag({z(3), z(3, 2), Cyc(1), Cyc(1), Cyc(1)});
    Mat g2 = diag({Cyc(1), Cyc(1), z(3), z(3, 2), Cyc(1)});
    Session sb(close_group({g1, g2}), form_b());
    CHECK(sb.pairwise_fixed_euler(sb.group().find(g1), sb.group().find(g2)) == 4);

    // Fermat pairs: disjoint fixed loci, then five shared points.
    Mat p1 = diag({z(5), z(5, 4), Cyc(1), Cyc(1), Cyc(1)});
    Mat p2 = diag({Cyc(1), Cyc(1), z(5), z(5, 4), Cyc(1)});
    Session sp(close_group({p1, p2}), fermat());
    CHECK(sp.pairwise_fixed_euler(sp.group().find(p1), sp.group().find(p2)) == 0);

    Mat q1 = diag({Cyc(1), Cyc(1), z(5), z(5), z(5, 3)});
    Mat q2 = diag({Cyc(1), Cyc(1), z(5, 4), z(5), Cyc(1)});
    Session sq(close_group({q1, q2}), fermat());
    CHECK(sq.pairwise_fixed_euler(sq.group().find(q1), sq.group().find(q2)) == 5);
}

TEST_CASE("per-stratum fixed component counts") {
    // Order-15 cyclic group on its invariant form.
    Mat g = diag({z(15, 5), z(15, 10), z(15, 8), z(15, 13), z(15, 9)});
    Session s(close_group({g}), form_b());
    int gi = s.group().find(g);
    REQUIRE(gi > 0);
    Mat g3m = diag({Cyc(1), Cyc(1), z(5, 3), z(5, 3), z(5, 4)});
    int g3 = s.group().find(g3m);
    REQUIRE(g3 > 0);

    const auto& strata = s.fixed_locus(g3);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].points == 5);
    CHECK(strata[1].points == 5);

    // The full generator fixes only the two coordinate points in each plane.
    CHECK(s.stratum_fixed_counts(g3, gi) == std::vector<long>{2, 2});
    // The identity and g3 itself act trivially on both planes.
    CHECK(s.stratum_fixed_counts(g3, 0) == std::vector<long>{5, 5});
    CHECK(s.stratum_fixed_counts(g3, g3) == std::vector<long>{5, 5});
}
