#include "doctest.h"

#include <cmath>
#include <random>

#include "satake/groupoid.hpp"
#include "satake/linalg.hpp"

using namespace satake;

namespace {

Eigen::VectorXd vec1(double x) {
    Eigen::VectorXd v(1);
    v << x;
    return v;
}

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
    Eigen::MatrixXd m(2, 2);
    m << a, b, c, d;
    return m;
}

Eigen::MatrixXd upper(double y) { return mat2(1.0, y, 0.0, 1.0); }

}  // namespace

TEST_CASE("arrows know their endpoints and compose like a groupoid") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const OshimaPoint base = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0));
    const Arrow a1 = make_arrow(g, upper(1.0), base);
    CHECK(point_eq(g, rd, source(a1), base));
    CHECK(point_eq(g, rd, target(a1), oshima_point(upper(1.0), vec1(1.0))));

    const Arrow a2 = make_arrow(g, mat2(1.0, 0.0, 1.0, 1.0), target(a1));
    const Arrow c = compose(g, rd, a2, a1);
    CHECK((c.gamma - mat2(1.0, 1.0, 1.0, 2.0)).norm() < 1e-14);
    CHECK(point_eq(g, rd, source(c), base));

    // unit and inverse laws
    CHECK(arrow_eq(g, rd, compose(g, rd, unit_arrow(target(a1)), a1), a1));
    CHECK(arrow_eq(g, rd, compose(g, rd, a1, unit_arrow(base)), a1));
    CHECK(arrow_eq(g, rd, compose(g, rd, arrow_inverse(a1), a1), unit_arrow(base)));

    CHECK_THROWS_AS(make_arrow(g, 2.0 * Eigen::MatrixXd::Identity(2, 2), base), NotInGroup);
}

TEST_CASE("composition refuses mismatched endpoints") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const Arrow a = make_arrow(g, upper(1.0), oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0)));
    const Arrow b = make_arrow(g, upper(1.0), oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(2.0)));
    CHECK_THROWS_AS(compose(g, rd, b, a), NotComposable);
}

TEST_CASE("arrow equality quotients by the isotropy fiber only") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);

    // over t = 1 the fiber subgroup is SO(2); a rotation shift is invisible
    const OshimaPoint p1 = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0));
    const double th = 0.4;
    const Eigen::MatrixXd rot = mat2(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
    const Arrow a = make_arrow(g, upper(0.7), p1);
    const Arrow a_shift{upper(0.7) * rot, oshima_point(rot.inverse(), vec1(1.0))};
    CHECK(arrow_eq(g, rd, a, a_shift));

    // a diagonal shift is not in the fiber over t = 1
    const Arrow b{upper(0.7) * mat2(2.0, 0.0, 0.0, 0.5), p1};
    CHECK_FALSE(arrow_eq(g, rd, a, b));
}

TEST_CASE("degenerate points carry nontrivial isotropy") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const OshimaPoint p0 = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0));
    const Eigen::MatrixXd d = mat2(2.0, 0.0, 0.0, 0.5);
    const Arrow loop = make_arrow(g, d, p0);
    // the diagonal fixes the class of [[e, 0]] ...
    CHECK(point_eq(g, rd, source(loop), target(loop)));
    // ... yet is not the unit arrow: the isotropy group is not trivial
    CHECK_FALSE(arrow_eq(g, rd, loop, unit_arrow(p0)));
}

TEST_CASE("chart arrows mirror the abstract arrows across the isomorphism") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const ChartCoords from{Eigen::MatrixXd::Identity(2, 2), vec1(1.0)};
    const ChartArrow w =
        chart_arrow(g, rd, Eigen::MatrixXd::Identity(2, 2), mat2(2.0, 0.0, 0.0, 0.5), from);
    REQUIRE(w.to.t.size() == 1);
    CHECK(w.to.t[0] == doctest::Approx(4.0));

    const Arrow a = chart_iso(w);
    CHECK((a.gamma - mat2(2.0, 0.0, 0.0, 0.5)).norm() < 1e-14);
    CHECK(point_eq(g, rd, a.base, oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0))));

    const ChartArrow back = chart_iso_inv(g, rd, a);
    CHECK((back.a - w.a).norm() < 1e-12);
    CHECK((back.from.n - w.from.n).norm() < 1e-12);
    CHECK((back.to.t - w.to.t).norm() < 1e-12);
}

TEST_CASE("chart composition is compatible with the groupoid composition") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    std::mt19937_64 eng(41);
    std::uniform_real_distribution<double> uni(-0.8, 0.8);
    for (int it = 0; it < 20; ++it) {
        const ChartCoords from{upper(uni(eng)), vec1(0.4 + std::abs(uni(eng)))};
        const double u1 = uni(eng);
        const Eigen::MatrixXd a1 = linalg::expm(mat2(u1, 0.0, 0.0, -u1));
        const ChartArrow w1 = chart_arrow(g, rd, upper(uni(eng)), a1, from);
        const Eigen::MatrixXd a2 = linalg::expm(Eigen::MatrixXd(mat2(1.0, 0.0, 0.0, -1.0) * uni(eng)));
        const ChartArrow w2 = chart_arrow(g, rd, upper(uni(eng)), a2, w1.to);
        const ChartArrow ww = chart_compose(g, rd, w2, w1);

        const Arrow lhs = chart_iso(ww);
        const Arrow rhs = compose(g, rd, chart_iso(w2), chart_iso(w1));
        CHECK((lhs.gamma - rhs.gamma).norm() < 1e-9 * std::max(1.0, rhs.gamma.norm()));
        CHECK(arrow_eq(g, rd, lhs, rhs));

        // unit and inverse in chart form
        const ChartArrow u = chart_unit(w1.from);
        CHECK((chart_compose(g, rd, w1, u).a - w1.a).norm() < 1e-12);
        const ChartArrow winv = chart_inverse(w1);
        CHECK((chart_compose(g, rd, winv, w1).a - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-9);
    }
}

TEST_CASE("chart arrows validate their ingredients") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const ChartCoords from{Eigen::MatrixXd::Identity(2, 2), vec1(1.0)};
    // not unipotent upper
    CHECK_THROWS_AS(chart_arrow(g, rd, mat2(1.0, 0.0, 0.5, 1.0), mat2(2.0, 0.0, 0.0, 0.5),
                                ChartCoords{mat2(1.0, 0.0, 0.5, 1.0), vec1(1.0)}),
                    NotInChart);
    // not in A
    CHECK_THROWS_AS(chart_arrow(g, rd, Eigen::MatrixXd::Identity(2, 2), upper(0.3), from), NotInA);
    // mismatched endpoints refuse to compose
    const ChartArrow w1 = chart_arrow(g, rd, Eigen::MatrixXd::Identity(2, 2),
                                      mat2(2.0, 0.0, 0.0, 0.5), from);
    CHECK_THROWS_AS(chart_compose(g, rd, w1, w1), NotComposable);
    // arrows leaving the big cell have no chart picture
    const Arrow off = make_arrow(g, mat2(0.0, -1.0, 1.0, 0.0),
                                 oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0)));
    CHECK_THROWS_AS(chart_iso_inv(g, rd, off), NotInChart);
}

TEST_CASE("orbit reduction produces the frozen labels over the bottom stratum") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const Arrow a = make_arrow(g, upper(1.0), oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0)));
    const ReducedArrow r = orbit_reduction(g, rd, a, {});
    CHECK((r.x1 - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
    CHECK((r.x2 - upper(1.0)).norm() < 1e-12);
    CHECK(r.subset.empty());

    // the arrow lives over t = 0, not over the dense stratum
    CHECK_THROWS_AS(orbit_reduction(g, rd, a, {0}), WrongOrbit);
    CHECK_THROWS_AS(orbit_reduction(g, rd, a, {7}), UnknownRoot);
}

TEST_CASE("reduced labels are invariant under allowed shifts and nothing else") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const Arrow a = make_arrow(g, upper(0.8), oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0)));
    const ReducedArrow r = orbit_reduction(g, rd, a, {});

    // per-label shifts from the degenerate subgroup: lower triangular with
    // unit diagonal times a sign component
    ReducedArrow s = r;
    s.x1 = s.x1 * mat2(1.0, 0.0, 0.4, 1.0);
    s.x2 = s.x2 * mat2(-1.0, 0.0, 0.9, -1.0);
    CHECK(reduced_eq(g, rd, r, s));
    CHECK(reduced_eq(g, rd, s, r));

    // a joint positive diagonal shift normalizing the stratum
    ReducedArrow j = r;
    const Eigen::MatrixXd b = mat2(3.0, 0.0, 0.0, 1.0 / 3.0);
    j.x1 = j.x1 * b;
    j.x2 = j.x2 * b;
    CHECK(reduced_eq(g, rd, r, j));

    // an upper shift is not allowed
    ReducedArrow bad = r;
    bad.x2 = bad.x2 * upper(0.5);
    CHECK_FALSE(reduced_eq(g, rd, r, bad));

    // different strata never compare
    ReducedArrow other = r;
    other.subset = {0};
    CHECK_THROWS_AS(reduced_eq(g, rd, r, other), WrongOrbit);
}

TEST_CASE("reduction separates arrows with different targets") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const OshimaPoint base = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0));
    const ReducedArrow r1 = orbit_reduction(g, rd, make_arrow(g, upper(1.0), base), {});
    const ReducedArrow r2 = orbit_reduction(g, rd, make_arrow(g, upper(2.0), base), {});
    CHECK_FALSE(reduced_eq(g, rd, r1, r2));
}
