#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "satake/linalg.hpp"
#include "satake/oshima.hpp"

using namespace satake;

namespace {

Eigen::VectorXd vec1(double x) {
    Eigen::VectorXd v(1);
    v << x;
    return v;
}

Eigen::VectorXd vec2(double x, double y) {
    Eigen::VectorXd v(2);
    v << x, y;
    return v;
}

Eigen::MatrixXd mat2(double a, double b, double c, double d) {
    Eigen::MatrixXd m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("diagonal group elements act on the parameter through their weights") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const OshimaPoint p = oshima_point(mat2(2.0, 0.0, 0.0, 0.5), vec1(1.0));
    const ChartCoords c = canonicalize(g, rd, p);
    CHECK(c.n.isIdentity(1e-12));
    REQUIRE(c.t.size() == 1);
    CHECK(c.t[0] == doctest::Approx(4.0));

    // the same class written in chart form
    const OshimaPoint q = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(4.0));
    double dist = 1e9;
    CHECK(point_eq(g, rd, p, q, {}, &dist));
    CHECK(dist < 1e-9);
}

TEST_CASE("acting invalidates cached chart coordinates") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    OshimaPoint p = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0));
    canonicalize(g, rd, p);
    const OshimaPoint moved = act(mat2(1.0, 1.0, 0.0, 1.0), p);
    CHECK_FALSE(moved.canonical.has_value());
    CHECK((moved.g - mat2(1.0, 1.0, 0.0, 1.0)).norm() < 1e-15);
    CHECK_THROWS_AS(act(Eigen::MatrixXd::Identity(3, 3), p), DimensionMismatch);
}

TEST_CASE("points outside the big cell fail canonicalize but not the atlas") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const OshimaPoint w = oshima_point(mat2(0.0, -1.0, 1.0, 0.0), vec1(0.0));
    CHECK_FALSE(try_canonicalize(g, rd, w).has_value());
    CHECK_THROWS_AS(canonicalize(g, rd, w), NotInChart);
    // the atlas still separates it from a cell point
    const OshimaPoint e = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0));
    CHECK_FALSE(point_eq(g, rd, w, e));
    CHECK(point_eq(g, rd, w, w));
}

TEST_CASE("the atlas is made of special orthogonal signed permutations") {
    for (const char* name : {"sl2r", "sl3r"}) {
        const Group g = build_group(name);
        const auto atlas = chart_atlas(g);
        CHECK(atlas.size() == (g.n == 2 ? 2 : 6));
        CHECK(atlas.front().isIdentity(0.0));
        for (const auto& w : atlas) {
            CHECK((w * w.transpose()).isIdentity(1e-14));
            CHECK(w.determinant() == doctest::Approx(1.0));
            for (Eigen::Index i = 0; i < w.rows(); ++i)
                for (Eigen::Index j = 0; j < w.cols(); ++j)
                    CHECK(std::abs(w(i, j)) * (1.0 - std::abs(w(i, j))) == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("quotient invariance: right factors from the fiber do not move the point") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    std::mt19937_64 eng(23);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (double t : {1.0, 0.5, 0.0}) {
        const SubgroupGenerators gen = h_t_generators(g, rd, vec1(t));
        for (int it = 0; it < 10; ++it) {
            const double a = uni(eng), b = uni(eng), c = uni(eng);
            Eigen::MatrixXd gm = linalg::expm(mat2(a, b, c, -a));
            Eigen::MatrixXd h = gen.reps[static_cast<std::size_t>(it) % gen.reps.size()];
            for (Eigen::Index j = 0; j < gen.algebra.cols(); ++j)
                h = h * linalg::expm(g.from_coords(uni(eng) * gen.algebra.col(j)));
            const OshimaPoint p = oshima_point(gm, vec1(t));
            const OshimaPoint ph = oshima_point(gm * h, vec1(t));
            CHECK(point_eq(g, rd, p, ph));
        }
    }
}

TEST_CASE("orbit class and the closed positive region") {
    const OshimaPoint p = oshima_point(Eigen::MatrixXd::Identity(3, 3), vec2(0.0, 1.0));
    const Eigen::VectorXi cls = orbit_class(p);
    CHECK(cls[0] == 0);
    CHECK(cls[1] == 1);
    CHECK(satake_member(p));
    CHECK_FALSE(satake_member(oshima_point(Eigen::MatrixXd::Identity(3, 3), vec2(-0.2, 1.0))));
    CHECK(satake_member(oshima_point(Eigen::MatrixXd::Identity(3, 3), vec2(0.0, 0.0))));
}

TEST_CASE("sign flips move between sheets without changing the class size") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const OshimaPoint p = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0));
    Eigen::VectorXi s(1);
    s << -1;
    const OshimaPoint q = z2_flip(s, p);
    CHECK(q.t[0] == doctest::Approx(-1.0));
    CHECK_FALSE(point_eq(g, rd, p, q));
    Eigen::VectorXi bad(1);
    bad << 2;
    CHECK_THROWS_AS(z2_flip(bad, p), DimensionMismatch);
}

TEST_CASE("rank-one sphere hits the textbook boundary values") {
    const Group g = build_group("sl2r");
    const SpherePoint zi = sl2_sphere(g, oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(1.0)));
    CHECK(std::abs(zi.value() - std::complex<double>(0.0, 1.0)) < 1e-14);

    const SpherePoint z0 = sl2_sphere(g, oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(0.0)));
    CHECK(std::abs(z0.value()) < 1e-14);

    const SpherePoint zy = sl2_sphere(g, oshima_point(mat2(1.0, 0.7, 0.0, 1.0), vec1(0.0)));
    CHECK(std::abs(zy.value() - std::complex<double>(0.7, 0.0)) < 1e-14);

    const SpherePoint zinf = sl2_sphere(g, oshima_point(mat2(0.0, -1.0, 1.0, 0.0), vec1(0.0)));
    CHECK(zinf.is_infinity());
    CHECK(chordal(zinf, SpherePoint{{1.0, 0.0}, {0.0, 0.0}}) < 1e-14);

    const Group g3 = build_group("sl3r");
    CHECK_THROWS_AS(sl2_sphere(g3, oshima_point(Eigen::MatrixXd::Identity(3, 3), vec2(1.0, 1.0))),
                    WrongGroup);
}

TEST_CASE("sphere action is equivariant against the reference Moebius map") {
    const Group g = build_group("sl2r");
    std::mt19937_64 eng(5);
    std::normal_distribution<double> dist(0.0, 0.7);
    for (int it = 0; it < 50; ++it) {
        const double a = dist(eng), b = dist(eng), c = dist(eng);
        const Eigen::MatrixXd gm = linalg::expm(mat2(a, b, c, -a));
        const double t = dist(eng);
        const OshimaPoint p = oshima_point(Eigen::MatrixXd::Identity(2, 2), vec1(t));
        const SpherePoint lhs = sl2_sphere(g, act(gm, p));
        const SpherePoint base = sl2_sphere(g, p);
        const oracle::MoebiusValue ref =
            oracle::moebius_reference(gm, base.value(), base.is_infinity());
        CHECK(chordal(lhs, SpherePoint{ref.num, ref.den}) < 1e-12);
        // the library's own moebius agrees
        CHECK(chordal(lhs, mobius(gm, base)) < 1e-12);
    }
}

TEST_CASE("upper and lower sheets map to the matching half planes") {
    const Group g = build_group("sl2r");
    Eigen::MatrixXd gm = mat2(1.3, 0.4, 0.25, (1.0 + 0.4 * 0.25) / 1.3);
    const SpherePoint up = sl2_sphere(g, oshima_point(gm, vec1(0.8)));
    CHECK(up.value().imag() > 0.0);
    const SpherePoint dn = sl2_sphere(g, oshima_point(gm, vec1(-0.8)));
    CHECK(dn.value().imag() < 0.0);
    const SpherePoint mid = sl2_sphere(g, oshima_point(gm, vec1(0.0)));
    CHECK(std::abs(mid.value().imag()) < 1e-14);
}

TEST_CASE("compact_witness rewrites dense points into the closed box") {
    std::mt19937_64 eng(31);
    std::normal_distribution<double> dist(0.0, 0.8);
    for (const char* name : {"sl2r", "sl3r"}) {
        const Group g = build_group(name);
        const RootDatum rd = restricted_root_decomposition(g);
        const int r = static_cast<int>(rd.simple.size());
        for (int it = 0; it < 15; ++it) {
            Eigen::MatrixXd x(g.n, g.n);
            for (Eigen::Index i = 0; i < g.n; ++i)
                for (Eigen::Index j = 0; j < g.n; ++j) x(i, j) = dist(eng);
            x.diagonal().array() -= x.trace() / static_cast<double>(g.n);
            Eigen::VectorXd t(r);
            for (int i = 0; i < r; ++i) t[i] = 0.3 + std::abs(dist(eng));
            const OshimaPoint p = oshima_point(linalg::expm(x), t);
            const CompactWitness w = compact_witness(g, rd, p);
            CHECK((w.k * w.k.transpose()).isIdentity(1e-9));
            CHECK(w.t.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
            CHECK(w.residual < 1e-8);
            CHECK(point_eq(g, rd, oshima_point(w.k, w.t), p));
        }
        // degenerate points are refused
        Eigen::VectorXd tz = Eigen::VectorXd::Zero(r);
        CHECK_THROWS_AS(
            compact_witness(g, rd, oshima_point(Eigen::MatrixXd::Identity(g.n, g.n), tz)),
            Unsupported);
    }
}
