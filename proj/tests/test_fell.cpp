#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "satake/fell.hpp"
#include "satake/linalg.hpp"

using namespace satake;

namespace {

Eigen::VectorXd vec1(double x) {
    Eigen::VectorXd v(1);
    v << x;
    return v;
}

}  // namespace

TEST_CASE("sampling the compact fiber produces rotations inside the window") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const SampledClosedSet s = sample_subgroup(g, h_t_generators(g, rd, vec1(1.0)), 5.0, 0.1, 42);
    REQUIRE(!s.points.empty());
    CHECK(s.points.front().isIdentity(1e-12));
    CHECK(s.radius == 5.0);
    for (const auto& p : s.points) {
        CHECK(linalg::op_norm(p) <= 5.0 + 1e-12);
        // H_1 = SO(2)
        CHECK((p.transpose() * p).isIdentity(1e-9));
    }
}

TEST_CASE("sampling rejects degenerate windows") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const SubgroupGenerators gen = h_t_generators(g, rd, vec1(1.0));
    CHECK_THROWS_AS(sample_subgroup(g, gen, -1.0, 0.1, 42), EmptySample);
    CHECK_THROWS_AS(sample_subgroup(g, gen, 5.0, 0.0, 42), EmptySample);
}

TEST_CASE("translate_set moves points and re-windows") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const SampledClosedSet s = sample_subgroup(g, h_t_generators(g, rd, vec1(1.0)), 5.0, 0.1, 42);
    Eigen::MatrixXd shift(2, 2);
    shift << 1.0, 2.0, 0.0, 1.0;
    const SampledClosedSet moved = translate_set(s, shift);
    REQUIRE(!moved.points.empty());
    for (const auto& p : moved.points) CHECK(linalg::op_norm(p) <= 5.0 + 1e-12);
}

TEST_CASE("local_hausdorff matches the quadratic oracle on small sets") {
    SampledClosedSet a, b;
    a.radius = b.radius = 5.0;
    a.eps = b.eps = 0.1;
    const auto mk = [](double x, double y) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2, 2);
        m(0, 1) = x;
        m(1, 0) = y;
        return m;
    };
    a.points = {mk(0.0, 0.0), mk(1.0, 0.0), mk(0.0, 0.5)};
    b.points = {mk(0.1, 0.0), mk(1.2, 0.0)};
    const double want = oracle::hausdorff_naive(a.points, b.points, 5.0, 0.1);
    CHECK(local_hausdorff(a, b) == doctest::Approx(want));
    CHECK(local_hausdorff(b, a) == doctest::Approx(want));
    CHECK(local_hausdorff(a, a) == 0.0);

    SampledClosedSet other = b;
    other.radius = 7.0;
    CHECK_THROWS_AS(local_hausdorff(a, other), IncompatibleWindows);
    SampledClosedSet empty = b;
    empty.points.clear();
    CHECK_THROWS_AS(local_hausdorff(a, empty), EmptySample);
}

TEST_CASE("points hugging the window boundary do not inflate the distance") {
    SampledClosedSet a, b;
    a.radius = b.radius = 2.0;
    a.eps = b.eps = 0.2;
    const auto scale = [](double s) {
        return Eigen::MatrixXd(s * Eigen::MatrixXd::Identity(2, 2));
    };
    // the far point of a sits within 2 eps of the boundary: matched against,
    // never the supremum
    a.points = {scale(1.0), scale(1.9)};
    b.points = {scale(1.0)};
    CHECK(local_hausdorff(a, b) == doctest::Approx(0.0));
}

TEST_CASE("deformed families converge to their limit in the sampled metric") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const SampledClosedSet lim = sample_subgroup(g, h_t_generators(g, rd, vec1(0.0)), 5.0, 0.1, 42);
    double prev = 1e9;
    for (double t : {0.5, 0.125, 0.03125}) {
        const SampledClosedSet s = sample_subgroup(g, h_t_generators(g, rd, vec1(t)), 5.0, 0.1, 42);
        const double d = local_hausdorff(s, lim);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("grassmannian_distance separates and collapses correctly") {
    Eigen::MatrixXd e1(3, 1), e2(3, 1);
    e1 << 1, 0, 0;
    e2 << 0, 1, 0;
    CHECK(grassmannian_distance(e1, e1) == doctest::Approx(0.0));
    CHECK(grassmannian_distance(e1, e2) == doctest::Approx(1.0));
    CHECK(grassmannian_distance(e1, Eigen::MatrixXd(2.0 * e1)) == doctest::Approx(0.0));

    // algebra-level convergence of the deformed family
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    const Eigen::MatrixXd lim = h_t_basis(g, rd, vec1(0.0)).span();
    CHECK(grassmannian_distance(h_t_basis(g, rd, vec1(1e-6)).span(), lim) < 1e-10);
    CHECK(grassmannian_distance(h_t_basis(g, rd, vec1(1.0)).span(), lim) > 0.5);
}
