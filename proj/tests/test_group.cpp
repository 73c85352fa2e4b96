#include "doctest.h"

#include <cmath>

#include "satake/group.hpp"
#include "satake/linalg.hpp"

using namespace satake;

TEST_CASE("sl2r and sl3r backends have the expected shape") {
    const Group g2 = build_group("sl2r");
    CHECK(g2.n == 2);
    CHECK(g2.dim() == 3);
    CHECK(g2.rank_a() == 1);
    CHECK(g2.sl_family);
    CHECK(g2.m_reps.size() == 2);  // {I, -I}
    CHECK(g2.m_reps[0].isIdentity(0.0));

    const Group g3 = build_group("sl3r");
    CHECK(g3.n == 3);
    CHECK(g3.dim() == 8);
    CHECK(g3.rank_a() == 2);
    CHECK(g3.m_reps.size() == 4);  // even sign patterns
    CHECK(g3.m_reps[0].isIdentity(0.0));
    for (const auto& m : g3.m_reps) {
        CHECK((m * m).isIdentity(1e-14));
        CHECK(m.determinant() == doctest::Approx(1.0));
    }

    CHECK_THROWS_AS(build_group("su2"), UnsupportedGroup);
}

TEST_CASE("theta and the trace form behave on raw matrices") {
    const Group g = build_group("sl3r");
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
    x(0, 1) = 2.0;
    CHECK((g.theta(x) + x.transpose()).norm() == 0.0);

    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(3, 3);
    y(1, 0) = 3.0;
    CHECK(g.form(x, y) == doctest::Approx((x * y).trace()));
    // -B(x, theta x) is positive on nonzero elements.
    CHECK(g.inner(x, x) > 0.0);
    CHECK(g.inner(x, y) == doctest::Approx(0.0));
}

TEST_CASE("coords round trip and membership tests") {
    const Group g = build_group("sl3r");
    Eigen::MatrixXd x(3, 3);
    x << 0.1, 0.4, -0.2, 0.7, -0.3, 0.5, 0.2, -0.6, 0.2;
    REQUIRE(g.in_algebra(x));
    const Eigen::VectorXd c = g.coords(x);
    CHECK((g.from_coords(c) - x).norm() < 1e-12);
    // coordinates are isometric for the inner product
    CHECK(c.squaredNorm() == doctest::Approx(g.inner(x, x)));

    CHECK_FALSE(g.in_algebra(Eigen::MatrixXd::Identity(3, 3)));
    CHECK_THROWS_AS(g.coefficients(Eigen::MatrixXd::Identity(3, 3)), NotInGroup);

    CHECK(g.in_group(Eigen::MatrixXd::Identity(3, 3)));
    CHECK_FALSE(g.in_group(2.0 * Eigen::MatrixXd::Identity(3, 3)));
}

TEST_CASE("a_coefficients inverts the a_basis") {
    const Group g = build_group("sl3r");
    Eigen::MatrixXd x = 0.7 * g.a_basis[0] - 1.2 * g.a_basis[1];
    const Eigen::VectorXd c = g.a_coefficients(x);
    CHECK(c[0] == doctest::Approx(0.7));
    CHECK(c[1] == doctest::Approx(-1.2));
    Eigen::MatrixXd off = Eigen::MatrixXd::Zero(3, 3);
    off(0, 1) = 1.0;
    CHECK_THROWS_AS(g.a_coefficients(off), NotInA);
}

TEST_CASE("frame coordinates make theta orthogonal and ad(a) symmetric") {
    const Group g = build_group("sl3r");
    CHECK((g.theta_coords * g.theta_coords.transpose() - Eigen::MatrixXd::Identity(g.dim(), g.dim()))
              .norm() < 1e-12);
    for (const auto& a : g.a_basis) {
        const Eigen::MatrixXd ad = ad_matrix(g, a);
        CHECK((ad - ad.transpose()).norm() < 1e-9);
    }
    // theta in coordinates agrees with theta on matrices
    Eigen::MatrixXd x(3, 3);
    x << 0.2, -0.1, 0.4, 0.3, 0.1, -0.2, 0.6, 0.0, -0.3;
    CHECK((g.theta_coords * g.coords(x) - g.coords(g.theta(x))).norm() < 1e-10);
}

TEST_CASE("ad_matrix represents the bracket") {
    const Group g = build_group("sl2r");
    Eigen::MatrixXd z(2, 2), x(2, 2);
    z << 0.5, 0.2, -0.4, -0.5;
    x << 0.1, -0.7, 0.3, -0.1;
    const Eigen::VectorXd lhs = ad_matrix(g, z) * g.coords(x);
    const Eigen::VectorXd rhs = g.coords(z * x - x * z);
    CHECK((lhs - rhs).norm() < 1e-10);
}

TEST_CASE("build_group_from_spec mirrors the named backend") {
    const Group g = build_group_from_spec(R"({"family":"sl","n":2})");
    CHECK(g.dim() == 3);
    CHECK(g.rank_a() == 1);
    CHECK(g.sl_family);
    CHECK_THROWS_AS(build_group_from_spec(R"({"family":"so","n":3})"), UnsupportedGroup);
    CHECK_THROWS_AS(build_group_from_spec("not json"), InvalidCartanData);
}

TEST_CASE("raw Cartan data is validated") {
    // so long as the data is consistent a raw sl2 clone builds
    const char* ok = R"({"raw":{
        "n": 2,
        "basis": [[[0,1],[0,0]], [[0,0],[1,0]], [[0.5,0],[0,-0.5]]],
        "theta_matrix": [[0,-1,0],[-1,0,0],[0,0,-1]],
        "form_matrix": [[0,1,0],[1,0,0],[0,0,0.5]],
        "a_basis": [[[0.5,0],[0,-0.5]]]}})";
    const Group g = build_group_from_spec(ok);
    CHECK(g.dim() == 3);
    CHECK_FALSE(g.sl_family);
    // group-level operations are not available on raw data
    CHECK_THROWS_AS(g.in_group(Eigen::MatrixXd::Identity(2, 2)), Unsupported);

    // breaking the involution must be rejected
    const char* bad = R"({"raw":{
        "n": 2,
        "basis": [[[0,1],[0,0]], [[0,0],[1,0]], [[0.5,0],[0,-0.5]]],
        "theta_matrix": [[1,0,0],[0,1,0],[0,0,1]],
        "form_matrix": [[0,1,0],[1,0,0],[0,0,0.5]],
        "a_basis": [[[0.5,0],[0,-0.5]]]}})";
    CHECK_THROWS_AS(build_group_from_spec(bad), InvalidCartanData);
}
