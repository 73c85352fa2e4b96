#include "doctest.h"

#include <vector>

#include "oracles.hpp"
#include "satake/linalg.hpp"
#include "satake/roots.hpp"

using namespace satake;

TEST_CASE("rank-one decomposition has a single restricted root") {
    const Group g = build_group("sl2r");
    const RootDatum rd = restricted_root_decomposition(g);
    REQUIRE(rd.positive.size() == 1);
    REQUIRE(rd.simple.size() == 1);
    CHECK(rd.positive[0].multiplicity() == 1);
    CHECK(rd.coeff(0, 0) == 1);
    CHECK(rd.a_space.cols() == 1);
    CHECK(rd.m_space.cols() == 0);
    CHECK(rd.k_space.cols() == 1);
    CHECK(rd.p_space.cols() == 2);
    CHECK(rd.n_space.cols() == 1);
    CHECK(rd.nbar_space.cols() == 1);
    CHECK(rd.g0_space.cols() == 1);
}

TEST_CASE("sl3 has the A2 restricted root system") {
    const Group g = build_group("sl3r");
    const RootDatum rd = restricted_root_decomposition(g);
    REQUIRE(rd.positive.size() == 3);
    REQUIRE(rd.simple.size() == 2);
    for (const auto& r : rd.positive) CHECK(r.multiplicity() == 1);

    // the highest root is the sum of the two simples
    std::vector<std::vector<int>> rows;
    for (Eigen::Index i = 0; i < rd.coeff.rows(); ++i)
        rows.push_back({rd.coeff(i, 0), rd.coeff(i, 1)});
    CHECK(std::count(rows.begin(), rows.end(), std::vector<int>{1, 0}) == 1);
    CHECK(std::count(rows.begin(), rows.end(), std::vector<int>{0, 1}) == 1);
    CHECK(std::count(rows.begin(), rows.end(), std::vector<int>{1, 1}) == 1);

    CHECK(rd.k_space.cols() == 3);
    CHECK(rd.p_space.cols() == 5);
    CHECK(rd.m_space.cols() == 0);
    CHECK(rd.n_space.cols() == 3);

    // Cartan matrix cross-check against the trace-form oracle
    std::vector<Eigen::VectorXd> on_a;
    for (const auto& s : rd.simple) on_a.push_back(s.on_a);
    const Eigen::MatrixXd cartan = oracle::cartan_matrix(g.a_basis, on_a);
    Eigen::MatrixXd a2(2, 2);
    a2 << 2, -1, -1, 2;
    CHECK((cartan - a2).norm() < 1e-9);
}

TEST_CASE("root_value is linear and matches the eigenvalue") {
    const Group g = build_group("sl3r");
    const RootDatum rd = restricted_root_decomposition(g);
    Eigen::MatrixXd x = 0.3 * g.a_basis[0] + 0.9 * g.a_basis[1];
    for (const auto& gamma : rd.positive) {
        const double val = root_value(g, gamma, x);
        // ad(x) acts on the root space by the root value
        const Eigen::MatrixXd ad = ad_matrix(g, x);
        const Eigen::MatrixXd acted = ad * gamma.space;
        CHECK((acted - val * gamma.space).norm() < 1e-9);
    }
    // positivity: every positive root is lex-positive on the basis
    for (const auto& gamma : rd.positive) CHECK(linalg::lex_sign(gamma.on_a) == 1);
}

TEST_CASE("root spaces are theta-paired and orthogonal") {
    const Group g = build_group("sl3r");
    const RootDatum rd = restricted_root_decomposition(g);
    // theta of the positive part spans the negative part
    const Eigen::MatrixXd th = g.theta_coords * rd.n_space;
    CHECK(linalg::principal_angle_sin(linalg::orthonormal_columns(th),
                                      linalg::orthonormal_columns(rd.nbar_space)) < 1e-9);
    // k + p fills the algebra, a + m fills g0
    CHECK(rd.k_space.cols() + rd.p_space.cols() == g.dim());
    CHECK(rd.a_space.cols() + rd.m_space.cols() == rd.g0_space.cols());
}
