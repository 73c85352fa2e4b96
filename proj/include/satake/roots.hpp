#pragma once

#include <vector>

#include <Eigen/Dense>

#include "satake/group.hpp"

namespace satake {

// One restricted root: its values on the chosen basis of a, together with an
// orthonormal basis (frame coordinates) of the root space.
struct RestrictedRoot {
    Eigen::VectorXd on_a;
    Eigen::MatrixXd space;

    Eigen::Index multiplicity() const { return space.cols(); }
};

struct RootDatum {
    std::vector<RestrictedRoot> positive;  // ordered by height, then lex
    std::vector<RestrictedRoot> simple;    // indecomposable positives, lex-descending
    Eigen::MatrixXi coeff;                 // positive[i] = sum_j coeff(i,j) * simple[j]

    Eigen::MatrixXd a_space;     // frame coordinates of a
    Eigen::MatrixXd m_space;     // centralizer of a inside k
    Eigen::MatrixXd g0_space;    // joint kernel of ad(a)
    Eigen::MatrixXd k_space;     // +1 eigenspace of theta
    Eigen::MatrixXd p_space;     // -1 eigenspace of theta
    Eigen::MatrixXd n_space;     // sum of positive root spaces
    Eigen::MatrixXd nbar_space;  // sum of negative root spaces
};

// gamma(x) for x in a.
double root_value(const Group& g, const RestrictedRoot& gamma, const Eigen::MatrixXd& x,
                  const Tolerances& tol = {});

// Simultaneous eigenspace decomposition of the algebra under ad(a).
RootDatum restricted_root_decomposition(const Group& g, const Tolerances& tol = {});

}  // namespace satake
