#pragma once

#include <vector>

#include <Eigen/Dense>

#include "satake/roots.hpp"

namespace satake {

// Generators for a closed subgroup: exponentials of an algebra basis times a
// finite set of component representatives.
struct SubgroupGenerators {
    Eigen::MatrixXd algebra;            // frame coordinates, one column per generator
    std::vector<Eigen::MatrixXd> reps;  // group-level component representatives
};

struct ParabolicDatum {
    std::vector<int> subset;       // indices into RootDatum::simple
    std::vector<int> inside_pos;   // positive roots supported inside the subset
    std::vector<int> outside_pos;  // the rest

    Eigen::MatrixXd a_I;     // common kernel of the subset inside a
    Eigen::MatrixXd m_I;     // theta-stable Levi part complementary to a_I
    Eigen::MatrixXd n_I;     // root spaces with support outside the subset
    Eigen::MatrixXd nbar_I;  // theta of n_I
    Eigen::MatrixXd k_I;     // m_I intersected with k
    Eigen::MatrixXd h_I;     // k_I + nbar_I
    Eigen::MatrixXd p_I;     // m_I + a_I + n_I

    SubgroupGenerators gen_a, gen_k, gen_nbar;
};

ParabolicDatum parabolic_datum(const Group& g, const RootDatum& rd, const std::vector<int>& subset,
                               const Tolerances& tol = {});

// {x : [x, span] stays inside span}.
Eigen::MatrixXd normalizer_subalgebra(const Group& g, const Eigen::MatrixXd& span,
                                      const Tolerances& tol = {});

// Scaled power test on ad(x).
bool is_ad_nilpotent(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol = {});

}  // namespace satake
