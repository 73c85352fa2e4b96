#pragma once

#include <vector>

#include <Eigen/Dense>

#include "satake/groupoid.hpp"

namespace satake {

// An arrow of the scaling groupoid on R^p: m2 = a . m componentwise, a > 0.
struct ModelBArrow {
    Eigen::VectorXd m, m2, a;
};

ModelBArrow model_arrow(const Eigen::VectorXd& m, const Eigen::VectorXd& a);
ModelBArrow model_unit(const Eigen::VectorXd& m);
ModelBArrow model_inverse(const ModelBArrow& b);
ModelBArrow model_compose(const ModelBArrow& after, const ModelBArrow& first);

// Scaling factor of the arrow carrying m to m2 with normal frame map T on the
// shared hyperplanes, in coordinate order: a_j = T_j where m_j = 0, m2_j / m_j
// elsewhere.
Eigen::VectorXd a_of_T(const Eigen::VectorXd& m2, const Eigen::VectorXd& T,
                       const Eigen::VectorXd& m);

// Chart arrow to model arrow: coordinates keep only the parameters, the
// scaling factor is the weight vector of a.
ModelBArrow oshima_to_b(const Group& g, const RootDatum& rd, const ChartArrow& w,
                        const Tolerances& tol = {});

// A word rep . exp(Y_1) ... exp(Y_k) with letters given by coefficients over a
// deformed-basis frame.
struct HWord {
    int rep = 0;
    std::vector<Eigen::VectorXd> letters;
};

Eigen::MatrixXd evaluate_word(const Group& g, const DeformedBasis& basis, const HWord& word);

// d t'_alpha / d t_alpha of the chart action of gamma at [[e, t0]], central
// differences with a Richardson fallback.
double normal_derivative(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& gamma,
                         const Eigen::VectorXd& t0, int alpha, const Tolerances& tol = {});

}  // namespace satake
