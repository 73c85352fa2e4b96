#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "satake/degeneration.hpp"

namespace satake {

struct SampleOptions {
    int word_len = 3;
    std::vector<double> grid{0.25, 0.5, 1.0};
    double sweep_step = 0.25;
};

struct SampledClosedSet {
    double radius = 10.0;
    double eps = 0.05;
    std::uint64_t seed = 42;
    std::vector<Eigen::MatrixXd> points;
};

// Deterministic net: identity, one-parameter sweeps along each generator, and
// short words over a fixed step grid, each multiplied by the component
// representatives, truncated to the operator-norm ball of the given radius and
// deduplicated at resolution eps/2.
SampledClosedSet sample_subgroup(const Group& g, const SubgroupGenerators& gen, double radius,
                                 double eps, std::uint64_t seed, const SampleOptions& opts = {});

// Left translate, re-windowed and re-deduplicated.
SampledClosedSet translate_set(const SampledClosedSet& set, const Eigen::MatrixXd& g);

// Symmetric Hausdorff distance in operator norm.  Points within 2*eps of the
// window boundary are matched against but do not contribute to the supremum,
// which keeps the value stable under the truncation.
double local_hausdorff(const SampledClosedSet& x, const SampledClosedSet& y);

// Largest principal-angle sine between two subspaces of equal dimension.
double grassmannian_distance(const Eigen::MatrixXd& v, const Eigen::MatrixXd& w);

}  // namespace satake
