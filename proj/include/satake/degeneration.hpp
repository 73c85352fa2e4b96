#pragma once

#include <vector>

#include <Eigen/Dense>

#include "satake/factorize.hpp"
#include "satake/parabolic.hpp"

namespace satake {

// prod_alpha t_alpha^(2 n_{gamma,alpha}) with the convention 0^0 = 1.
double t_pow_2gamma(const RootDatum& rd, int pos_index, const Eigen::VectorXd& t);

// {alpha : t_alpha != 0}, exact comparison.
std::vector<int> support(const Eigen::VectorXd& t);

struct DeformedVector {
    Eigen::VectorXd coords;      // t^{2 gamma} x + theta x at the current t
    int pos_root = -1;           // index into RootDatum::positive, -1 for the m-part
    Eigen::VectorXd x, theta_x;  // frame coordinates of the two halves
};

struct DeformedBasis {
    Eigen::VectorXd t;
    std::vector<DeformedVector> vecs;

    Eigen::MatrixXd span() const;
};

// Basis {m-part} + {t^{2 gamma} X + theta X : X a root-space basis vector}.
DeformedBasis h_t_basis(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t);

// The same section of the family evaluated at another parameter.
DeformedBasis reevaluate(const RootDatum& rd, const DeformedBasis& basis, const Eigen::VectorXd& t);

struct KNSplit {
    Eigen::MatrixXd k_part;  // m-part plus the deformed vectors with nonzero weight
    Eigen::MatrixXd n_part;  // positive root vectors whose weight vanished
};

KNSplit split_k_n(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t);

// log a, with the check that it lands in a.
Eigen::MatrixXd a_log(const Group& g, const Eigen::MatrixXd& a, const Tolerances& tol = {});

// (a^alpha)_alpha over the simple roots.
Eigen::VectorXd simple_weights(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& a,
                               const Tolerances& tol = {});

// (a.t)_alpha = a^alpha t_alpha.
Eigen::VectorXd a_action(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& a,
                         const Eigen::VectorXd& t, const Tolerances& tol = {});

// a in A with a^alpha = |t_alpha| for alpha in the support of t, minimum-norm
// log on the rest.
Eigen::MatrixXd a_t_section(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t,
                            const Tolerances& tol = {});

struct NAH {
    Eigen::MatrixXd n, a, h;
};

// x = n a h with n unipotent upper, a in A, h in the deformed subgroup at t.
NAH nah_factorize(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& x,
                  const Eigen::VectorXd& t, const Tolerances& tol = {});

// True iff conj^-1 x conj lies in the deformed subgroup at t.  An empty conj
// means the identity.  The raw residual of the defining conditions is written
// to *residual when given.
bool subgroup_membership(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& x,
                         const Eigen::VectorXd& t, const Eigen::MatrixXd& conj = {},
                         const Tolerances& tol = {}, double* residual = nullptr);

// Same test with the subset of simple roots standing in for its indicator t.
bool subgroup_membership(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& x,
                         const std::vector<int>& subset, const Eigen::MatrixXd& conj = {},
                         const Tolerances& tol = {}, double* residual = nullptr);

// Generators of the deformed subgroup: component representatives times
// exponentials of the deformed basis.
SubgroupGenerators h_t_generators(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t);

SubgroupGenerators conjugate_generators(const Group& g, const SubgroupGenerators& gen,
                                        const Eigen::MatrixXd& c);

namespace detail {

// Diagonal position p of each simple root of sl(n), acting as e_p - e_{p+1}.
std::vector<int> sl_simple_positions(const Group& g, const RootDatum& rd);

// Consecutive diagonal block sizes after merging positions across the subset.
std::vector<int> block_sizes_for(const Group& g, const RootDatum& rd,
                                 const std::vector<int>& subset);

struct BlockUDL {
    Eigen::MatrixXd u, d, l;
};

// m = u d l with u unit block-upper, d block-diagonal, l unit block-lower;
// NotInCell when a trailing pivot block is singular.
BlockUDL block_udl(const Eigen::MatrixXd& m, const std::vector<int>& sizes);

}  // namespace detail

}  // namespace satake
