#pragma once

#include <satake/errors.hpp>
#include <satake/tolerances.hpp>

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace satake {

/// A real reductive matrix group presented by Cartan data for its Lie
/// algebra: a basis of g inside n x n matrices, the Cartan involution theta
/// and the invariant form B in basis coefficients, a maximal abelian
/// subspace a of the -1 eigenspace of theta, and a finite list of
/// representatives for the components of the compact centralizer M of a.
///
/// The built-in backends are the groups SL(n,R) with theta(X) = -X^T, the
/// trace form B(X,Y) = tr(XY), a = traceless diagonals and K = SO(n).  Raw
/// Cartan data is accepted as well and validated numerically; group-level
/// operations (factorizations, membership, the Oshima space) stay restricted
/// to the SL backends.
struct Group {
    std::string name;
    bool sl_family = false;
    int n = 0;

    std::vector<Eigen::MatrixXd> basis;
    std::vector<Eigen::MatrixXd> a_basis;
    std::vector<Eigen::MatrixXd> m_reps;
    Eigen::MatrixXd theta_on_basis;  // dim x dim, action of theta on basis coefficients
    Eigen::MatrixXd form_on_basis;   // dim x dim, B(b_i, b_j)

    // Derived at build time.  Coordinates are taken w.r.t. an orthonormal
    // frame for the positive definite inner product <X,Y> = -B(X, theta Y),
    // in which ad(a) is symmetric and theta is orthogonal.
    Eigen::MatrixXd basis_stack;     // n^2 x dim, vectorized basis
    Eigen::MatrixXd chol;            // lower Cholesky factor of the Gram matrix
    Eigen::MatrixXd theta_coords;    // theta in frame coordinates (orthogonal)
    Eigen::MatrixXd a_coords_stack;  // dim x rank, frame coordinates of a_basis

    Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
    Eigen::Index rank_a() const { return static_cast<Eigen::Index>(a_basis.size()); }

    /// Basis coefficients of an algebra element (throws NotInGroup if X does
    /// not lie in g within tolerance).
    Eigen::VectorXd coefficients(const Eigen::MatrixXd& x, double tol = 1e-9) const;
    /// Frame coordinates of an algebra element.
    Eigen::VectorXd coords(const Eigen::MatrixXd& x, double tol = 1e-9) const;
    Eigen::MatrixXd from_coords(const Eigen::VectorXd& c) const;
    /// Coefficients w.r.t. a_basis (throws NotInA if X is not in a).
    Eigen::VectorXd a_coefficients(const Eigen::MatrixXd& x, double tol = 1e-9) const;

    bool in_algebra(const Eigen::MatrixXd& x, double tol = 1e-9) const;
    /// Group membership: |det g - 1| test for the SL backends, Unsupported
    /// for raw data.
    bool in_group(const Eigen::MatrixXd& g, double tol = 1e-9) const;

    Eigen::MatrixXd theta(const Eigen::MatrixXd& x) const;
    double form(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const;
    /// The positive definite pairing -B(x, theta y).
    double inner(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const;
};

/// Matrix of ad(z) acting on frame coordinates.
Eigen::MatrixXd ad_matrix(const Group& g, const Eigen::MatrixXd& z);

/// Build a named backend: "sl2r", "sl3r", ..., "sl9r".
Group build_group(const std::string& name, const Tolerances& tol = {});

/// Build from a GroupSpec: {"family":"sl","n":3} or
/// {"raw":{"n":..,"basis":[..],"theta_matrix":..,"form_matrix":..,"a_basis":[..]}}.
/// Matrices are row-major double arrays (nested row arrays also accepted).
Group build_group_from_spec(const std::string& json_text, const Tolerances& tol = {});

} // namespace satake
