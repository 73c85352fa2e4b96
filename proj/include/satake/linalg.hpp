#pragma once

#include <satake/errors.hpp>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <vector>

namespace satake::linalg {

/// Column-major vectorization of a matrix expression.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic>
vec(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> tmp = m;
    return Eigen::Map<Eigen::Vector<Scalar, Eigen::Dynamic>>(tmp.data(), tmp.size());
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
unvec(const Eigen::Vector<Scalar, Eigen::Dynamic>& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unvec: size mismatch");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rows, cols);
    Eigen::Map<Eigen::Vector<Scalar, Eigen::Dynamic>>(out.data(), out.size()) = v;
    return out;
}

/// Spectral norm.  Closed-form for 1x1, SVD otherwise.
template <typename Derived>
typename Derived::Scalar op_norm(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
    Eigen::JacobiSVD<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(m);
    return svd.singularValues()(0);
}

/// Orthonormal basis of the column span.  Columns whose singular value falls
/// below `rtol` times the largest are discarded; an all-zero input yields a
/// matrix with zero columns.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
orthonormal_columns(const Eigen::MatrixBase<Derived>& m, double rtol = 1e-8) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.cols() == 0) return Mat(m.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = rtol * (sv.size() ? static_cast<double>(sv(0)) : 0.0);
    Eigen::Index r = 0;
    while (r < sv.size() && static_cast<double>(sv(r)) > cutoff && sv(r) > Scalar(0)) ++r;
    return svd.matrixU().leftCols(r);
}

/// Orthonormal basis of the kernel of `m` (right null space).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
nullspace(const Eigen::MatrixBase<Derived>& m, double rtol = 1e-8) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (m.rows() == 0 || m.cols() == 0)
        return Mat::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = rtol * static_cast<double>(sv(0));
    Eigen::Index r = 0;
    while (r < sv.size() && static_cast<double>(sv(r)) > cutoff) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m, double rtol = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = rtol * static_cast<double>(sv(0));
    Eigen::Index r = 0;
    while (r < sv.size() && static_cast<double>(sv(r)) > cutoff) ++r;
    return r;
}

/// Intersection of two column spans, returned as orthonormal columns.
/// Computed from the kernel of [U | -V]: if U x = V y then U x lies in both.
template <typename DA, typename DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
subspace_intersection(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                      double rtol = 1e-8) {
    using Scalar = typename DA::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.rows() != b.rows()) throw DimensionMismatch("subspace_intersection: ambient mismatch");
    Mat ua = orthonormal_columns(a, rtol), ub = orthonormal_columns(b, rtol);
    if (ua.cols() == 0 || ub.cols() == 0) return Mat(a.rows(), 0);
    Mat stacked(a.rows(), ua.cols() + ub.cols());
    stacked << ua, -ub;
    Mat ker = nullspace(stacked, rtol);
    if (ker.cols() == 0) return Mat(a.rows(), 0);
    return orthonormal_columns(ua * ker.topRows(ua.cols()), rtol);
}

/// Distance from a vector to the span of the (orthonormal) columns of `q`.
template <typename DQ, typename DV>
double distance_to_span(const Eigen::MatrixBase<DQ>& q, const Eigen::MatrixBase<DV>& v) {
    if (q.cols() == 0) return v.norm();
    return (v - q * (q.transpose() * v)).norm();
}

/// Sine of the largest principal angle between two subspaces of equal
/// dimension, given by orthonormal columns.  Computed as the spectral norm of
/// the projection of one onto the complement of the other, which stays
/// accurate for small angles.
template <typename DU, typename DV>
double principal_angle_sin(const Eigen::MatrixBase<DU>& u, const Eigen::MatrixBase<DV>& v) {
    using Mat = Eigen::Matrix<typename DU::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (u.rows() != v.rows()) throw DimensionMismatch("principal_angle_sin: ambient mismatch");
    if (u.cols() != v.cols()) throw DimensionMismatch("principal_angle_sin: dimension mismatch");
    if (u.cols() == 0) return 0.0;
    Mat rest = v - u * (u.transpose() * v);
    return op_norm(rest);
}

/// Lexicographic positivity of a coordinate vector: the first entry larger
/// than `tol` in absolute value must be positive.  A vector with no such
/// entry is neither positive nor negative.
template <typename Derived>
int lex_sign(const Eigen::MatrixBase<Derived>& v, double tol = 1e-8) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(static_cast<double>(v(i))) > tol) return v(i) > 0 ? 1 : -1;
    }
    return 0;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
expm(const Eigen::MatrixBase<Derived>& m) {
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> x = m;
    return x.exp();
}

/// Concatenate blocks side by side; every block must have `rows` rows.
inline Eigen::MatrixXd hstack(const std::vector<Eigen::MatrixXd>& blocks, Eigen::Index rows) {
    Eigen::Index cols = 0;
    for (const auto& b : blocks) cols += b.cols();
    Eigen::MatrixXd out(rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.middleCols(at, b.cols()) = b;
        at += b.cols();
    }
    return out;
}

/// Least squares solution with a residual report.
template <typename DA, typename DB>
Eigen::Vector<typename DA::Scalar, Eigen::Dynamic>
lsq(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, double* residual = nullptr) {
    using Vec = Eigen::Vector<typename DA::Scalar, Eigen::Dynamic>;
    Eigen::CompleteOrthogonalDecomposition<Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic>>
        cod(a);
    Vec x = cod.solve(b);
    if (residual) *residual = (a * x - b).norm();
    return x;
}

} // namespace satake::linalg
