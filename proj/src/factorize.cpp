#include "satake/factorize.hpp"

#include <cmath>

#include "satake/errors.hpp"

namespace satake {

namespace {

constexpr double kCondFloor = 1e-13;

void check_group_element(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol) {
    if (!g.in_group(x, tol.fact)) throw NotInGroup("matrix is not in the group");
}

}  // namespace

namespace detail {

IwasawaKAN kan_matrix(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd Q = qr.householderQ();
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();

    Eigen::VectorXd diag = R.diagonal();
    double lo = diag.cwiseAbs().minCoeff(), hi = diag.cwiseAbs().maxCoeff();
    if (!(lo > kCondFloor * hi) || !std::isfinite(hi))
        throw NumericalBreakdown("triangular factor is numerically singular");

    for (Eigen::Index i = 0; i < n; ++i) {
        if (diag[i] < 0) {
            Q.col(i) = -Q.col(i);
            R.row(i) = -R.row(i);
        }
    }
    IwasawaKAN out;
    out.k = Q;
    out.a = R.diagonal().asDiagonal();
    out.n = out.a.diagonal().cwiseInverse().asDiagonal() * R;
    return out;
}

IwasawaNAK nak_matrix(const Eigen::MatrixXd& m) {
    IwasawaKAN rev = kan_matrix(m.inverse());
    IwasawaNAK out;
    out.n = rev.n.inverse();
    out.a = rev.a.diagonal().cwiseInverse().asDiagonal();
    out.k = rev.k.transpose();
    return out;
}

}  // namespace detail

IwasawaKAN factorize_kan(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol) {
    check_group_element(g, x, tol);
    return detail::kan_matrix(x);
}

IwasawaNAK factorize_nak(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol) {
    check_group_element(g, x, tol);
    return detail::nak_matrix(x);
}

CartanKAK factorize_kak(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol) {
    check_group_element(g, x, tol);
    const Eigen::Index n = x.rows();

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (!(sv[n - 1] > kCondFloor * sv[0]) || !std::isfinite(sv[0]))
        throw NumericalBreakdown("singular values are numerically degenerate");

    // Reverse to ascending order so the diagonal lands in the closure of the
    // negative chamber.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) J(i, n - 1 - i) = 1.0;

    CartanKAK out;
    out.k1 = svd.matrixU() * J;
    out.a = (J * sv.asDiagonal() * J).eval();
    out.k2 = J * svd.matrixV().transpose();
    if (out.k1.determinant() < 0) {
        out.k1.col(0) = -out.k1.col(0);
        out.k2.row(0) = -out.k2.row(0);
    }
    return out;
}

}  // namespace satake
