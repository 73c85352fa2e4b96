#pragma once

// Reference implementations used to cross-check the library.  Everything here
// is deliberately naive and kept independent of the code under test: plain
// Gram-Schmidt instead of Householder, trace powers instead of ad-power
// iteration, quadratic-time loops instead of blocked ones.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct KAN {
    Eigen::MatrixXd k, a, n;
};

// Classical Gram-Schmidt on the columns: m = Q R with R upper triangular and
// positive diagonal, split as k = Q, a = diag(R), n = a^{-1} R.
inline KAN kan_gram_schmidt(const Eigen::MatrixXd& m) {
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXd v = m.col(j);
        for (Eigen::Index i = 0; i < j; ++i) {
            r(i, j) = q.col(i).dot(m.col(j));
            v -= r(i, j) * q.col(i);
        }
        // One reorthogonalization pass keeps the oracle honest near loss of
        // orthogonality.
        for (Eigen::Index i = 0; i < j; ++i) {
            const double c = q.col(i).dot(v);
            r(i, j) += c;
            v -= c * q.col(i);
        }
        r(j, j) = v.norm();
        q.col(j) = v / r(j, j);
    }
    KAN out;
    out.k = q;
    out.a = Eigen::MatrixXd(r.diagonal().asDiagonal());
    out.n = out.a.inverse() * r;
    return out;
}

struct NAK {
    Eigen::MatrixXd n, a, k;
};

// m = N A K from the KAN factorization of the inverse.
inline NAK nak_from_inverse(const Eigen::MatrixXd& m) {
    const KAN inv = kan_gram_schmidt(m.inverse());
    NAK out;
    out.n = inv.n.inverse();
    out.a = inv.a.inverse();
    out.k = inv.k.transpose();
    return out;
}

// A matrix in sl(n) is nilpotent iff every power trace through n vanishes.
inline bool nilpotent_by_traces(const Eigen::MatrixXd& x, double tol = 1e-8) {
    const double scale = std::max(1.0, x.norm());
    Eigen::MatrixXd p = x;
    for (Eigen::Index k = 1; k <= x.rows(); ++k) {
        if (std::abs(p.trace()) > tol * std::pow(scale, static_cast<double>(k))) return false;
        if (k < x.rows()) p = p * x;
    }
    return true;
}

// Textbook Moebius action in inhomogeneous coordinates; den == 0 encodes
// infinity on both sides.
struct MoebiusValue {
    std::complex<double> num, den;
};

inline MoebiusValue moebius_reference(const Eigen::MatrixXd& g, std::complex<double> z,
                                      bool z_infinite) {
    MoebiusValue out;
    if (z_infinite) {
        out.num = g(0, 0);
        out.den = g(1, 0);
    } else {
        out.num = g(0, 0) * z + g(0, 1);
        out.den = g(1, 0) * z + g(1, 1);
    }
    return out;
}

inline double op_norm_naive(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

// Symmetric windowed Hausdorff distance, quadratic loops: points within
// 2*max(eps) of the window boundary are matched against but never contribute
// to the supremum.
inline double hausdorff_naive(const std::vector<Eigen::MatrixXd>& xs,
                              const std::vector<Eigen::MatrixXd>& ys, double radius, double eps) {
    const double inner = radius - 2.0 * eps;
    const auto directed = [&](const std::vector<Eigen::MatrixXd>& from,
                              const std::vector<Eigen::MatrixXd>& to) {
        double sup = 0.0;
        for (const auto& x : from) {
            if (op_norm_naive(x) > inner) continue;
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : to) best = std::min(best, op_norm_naive(x - y));
            sup = std::max(sup, best);
        }
        return sup;
    };
    return std::max(directed(xs, ys), directed(ys, xs));
}

// Cartan integers 2<ai,aj>/<aj,aj> of the simple restricted roots, computed
// from their values on a basis of a and the trace-form Gram matrix of that
// basis (the dual metric is the inverse Gram).
inline Eigen::MatrixXd cartan_matrix(const std::vector<Eigen::MatrixXd>& a_basis,
                                     const std::vector<Eigen::VectorXd>& simple_on_a) {
    const Eigen::Index r = static_cast<Eigen::Index>(a_basis.size());
    Eigen::MatrixXd gram(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
            gram(i, j) = (a_basis[static_cast<std::size_t>(i)] * a_basis[static_cast<std::size_t>(j)])
                             .trace();
    const Eigen::MatrixXd dual = gram.inverse();
    const Eigen::Index s = static_cast<Eigen::Index>(simple_on_a.size());
    Eigen::MatrixXd cartan(s, s);
    for (Eigen::Index i = 0; i < s; ++i)
        for (Eigen::Index j = 0; j < s; ++j) {
            const double ij = simple_on_a[static_cast<std::size_t>(i)].transpose() * dual *
                              simple_on_a[static_cast<std::size_t>(j)];
            const double jj = simple_on_a[static_cast<std::size_t>(j)].transpose() * dual *
                              simple_on_a[static_cast<std::size_t>(j)];
            cartan(i, j) = 2.0 * ij / jj;
        }
    return cartan;
}

// The one-parameter family of closed subgroups of SL(2,R) written out by
// hand: every element has the shape [[c, t^2 s], [-s, c]] with det = 1 (the
// sign component is absorbed by (c, s) -> (-c, -s)).
inline bool sl2_deformed_member(const Eigen::MatrixXd& m, double t, double tol = 1e-9) {
    if (m.rows() != 2 || m.cols() != 2) return false;
    return std::abs(m(0, 0) - m(1, 1)) <= tol && std::abs(m(0, 1) + t * t * m(1, 0)) <= tol &&
           std::abs(m.determinant() - 1.0) <= tol;
}

inline double central_difference(const std::function<double(double)>& f, double x0, double h) {
    return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
}

}  // namespace oracle
