#include "satake/parabolic.hpp"

#include <algorithm>
#include <cmath>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

using linalg::hstack;

ParabolicDatum parabolic_datum(const Group& g, const RootDatum& rd, const std::vector<int>& subset,
                               const Tolerances& tol) {
    const Eigen::Index d = g.dim();
    const Eigen::Index r = g.rank_a();
    const int s = static_cast<int>(rd.simple.size());

    ParabolicDatum pd;
    std::vector<char> in(static_cast<std::size_t>(s), 0);
    for (int j : subset) {
        if (j < 0 || j >= s) throw UnknownRoot("simple-root index out of range");
        in[static_cast<std::size_t>(j)] = 1;
    }
    for (int j = 0; j < s; ++j)
        if (in[static_cast<std::size_t>(j)]) pd.subset.push_back(j);

    for (int i = 0; i < static_cast<int>(rd.positive.size()); ++i) {
        bool inside = true;
        for (int j = 0; j < s; ++j)
            if (rd.coeff(i, j) != 0 && !in[static_cast<std::size_t>(j)]) inside = false;
        (inside ? pd.inside_pos : pd.outside_pos).push_back(i);
    }

    Eigen::MatrixXd constraints(static_cast<Eigen::Index>(pd.subset.size()), r);
    for (std::size_t row = 0; row < pd.subset.size(); ++row)
        constraints.row(static_cast<Eigen::Index>(row)) =
            rd.simple[static_cast<std::size_t>(pd.subset[row])].on_a.transpose();
    Eigen::MatrixXd ker = linalg::nullspace(constraints, tol.rank);
    pd.a_I = linalg::orthonormal_columns(g.a_coords_stack * ker, tol.rank);

    // Complement of a_I inside a.  When a_I already fills a the projection
    // residual is pure rounding noise, so short-circuit on dimensions instead
    // of trusting a relative singular-value cutoff on a near-zero matrix.
    Eigen::MatrixXd a_perp(d, 0);
    if (pd.a_I.cols() == 0)
        a_perp = rd.a_space;
    else if (pd.a_I.cols() < r)
        a_perp = linalg::orthonormal_columns(
            rd.a_space - pd.a_I * (pd.a_I.transpose() * rd.a_space), tol.rank);
    if (pd.a_I.cols() + a_perp.cols() != r)
        throw InvalidCartanData("subset kernel does not split a");

    std::vector<Eigen::MatrixXd> levi{rd.m_space, a_perp};
    for (int i : pd.inside_pos) {
        const Eigen::MatrixXd& sp = rd.positive[static_cast<std::size_t>(i)].space;
        levi.push_back(sp);
        levi.push_back(linalg::orthonormal_columns(g.theta_coords * sp, tol.rank));
    }
    pd.m_I = hstack(levi, d);

    std::vector<Eigen::MatrixXd> rad;
    for (int i : pd.outside_pos) rad.push_back(rd.positive[static_cast<std::size_t>(i)].space);
    pd.n_I = hstack(rad, d);
    pd.nbar_I = linalg::orthonormal_columns(g.theta_coords * pd.n_I, tol.rank);

    pd.k_I = linalg::subspace_intersection(pd.m_I, rd.k_space, tol.rank);
    pd.h_I = hstack({pd.k_I, pd.nbar_I}, d);
    pd.p_I = hstack({pd.m_I, pd.a_I, pd.n_I}, d);

    if (pd.nbar_I.cols() != pd.n_I.cols() || pd.p_I.cols() + pd.nbar_I.cols() != d)
        throw InvalidCartanData("parabolic pieces do not fill the algebra");

    pd.gen_a = {pd.a_I, {Eigen::MatrixXd::Identity(g.n, g.n)}};
    pd.gen_k = {pd.k_I, g.m_reps};
    pd.gen_nbar = {pd.nbar_I, {Eigen::MatrixXd::Identity(g.n, g.n)}};
    return pd;
}

Eigen::MatrixXd normalizer_subalgebra(const Group& g, const Eigen::MatrixXd& span,
                                      const Tolerances& tol) {
    const Eigen::Index d = g.dim();
    Eigen::MatrixXd P = linalg::orthonormal_columns(span, tol.rank);
    if (P.cols() == 0) return Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd off = Eigen::MatrixXd::Identity(d, d) - P * P.transpose();
    Eigen::MatrixXd stacked(P.cols() * d, d);
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
        Eigen::MatrixXd ad_vj = ad_matrix(g, g.from_coords(P.col(j)));
        stacked.middleRows(j * d, d) = off * ad_vj;
    }
    return linalg::nullspace(stacked, tol.rank);
}

bool is_ad_nilpotent(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol) {
    Eigen::MatrixXd ad = ad_matrix(g, x);
    const Eigen::Index d = g.dim();
    double nrm = ad.norm();
    if (nrm <= tol.alg) return true;
    Eigen::MatrixXd m = ad / nrm;
    Eigen::MatrixXd p = m;
    double logscale = 0.0;
    for (Eigen::Index i = 1; i < d; ++i) {
        p = p * m;
        double s = p.norm();
        if (s == 0.0) return true;
        p /= s;
        logscale += std::log(s);
    }
    return logscale <= std::log(tol.alg);
}

}  // namespace satake
