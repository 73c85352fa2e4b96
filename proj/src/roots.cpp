#include "satake/roots.hpp"

#include <algorithm>
#include <cmath>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

namespace {

struct Cluster {
    Eigen::MatrixXd span;     // orthonormal columns, frame coordinates
    Eigen::VectorXd weight;   // eigenvalue of ad(a_k) on the span, per k
};

// Split the columns of an eigenbasis into groups of nearby eigenvalues.
std::vector<std::pair<double, Eigen::MatrixXd>> eigen_clusters(const Eigen::MatrixXd& sym,
                                                               double gap) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXd& V = es.eigenvectors();
    std::vector<std::pair<double, Eigen::MatrixXd>> out;
    Eigen::Index lo = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (i + 1 < ev.size() && ev[i + 1] - ev[i] <= gap) continue;
        Eigen::Index m = i + 1 - lo;
        out.push_back({ev.segment(lo, m).mean(), V.middleCols(lo, m)});
        lo = i + 1;
    }
    return out;
}

using linalg::hstack;

bool lex_less_desc(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double tol) {
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        if (std::abs(x[k] - y[k]) <= tol) continue;
        return x[k] > y[k];
    }
    return false;
}

}  // namespace

double root_value(const Group& g, const RestrictedRoot& gamma, const Eigen::MatrixXd& x,
                  const Tolerances& tol) {
    return gamma.on_a.dot(g.a_coefficients(x, tol.fact));
}

RootDatum restricted_root_decomposition(const Group& g, const Tolerances& tol) {
    const Eigen::Index d = g.dim();
    const Eigen::Index r = g.rank_a();

    std::vector<Eigen::MatrixXd> ads(r);
    double scale = 1.0;
    for (Eigen::Index k = 0; k < r; ++k) {
        Eigen::MatrixXd A = ad_matrix(g, g.a_basis[static_cast<std::size_t>(k)]);
        if ((A - A.transpose()).norm() > 1e4 * tol.alg * std::max(1.0, A.norm()))
            throw NonSemisimpleAction("ad(a) is not self-adjoint in the frame metric");
        ads[k] = 0.5 * (A + A.transpose());
        scale = std::max(scale, ads[k].norm());
    }

    // Refine one cluster at a time across all of a; ad(a) commutes on a, so
    // eigenspaces of earlier generators are invariant for later ones.
    std::vector<Cluster> clusters{{Eigen::MatrixXd::Identity(d, d), Eigen::VectorXd(r)}};
    for (Eigen::Index k = 0; k < r; ++k) {
        std::vector<Cluster> next;
        for (const auto& c : clusters) {
            Eigen::MatrixXd restricted = c.span.transpose() * ads[k] * c.span;
            restricted = 0.5 * (restricted + restricted.transpose());
            for (auto& [val, V] : eigen_clusters(restricted, tol.rank * scale)) {
                Cluster sub{c.span * V, c.weight};
                sub.weight[k] = val;
                next.push_back(std::move(sub));
            }
        }
        clusters = std::move(next);
    }

    // ad(a) must act as the recorded scalar on every cluster.
    for (const auto& c : clusters) {
        for (Eigen::Index k = 0; k < r; ++k) {
            double res = (ads[k] * c.span - c.weight[k] * c.span).norm();
            if (res > 1e3 * tol.rank * scale)
                throw NonSemisimpleAction("ad(a) is not simultaneously diagonalizable");
        }
    }

    const double wtol = 10.0 * tol.rank * scale;

    RootDatum rd;
    Eigen::MatrixXd theta_sym = 0.5 * (g.theta_coords + g.theta_coords.transpose());
    std::vector<Eigen::MatrixXd> kcols, pcols;
    for (auto& [val, V] : eigen_clusters(theta_sym, 0.5))
        (val > 0 ? kcols : pcols).push_back(V);
    rd.k_space = hstack(kcols, d);
    rd.p_space = hstack(pcols, d);
    if (rd.k_space.cols() + rd.p_space.cols() != d)
        throw InvalidCartanData("theta eigenvalues are not +-1");

    rd.a_space = linalg::orthonormal_columns(g.a_coords_stack);

    std::vector<Eigen::MatrixXd> zero, pos_spans, neg_spans;
    std::vector<Cluster> pos, neg;
    for (auto& c : clusters) {
        int s = linalg::lex_sign(c.weight, wtol);
        if (s == 0)
            zero.push_back(c.span);
        else if (s > 0)
            pos.push_back(c);
        else
            neg.push_back(c);
    }
    rd.g0_space = hstack(zero, d);
    rd.m_space = linalg::subspace_intersection(rd.g0_space, rd.k_space, tol.rank);

    Eigen::MatrixXd g0_p = linalg::subspace_intersection(rd.g0_space, rd.p_space, tol.rank);
    if (g0_p.cols() != r ||
        (g0_p - rd.a_space * (rd.a_space.transpose() * g0_p)).norm() > 1e3 * tol.rank)
        throw InvalidCartanData("a is not maximal abelian in p");
    if (rd.m_space.cols() + r != rd.g0_space.cols())
        throw InvalidCartanData("centralizer of a does not split as m + a");

    // theta pairs each positive root space with the opposite weight.
    for (const auto& cp : pos) {
        bool matched = false;
        for (const auto& cn : neg) {
            if ((cp.weight + cn.weight).norm() > wtol) continue;
            if (cn.span.cols() != cp.span.cols() ||
                linalg::principal_angle_sin(linalg::orthonormal_columns(theta_sym * cp.span),
                                            cn.span) > 1e3 * tol.rank)
                throw InvalidCartanData("root spaces are not theta-paired");
            matched = true;
            break;
        }
        if (!matched) throw InvalidCartanData("positive root without a negative partner");
    }

    for (const auto& c : pos) rd.positive.push_back({c.weight, c.span});
    for (const auto& c : neg) neg_spans.push_back(c.span);

    // Simple roots: positives that are not a sum of two positives.
    std::vector<const RestrictedRoot*> simples;
    for (const auto& gamma : rd.positive) {
        bool decomposable = false;
        for (const auto& b1 : rd.positive)
            for (const auto& b2 : rd.positive)
                if ((b1.on_a + b2.on_a - gamma.on_a).norm() <= wtol) decomposable = true;
        if (!decomposable) simples.push_back(&gamma);
    }
    std::sort(simples.begin(), simples.end(),
              [&](const RestrictedRoot* x, const RestrictedRoot* y) {
                  return lex_less_desc(x->on_a, y->on_a, wtol);
              });
    for (const auto* s : simples) rd.simple.push_back(*s);

    // Integer coordinates of each positive root in the simple basis.
    Eigen::MatrixXd S(r, static_cast<Eigen::Index>(rd.simple.size()));
    for (Eigen::Index j = 0; j < S.cols(); ++j)
        S.col(j) = rd.simple[static_cast<std::size_t>(j)].on_a;
    rd.coeff.resize(static_cast<Eigen::Index>(rd.positive.size()), S.cols());
    for (std::size_t i = 0; i < rd.positive.size(); ++i) {
        double res = 0.0;
        Eigen::VectorXd c = linalg::lsq(S, rd.positive[i].on_a, &res);
        if (res > tol.integrality * std::max(1.0, scale))
            throw InvalidCartanData("positive root outside the simple-root lattice");
        for (Eigen::Index j = 0; j < c.size(); ++j) {
            double n = std::round(c[j]);
            if (std::abs(c[j] - n) > tol.integrality || n < -0.5)
                throw InvalidCartanData("non-integral simple-root coordinate");
            rd.coeff(static_cast<Eigen::Index>(i), j) = static_cast<int>(n);
        }
    }

    // Height-major order keeps the simple roots first.
    std::vector<Eigen::Index> order(rd.positive.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
    std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        int hx = rd.coeff.row(x).sum(), hy = rd.coeff.row(y).sum();
        if (hx != hy) return hx < hy;
        return lex_less_desc(rd.positive[static_cast<std::size_t>(x)].on_a,
                             rd.positive[static_cast<std::size_t>(y)].on_a, wtol);
    });
    std::vector<RestrictedRoot> sorted;
    Eigen::MatrixXi csorted(rd.coeff.rows(), rd.coeff.cols());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.push_back(rd.positive[static_cast<std::size_t>(order[i])]);
        csorted.row(static_cast<Eigen::Index>(i)) = rd.coeff.row(order[i]);
    }
    rd.positive = std::move(sorted);
    rd.coeff = std::move(csorted);

    for (const auto& gamma : rd.positive) pos_spans.push_back(gamma.space);
    rd.n_space = hstack(pos_spans, d);
    rd.nbar_space = hstack(neg_spans, d);
    if (rd.n_space.cols() != rd.nbar_space.cols())
        throw InvalidCartanData("positive and negative spaces differ in dimension");

    return rd;
}

}  // namespace satake
