#include "satake/fell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

namespace {

std::string quantize_key(const Eigen::MatrixXd& m, double cell) {
    std::string key;
    key.reserve(static_cast<std::size_t>(m.size()) * 8);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            long long q = std::llround(m(i, j) / cell);
            key.append(reinterpret_cast<const char*>(&q), sizeof(q));
        }
    return key;
}

void window_and_dedup(std::vector<Eigen::MatrixXd>& points, double radius, double eps) {
    std::vector<Eigen::MatrixXd> kept;
    std::unordered_set<std::string> seen;
    double cell = 0.5 * eps / static_cast<double>(points.empty() ? 1 : points.front().rows());
    for (const auto& p : points) {
        if (linalg::op_norm(p) > radius) continue;
        if (seen.insert(quantize_key(p, cell)).second) kept.push_back(p);
    }
    points = std::move(kept);
}

// Exact operator norm of the difference, sized for 2x2 and 3x3 blocks.
double op_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd d = a - b;
    Eigen::MatrixXd g = d.transpose() * d;
    if (g.rows() <= 3) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
        Eigen::Matrix3d g3 = Eigen::Matrix3d::Zero();
        g3.topLeftCorner(g.rows(), g.cols()) = g;
        es.computeDirect(g3);
        return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

// One directed side: sup over inner points of x of the distance to y.
double directed_hausdorff(const std::vector<Eigen::MatrixXd>& xs,
                          const std::vector<Eigen::MatrixXd>& ys, double inner_radius) {
    const Eigen::Index n = xs.front().rows();
    const double root_n = std::sqrt(static_cast<double>(n));
    const Eigen::Index nx = static_cast<Eigen::Index>(xs.size());
    const Eigen::Index ny = static_cast<Eigen::Index>(ys.size());

    Eigen::MatrixXd ymat(ny, n * n);
    Eigen::VectorXd ynorm2(ny);
    for (Eigen::Index i = 0; i < ny; ++i) {
        ymat.row(i) = linalg::vec(ys[static_cast<std::size_t>(i)]).transpose();
        ynorm2[i] = ymat.row(i).squaredNorm();
    }

    double sup = 0.0;
    const Eigen::Index chunk = 256;
    for (Eigen::Index lo = 0; lo < nx; lo += chunk) {
        Eigen::Index m = std::min(chunk, nx - lo);
        Eigen::MatrixXd xmat(m, n * n);
        std::vector<Eigen::Index> rows;
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto& x = xs[static_cast<std::size_t>(lo + i)];
            if (linalg::op_norm(x) > inner_radius) continue;
            xmat.row(static_cast<Eigen::Index>(rows.size())) = linalg::vec(x).transpose();
            rows.push_back(lo + i);
        }
        if (rows.empty()) continue;
        Eigen::Index mr = static_cast<Eigen::Index>(rows.size());
        Eigen::MatrixXd cross = xmat.topRows(mr) * ymat.transpose();
        for (Eigen::Index i = 0; i < mr; ++i) {
            double xn2 = xmat.row(i).squaredNorm();
            Eigen::VectorXd frob2 =
                (ynorm2.array() + xn2 - 2.0 * cross.row(i).transpose().array()).max(0.0);
            Eigen::Index jbest;
            frob2.minCoeff(&jbest);
            const auto& x = xs[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])];
            double best = op_dist(x, ys[static_cast<std::size_t>(jbest)]);
            for (Eigen::Index j = 0; j < ny; ++j) {
                if (j == jbest) continue;
                if (std::sqrt(frob2[j]) >= root_n * best) continue;
                best = std::min(best, op_dist(x, ys[static_cast<std::size_t>(j)]));
            }
            sup = std::max(sup, best);
        }
    }
    return sup;
}

}  // namespace

SampledClosedSet sample_subgroup(const Group& g, const SubgroupGenerators& gen, double radius,
                                 double eps, std::uint64_t seed, const SampleOptions& opts) {
    if (!(radius > 0.0) || !(eps > 0.0)) throw EmptySample("radius and eps must be positive");

    std::vector<Eigen::MatrixXd> dirs;
    for (Eigen::Index j = 0; j < gen.algebra.cols(); ++j) {
        Eigen::MatrixXd x = g.from_coords(gen.algebra.col(j));
        double nrm = linalg::op_norm(x);
        if (nrm > 1e-14) dirs.push_back(x / nrm);
    }

    std::vector<Eigen::MatrixXd> pool{Eigen::MatrixXd::Identity(g.n, g.n)};

    const double cap = 2.0 * radius + 2.0 * std::numbers::pi;
    for (const auto& dir : dirs) {
        for (double sign : {1.0, -1.0}) {
            Eigen::MatrixXd step = linalg::expm(sign * opts.sweep_step * dir);
            Eigen::MatrixXd cur = Eigen::MatrixXd::Identity(g.n, g.n);
            for (double u = opts.sweep_step; u <= cap; u += opts.sweep_step) {
                cur = cur * step;
                pool.push_back(cur);
            }
        }
    }

    std::vector<Eigen::MatrixXd> alphabet;
    for (const auto& dir : dirs)
        for (double s : opts.grid)
            for (double sign : {1.0, -1.0}) alphabet.push_back(linalg::expm(sign * s * dir));
    std::vector<Eigen::MatrixXd> level{Eigen::MatrixXd::Identity(g.n, g.n)};
    for (int len = 1; len <= opts.word_len; ++len) {
        std::vector<Eigen::MatrixXd> next;
        next.reserve(level.size() * alphabet.size());
        for (const auto& w : level)
            for (const auto& a : alphabet) next.push_back(w * a);
        for (const auto& w : next) pool.push_back(w);
        level = std::move(next);
    }

    SampledClosedSet out;
    out.radius = radius;
    out.eps = eps;
    out.seed = seed;
    for (const auto& rep : gen.reps)
        for (const auto& p : pool) out.points.push_back(rep * p);
    window_and_dedup(out.points, radius, eps);
    if (out.points.empty() || !out.points.front().isIdentity(1e-12))
        throw EmptySample("window excludes the identity");
    return out;
}

SampledClosedSet translate_set(const SampledClosedSet& set, const Eigen::MatrixXd& g) {
    SampledClosedSet out = set;
    for (auto& p : out.points) p = g * p;
    window_and_dedup(out.points, out.radius, out.eps);
    if (out.points.empty()) throw EmptySample("translate left the window empty");
    return out;
}

double local_hausdorff(const SampledClosedSet& x, const SampledClosedSet& y) {
    if (std::abs(x.radius - y.radius) > 1e-9)
        throw IncompatibleWindows("windows have different radii");
    if (x.points.empty() || y.points.empty()) throw EmptySample("empty sample");
    double margin = 2.0 * std::max(x.eps, y.eps);
    double inner = x.radius - margin;
    return std::max(directed_hausdorff(x.points, y.points, inner),
                    directed_hausdorff(y.points, x.points, inner));
}

double grassmannian_distance(const Eigen::MatrixXd& v, const Eigen::MatrixXd& w) {
    Eigen::MatrixXd vo = linalg::orthonormal_columns(v);
    Eigen::MatrixXd wo = linalg::orthonormal_columns(w);
    return linalg::principal_angle_sin(vo, wo);
}

}  // namespace satake
