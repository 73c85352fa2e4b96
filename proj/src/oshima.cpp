#include "satake/oshima.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "satake/errors.hpp"
#include "satake/factorize.hpp"
#include "satake/linalg.hpp"

namespace satake {

OshimaPoint oshima_point(const Eigen::MatrixXd& g, const Eigen::VectorXd& t) {
    return OshimaPoint{g, t, std::nullopt};
}

OshimaPoint act(const Eigen::MatrixXd& gamma, const OshimaPoint& p) {
    if (gamma.rows() != p.g.rows() || gamma.cols() != p.g.rows())
        throw DimensionMismatch("acting matrix has the wrong shape");
    return OshimaPoint{gamma * p.g, p.t, std::nullopt};
}

std::optional<ChartCoords> try_canonicalize(const Group& g, const RootDatum& rd,
                                            const OshimaPoint& p, const Tolerances& tol) {
    NAH nah;
    try {
        nah = nah_factorize(g, rd, p.g, p.t, tol);
    } catch (const NotInCell&) {
        return std::nullopt;
    }
    return ChartCoords{nah.n, a_action(g, rd, nah.a, p.t, tol)};
}

ChartCoords canonicalize(const Group& g, const RootDatum& rd, const OshimaPoint& p,
                         const Tolerances& tol) {
    auto c = try_canonicalize(g, rd, p, tol);
    if (!c) throw NotInChart("point lies outside the big cell");
    return *c;
}

std::vector<Eigen::MatrixXd> chart_atlas(const Group& g) {
    const Eigen::Index n = g.n;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Eigen::MatrixXd> atlas;
    do {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) w(perm[static_cast<std::size_t>(i)], i) = 1.0;
        if (w.determinant() < 0.0) w.col(0) *= -1.0;
        atlas.push_back(w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return atlas;
}

bool point_eq(const Group& g, const RootDatum& rd, const OshimaPoint& a, const OshimaPoint& b,
              const Tolerances& tol, double* distance) {
    if (a.t.size() != b.t.size()) throw DimensionMismatch("points have different parameter ranks");
    if (distance) *distance = std::numeric_limits<double>::infinity();
    bool a_somewhere = false;
    bool b_somewhere = false;
    for (const Eigen::MatrixXd& w : chart_atlas(g)) {
        const Eigen::MatrixXd wt = w.transpose();
        auto ca = try_canonicalize(g, rd, act(wt, a), tol);
        auto cb = try_canonicalize(g, rd, act(wt, b), tol);
        a_somewhere = a_somewhere || ca.has_value();
        b_somewhere = b_somewhere || cb.has_value();
        if (ca && cb) {
            const double scale = std::max({1.0, ca->n.norm(), cb->n.norm(),
                                           ca->t.cwiseAbs().maxCoeff(), cb->t.cwiseAbs().maxCoeff()});
            const double d = std::max((ca->n - cb->n).norm(), (ca->t - cb->t).norm());
            if (distance) *distance = d;
            return d <= 10.0 * tol.fact * scale;
        }
    }
    if (!a_somewhere || !b_somewhere) throw NotInChart("point canonicalizes in no chart of the atlas");
    return false;
}

Eigen::VectorXi orbit_class(const OshimaPoint& p) {
    Eigen::VectorXi s(p.t.size());
    for (Eigen::Index k = 0; k < p.t.size(); ++k)
        s[k] = p.t[k] > 0.0 ? 1 : (p.t[k] < 0.0 ? -1 : 0);
    return s;
}

bool satake_member(const OshimaPoint& p) { return (p.t.array() >= 0.0).all(); }

OshimaPoint z2_flip(const Eigen::VectorXi& s, const OshimaPoint& p) {
    if (s.size() != p.t.size()) throw DimensionMismatch("sign vector has the wrong rank");
    Eigen::VectorXd t = p.t;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (s[k] != 1 && s[k] != -1) throw DimensionMismatch("sign vector entries must be +-1");
        t[k] *= s[k];
    }
    return OshimaPoint{p.g, t, std::nullopt};
}

double chordal(const SpherePoint& a, const SpherePoint& b) {
    const double cross = std::abs(a.num * b.den - b.num * a.den);
    const double na = std::sqrt(std::norm(a.num) + std::norm(a.den));
    const double nb = std::sqrt(std::norm(b.num) + std::norm(b.den));
    return 2.0 * cross / (na * nb);
}

namespace {

SpherePoint normalized(std::complex<double> num, std::complex<double> den) {
    const double m = std::max(std::abs(num), std::abs(den));
    if (m <= 0.0) throw NumericalBreakdown("homogeneous coordinates vanished");
    return SpherePoint{num / m, den / m};
}

}  // namespace

SpherePoint mobius(const Eigen::MatrixXd& g, const SpherePoint& z) {
    if (g.rows() != 2 || g.cols() != 2) throw DimensionMismatch("fractional-linear action needs a 2x2 matrix");
    return normalized(g(0, 0) * z.num + g(0, 1) * z.den, g(1, 0) * z.num + g(1, 1) * z.den);
}

SpherePoint sl2_sphere(const Group& g, const OshimaPoint& p) {
    if (!g.sl_family || g.n != 2) throw WrongGroup("sphere model exists only for the rank-one group");
    if (p.t.size() != 1) throw DimensionMismatch("rank-one point needs a single parameter");
    const std::complex<double> it(0.0, p.t[0]);
    return normalized(p.g(0, 0) * it + p.g(0, 1), p.g(1, 0) * it + p.g(1, 1));
}

CompactWitness compact_witness(const Group& g, const RootDatum& rd, const OshimaPoint& p,
                               const Tolerances& tol) {
    if (static_cast<Eigen::Index>(support(p.t).size()) != p.t.size())
        throw Unsupported("compact rewriting needs a dense-orbit point");
    const Eigen::MatrixXd sect = a_t_section(g, rd, p.t, tol);
    Eigen::VectorXd signs(p.t.size());
    for (Eigen::Index k = 0; k < p.t.size(); ++k) signs[k] = p.t[k] > 0.0 ? 1.0 : -1.0;
    const CartanKAK kak = factorize_kak(g, p.g * sect, tol);
    Eigen::VectorXd tw = a_action(g, rd, kak.a, signs, tol);
    for (Eigen::Index k = 0; k < tw.size(); ++k) {
        if (std::abs(tw[k]) > 1.0 && std::abs(tw[k]) <= 1.0 + 1e-9) tw[k] = tw[k] > 0.0 ? 1.0 : -1.0;
    }
    CompactWitness out{kak.k1, tw, std::numeric_limits<double>::infinity()};
    double d = std::numeric_limits<double>::infinity();
    point_eq(g, rd, p, OshimaPoint{out.k, out.t, std::nullopt}, tol, &d);
    out.residual = d;
    return out;
}

}  // namespace satake
