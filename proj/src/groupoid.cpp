#include "satake/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "satake/errors.hpp"

namespace satake {

namespace {

void check_unipotent_upper(const Group& g, const Eigen::MatrixXd& n, const Tolerances& tol) {
    if (!g.sl_family) return;
    double off = 0.0;
    for (Eigen::Index i = 0; i < n.rows(); ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            off = std::max(off, std::abs(n(i, j) - want));
        }
    if (off > 10.0 * tol.fact * std::max(1.0, n.norm()))
        throw NotInChart("chart coordinate is not unipotent upper triangular");
}

}  // namespace

Arrow make_arrow(const Group& g, const Eigen::MatrixXd& gamma, const OshimaPoint& base,
                 const Tolerances& tol) {
    if (!g.in_group(gamma, tol.fact)) throw NotInGroup("arrow representative is not a group element");
    if (!g.in_group(base.g, tol.fact)) throw NotInGroup("base representative is not a group element");
    return Arrow{gamma, base};
}

OshimaPoint source(const Arrow& a) { return a.base; }

OshimaPoint target(const Arrow& a) { return act(a.gamma, a.base); }

Arrow unit_arrow(const OshimaPoint& p) {
    return Arrow{Eigen::MatrixXd::Identity(p.g.rows(), p.g.cols()), p};
}

Arrow arrow_inverse(const Arrow& a) { return Arrow{a.gamma.inverse(), target(a)}; }

Arrow compose(const Group& g, const RootDatum& rd, const Arrow& after, const Arrow& first,
              const Tolerances& tol) {
    double d = 0.0;
    if (!point_eq(g, rd, source(after), target(first), tol, &d)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "source does not match target, chart distance %.3e", d);
        throw NotComposable(msg);
    }
    return Arrow{after.gamma * first.gamma, first.base};
}

bool arrow_eq(const Group& g, const RootDatum& rd, const Arrow& a, const Arrow& b,
              const Tolerances& tol) {
    if (!point_eq(g, rd, a.base, b.base, tol)) return false;
    const Eigen::MatrixXd ratio = b.gamma.inverse() * a.gamma;
    return subgroup_membership(g, rd, ratio, a.base.t, a.base.g, tol);
}

ChartArrow chart_arrow(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& n2,
                       const Eigen::MatrixXd& a, const ChartCoords& from, const Tolerances& tol) {
    if (!g.in_group(n2, tol.fact) || !g.in_group(from.n, tol.fact))
        throw NotInGroup("chart coordinate is not a group element");
    check_unipotent_upper(g, n2, tol);
    check_unipotent_upper(g, from.n, tol);
    a_log(g, a, tol);
    return ChartArrow{ChartCoords{n2, a_action(g, rd, a, from.t, tol)}, a, from};
}

ChartArrow chart_unit(const ChartCoords& at) {
    return ChartArrow{at, Eigen::MatrixXd::Identity(at.n.rows(), at.n.cols()), at};
}

ChartArrow chart_inverse(const ChartArrow& w) { return ChartArrow{w.from, w.a.inverse(), w.to}; }

ChartArrow chart_compose(const Group& g, const RootDatum& rd, const ChartArrow& after,
                         const ChartArrow& first, const Tolerances& tol) {
    (void)g;
    (void)rd;
    const double scale = std::max({1.0, first.to.n.norm(), after.from.n.norm(),
                                   first.to.t.cwiseAbs().maxCoeff(), after.from.t.cwiseAbs().maxCoeff()});
    const double d = std::max((after.from.n - first.to.n).norm(), (after.from.t - first.to.t).norm());
    if (d > 10.0 * tol.fact * scale) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "chart endpoints do not match, distance %.3e", d);
        throw NotComposable(msg);
    }
    return ChartArrow{after.to, after.a * first.a, first.from};
}

Arrow chart_iso(const ChartArrow& w) {
    return Arrow{w.to.n * w.a * w.from.n.inverse(), oshima_point(w.from.n, w.from.t)};
}

ChartArrow chart_iso_inv(const Group& g, const RootDatum& rd, const Arrow& a,
                         const Tolerances& tol) {
    NAH n1, n2;
    try {
        n1 = nah_factorize(g, rd, a.base.g, a.base.t, tol);
        n2 = nah_factorize(g, rd, a.gamma * a.base.g, a.base.t, tol);
    } catch (const NotInCell&) {
        throw NotInChart("arrow endpoint lies outside the big cell");
    }
    ChartCoords from{n1.n, a_action(g, rd, n1.a, a.base.t, tol)};
    ChartCoords to{n2.n, a_action(g, rd, n2.a, a.base.t, tol)};
    return ChartArrow{to, n2.a * n1.a.inverse(), from};
}

ReducedArrow orbit_reduction(const Group& g, const RootDatum& rd, const Arrow& a,
                             const std::vector<int>& subset, const Tolerances& tol) {
    const Eigen::Index r = static_cast<Eigen::Index>(rd.simple.size());
    Eigen::VectorXi want = Eigen::VectorXi::Zero(r);
    for (int s : subset) {
        if (s < 0 || s >= r) throw UnknownRoot("subset index out of range");
        want[s] = 1;
    }
    const Eigen::VectorXi cls = orbit_class(a.base);
    if (cls.size() != want.size() || (cls.array() != want.array()).any())
        throw WrongOrbit("arrow does not lie over the requested stratum");
    const Eigen::MatrixXd sect = a_t_section(g, rd, a.base.t, tol);
    const Eigen::MatrixXd x1 = a.base.g * sect;
    return ReducedArrow{a.gamma * x1, x1, subset};
}

bool reduced_eq(const Group& g, const RootDatum& rd, const ReducedArrow& r, const ReducedArrow& s,
                const Tolerances& tol) {
    if (r.subset != s.subset) throw WrongOrbit("labels live over different strata");
    const Eigen::MatrixXd z1 = r.x1.inverse() * s.x1;
    const Eigen::MatrixXd z2 = r.x2.inverse() * s.x2;
    const std::vector<int> sizes = detail::block_sizes_for(g, rd, r.subset);
    detail::BlockUDL udl;
    try {
        udl = detail::block_udl(z1, sizes);
    } catch (const NotInCell&) {
        return false;
    }
    const Eigen::Index n = z1.rows();
    if ((udl.u - Eigen::MatrixXd::Identity(n, n)).norm() > 10.0 * tol.fact * std::max(1.0, z1.norm()))
        return false;
    Eigen::VectorXd b = Eigen::VectorXd::Ones(n);
    Eigen::Index at = 0;
    for (int sz : sizes) {
        const double beta = std::pow(std::abs(udl.d.block(at, at, sz, sz).determinant()), 1.0 / sz);
        b.segment(at, sz).setConstant(beta);
        at += sz;
    }
    const Eigen::MatrixXd binv = b.cwiseInverse().asDiagonal();
    return subgroup_membership(g, rd, z1 * binv, r.subset, {}, tol) &&
           subgroup_membership(g, rd, z2 * binv, r.subset, {}, tol);
}

}  // namespace satake
