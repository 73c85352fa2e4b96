#include "satake/bgroupoid.hpp"

#include <cmath>
#include <cstdio>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

namespace {

void check_positive(const Eigen::VectorXd& a) {
    if ((a.array() <= 0.0).any()) throw SignMismatch("scaling factor must be positive");
}

}  // namespace

ModelBArrow model_arrow(const Eigen::VectorXd& m, const Eigen::VectorXd& a) {
    if (m.size() != a.size()) throw DimensionMismatch("point and scaling factor sizes differ");
    check_positive(a);
    return ModelBArrow{m, a.cwiseProduct(m), a};
}

ModelBArrow model_unit(const Eigen::VectorXd& m) {
    return ModelBArrow{m, m, Eigen::VectorXd::Ones(m.size())};
}

ModelBArrow model_inverse(const ModelBArrow& b) {
    return ModelBArrow{b.m2, b.m, b.a.cwiseInverse()};
}

ModelBArrow model_compose(const ModelBArrow& after, const ModelBArrow& first) {
    if (after.m.size() != first.m2.size())
        throw DimensionMismatch("model arrows live on different spaces");
    const double scale = std::max(1.0, first.m2.cwiseAbs().maxCoeff());
    const double d = (after.m - first.m2).cwiseAbs().maxCoeff();
    if (d > 1e-12 * scale) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "model endpoints do not match, distance %.3e", d);
        throw NotComposable(msg);
    }
    return ModelBArrow{first.m, after.m2, after.a.cwiseProduct(first.a)};
}

Eigen::VectorXd a_of_T(const Eigen::VectorXd& m2, const Eigen::VectorXd& T,
                       const Eigen::VectorXd& m) {
    if (m2.size() != m.size()) throw DimensionMismatch("endpoint sizes differ");
    check_positive(T);
    Eigen::VectorXd a(m.size());
    Eigen::Index used = 0;
    for (Eigen::Index j = 0; j < m.size(); ++j) {
        if (m[j] == 0.0) {
            if (m2[j] != 0.0) throw SignMismatch("endpoints lie on different hyperplanes");
            if (used >= T.size()) throw DimensionMismatch("normal frame map is too short");
            a[j] = T[used++];
        } else {
            if (m[j] * m2[j] <= 0.0) throw SignMismatch("endpoints lie on different sides");
            a[j] = m2[j] / m[j];
        }
    }
    if (used != T.size()) throw DimensionMismatch("normal frame map is too long");
    return a;
}

ModelBArrow oshima_to_b(const Group& g, const RootDatum& rd, const ChartArrow& w,
                        const Tolerances& tol) {
    return ModelBArrow{w.from.t, w.to.t, simple_weights(g, rd, w.a, tol)};
}

Eigen::MatrixXd evaluate_word(const Group& g, const DeformedBasis& basis, const HWord& word) {
    if (word.rep < 0 || word.rep >= static_cast<int>(g.m_reps.size()))
        throw DimensionMismatch("component representative index out of range");
    Eigen::MatrixXd out = g.m_reps[static_cast<std::size_t>(word.rep)];
    for (const Eigen::VectorXd& c : word.letters) {
        if (c.size() != static_cast<Eigen::Index>(basis.vecs.size()))
            throw DimensionMismatch("letter has the wrong number of coefficients");
        Eigen::VectorXd y = Eigen::VectorXd::Zero(g.dim());
        for (Eigen::Index i = 0; i < c.size(); ++i)
            y += c[i] * basis.vecs[static_cast<std::size_t>(i)].coords;
        out = out * linalg::expm(g.from_coords(y));
    }
    return out;
}

double normal_derivative(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& gamma,
                         const Eigen::VectorXd& t0, int alpha, const Tolerances& tol) {
    if (alpha < 0 || alpha >= t0.size()) throw UnknownRoot("simple-root index out of range");
    if (t0[alpha] != 0.0) throw WrongOrbit("coordinate does not vanish at the base point");
    const auto value = [&](double dt) {
        Eigen::VectorXd t = t0;
        t[alpha] = dt;
        const ChartCoords c = canonicalize(g, rd, oshima_point(gamma, t), tol);
        return c.t[alpha];
    };
    const auto central = [&](double step) { return (value(step) - value(-step)) / (2.0 * step); };
    const double d1 = central(1e-4);
    const double d2 = central(5e-5);
    if (std::abs(d1 - d2) <= 1e-5) return d2;
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace satake
