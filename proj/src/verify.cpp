#include "satake/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "satake/bgroupoid.hpp"
#include "satake/degeneration.hpp"
#include "satake/errors.hpp"
#include "satake/fell.hpp"
#include "satake/groupoid.hpp"
#include "satake/linalg.hpp"
#include "satake/oshima.hpp"
#include "satake/parabolic.hpp"
#include "satake/roots.hpp"
#include "satake/verify.hpp"

namespace satake {

namespace {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t s) : eng(s) {}

    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double sym(double s) { return s * (2.0 * uniform() - 1.0); }
    int pick(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }

    Eigen::VectorXd vec(Eigen::Index n, double s) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = sym(s);
        return v;
    }

    Eigen::VectorXd unit(Eigen::Index n) {
        Eigen::VectorXd v = vec(n, 1.0);
        const double nn = v.norm();
        return nn > 0.0 ? Eigen::VectorXd(v / nn) : Eigen::VectorXd::Unit(n, 0);
    }
};

std::uint64_t mix_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : id) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h ^ seed;
}

struct Ctx {
    const Group& g;
    const RootDatum& rd;
    Tolerances tol;
    bool fault;
    Rng rng;
    std::uint64_t seed;
};

Eigen::MatrixXd rand_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double s) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.sym(s);
    return m;
}

Eigen::MatrixXd rand_alg(Ctx& c, double s) { return c.g.from_coords(c.rng.vec(c.g.dim(), s)); }

Eigen::MatrixXd rand_group_elem(Ctx& c, double s) { return linalg::expm(rand_alg(c, s)); }

Eigen::MatrixXd rand_a_elem(Ctx& c, double s) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(c.g.n, c.g.n);
    for (Eigen::Index k = 0; k < c.g.rank_a(); ++k)
        x += c.rng.sym(s) * c.g.a_basis[static_cast<std::size_t>(k)];
    return linalg::expm(x);
}

Eigen::MatrixXd rand_n_elem(Ctx& c, double s) {
    const Eigen::MatrixXd& ns = c.rd.n_space;
    return linalg::expm(c.g.from_coords(ns * c.rng.vec(ns.cols(), s)));
}

Eigen::VectorXd rand_t(Ctx& c, double zero_prob, double lo = 0.25, double hi = 2.0) {
    Eigen::VectorXd t(c.rd.simple.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        if (c.rng.uniform() < zero_prob) {
            t[i] = 0.0;
        } else {
            const double mag = lo + (hi - lo) * c.rng.uniform();
            t[i] = c.rng.uniform() < 0.5 ? -mag : mag;
        }
    }
    return t;
}

std::vector<Eigen::VectorXd> sign_patterns(Eigen::Index r) {
    std::vector<Eigen::VectorXd> out;
    long total = 1;
    for (Eigen::Index i = 0; i < r; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        Eigen::VectorXd t(r);
        for (Eigen::Index i = 0; i < r; ++i) {
            t[i] = static_cast<double>(c % 3 - 1);
            c /= 3;
        }
        out.push_back(t);
    }
    return out;
}

std::vector<std::vector<int>> all_subsets(int r) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < r; ++i)
            if (mask & (1 << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

Eigen::VectorXd indicator(const std::vector<int>& subset, Eigen::Index r) {
    Eigen::VectorXd t = Eigen::VectorXd::Zero(r);
    for (int s : subset) t[s] = 1.0;
    return t;
}

// --- checks ------------------------------------------------------------

CheckResult check_subalgebra_closure(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-9;
    std::vector<Eigen::VectorXd> ts = sign_patterns(c.rd.simple.size());
    while (ts.size() < 200) ts.push_back(rand_t(c, 0.15));
    double worst = 0.0;
    for (const Eigen::VectorXd& t : ts) {
        Eigen::MatrixXd span = h_t_basis(c.g, c.rd, t).span();
        if (c.fault) {
            // Contaminate the candidate basis with a generic direction; works
            // even when the honest span is one-dimensional.
            span.conservativeResize(Eigen::NoChange, span.cols() + 1);
            span.col(span.cols() - 1) = c.rng.unit(span.rows());
        }
        const Eigen::MatrixXd p = linalg::orthonormal_columns(span);
        for (Eigen::Index i = 0; i < span.cols(); ++i) {
            const Eigen::MatrixXd xi = c.g.from_coords(span.col(i));
            for (Eigen::Index j = i + 1; j < span.cols(); ++j) {
                const Eigen::MatrixXd xj = c.g.from_coords(span.col(j));
                const Eigen::VectorXd br = c.g.coords(xi * xj - xj * xi);
                worst = std::max(worst, linalg::distance_to_span(p, br) / std::max(1.0, br.norm()));
            }
        }
    }
    out.samples = static_cast<long>(ts.size());
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_subalgebra_equivariance(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-9;
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Eigen::VectorXd t = rand_t(c, 0.15);
        const Eigen::MatrixXd a = rand_a_elem(c, 1.2);
        const Eigen::MatrixXd ainv = a.inverse();
        Eigen::MatrixXd conj = h_t_basis(c.g, c.rd, t).span();
        for (Eigen::Index j = 0; j < conj.cols(); ++j)
            conj.col(j) = c.g.coords(a * c.g.from_coords(conj.col(j)) * ainv);
        if (c.fault) conj.col(0) += 1e-3 * c.rng.unit(conj.rows());
        const Eigen::VectorXd t2 = a_action(c.g, c.rd, a, t, c.tol);
        const Eigen::MatrixXd other = h_t_basis(c.g, c.rd, t2).span();
        worst = std::max(worst, linalg::principal_angle_sin(linalg::orthonormal_columns(conj),
                                                            linalg::orthonormal_columns(other)));
    }
    out.samples = 200;
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_normalizer_dimension(Ctx& c) {
    CheckResult out;
    out.tolerance = 0.0;
    double worst = 0.0;
    const auto subsets = all_subsets(static_cast<int>(c.rd.simple.size()));
    for (const auto& subset : subsets) {
        const ParabolicDatum pd = parabolic_datum(c.g, c.rd, subset, c.tol);
        Eigen::MatrixXd span = pd.h_I;
        if (c.fault) span.col(span.cols() - 1) = c.rng.unit(span.rows());
        const Eigen::MatrixXd nz = normalizer_subalgebra(c.g, span, c.tol);
        const double want = static_cast<double>(pd.a_I.cols() + pd.h_I.cols());
        worst = std::max(worst, std::abs(static_cast<double>(nz.cols()) - want));
    }
    out.samples = static_cast<long>(subsets.size());
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_nilpotent_dichotomy(Ctx& c) {
    CheckResult out;
    out.tolerance = 0.0;
    double failures = 0.0;
    long samples = 0;
    const auto subsets = all_subsets(static_cast<int>(c.rd.simple.size()));
    std::vector<ParabolicDatum> data;
    for (const auto& subset : subsets) data.push_back(parabolic_datum(c.g, c.rd, subset, c.tol));
    for (const ParabolicDatum& pd : data) {
        for (Eigen::Index j = 0; j < pd.nbar_I.cols(); ++j) {
            Eigen::VectorXd v = pd.nbar_I.col(j);
            if (c.fault && pd.k_I.cols() > 0) v += 0.5 * pd.k_I * c.rng.unit(pd.k_I.cols());
            if (!is_ad_nilpotent(c.g, c.g.from_coords(v), c.tol)) failures += 1.0;
            ++samples;
        }
    }
    std::vector<const ParabolicDatum*> mixed;
    for (const ParabolicDatum& pd : data)
        if (pd.k_I.cols() > 0) mixed.push_back(&pd);
    for (int k = 0; k < 100 && !mixed.empty(); ++k) {
        const ParabolicDatum& pd = *mixed[static_cast<std::size_t>(c.rng.pick(static_cast<int>(mixed.size())))];
        // The fault drops the compact part, turning a must-be-semisimple-mix
        // sample into a genuinely nilpotent one.
        const double kscale = c.fault ? 0.0 : 0.3 + 0.7 * c.rng.uniform();
        Eigen::VectorXd v = pd.k_I * (kscale * c.rng.unit(pd.k_I.cols()));
        if (pd.nbar_I.cols() > 0) v += pd.nbar_I * c.rng.vec(pd.nbar_I.cols(), 1.0);
        if (is_ad_nilpotent(c.g, c.g.from_coords(v), c.tol)) failures += 1.0;
        ++samples;
    }
    out.samples = samples;
    out.max_residual = failures;
    out.pass = failures <= out.tolerance;
    return out;
}

CheckResult check_iwasawa_transversality(Ctx& c) {
    CheckResult out;
    out.tolerance = 0.0;
    std::vector<Eigen::VectorXd> ts = sign_patterns(c.rd.simple.size());
    while (ts.size() < 200) ts.push_back(rand_t(c, 0.2));
    const Eigen::Index d = c.g.dim();
    double worst = 0.0;
    for (const Eigen::VectorXd& t : ts) {
        const Eigen::MatrixXd h = h_t_basis(c.g, c.rd, t).span();
        Eigen::MatrixXd m(d, h.cols() + c.rd.a_space.cols() + c.rd.n_space.cols());
        m << h, c.rd.a_space, c.rd.n_space;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double nn = m.col(j).norm();
            if (nn > 0.0) m.col(j) /= nn;
        }
        if (c.fault) m.col(0) = m.col(h.cols());
        worst = std::max(worst, static_cast<double>(d - linalg::rank(m, c.tol.rank)));
    }
    out.samples = static_cast<long>(ts.size());
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_fell_limit(Ctx& c) {
    CheckResult out;
    const Eigen::Index r = c.rd.simple.size();
    double worst = 0.0;
    if (r == 1) {
        out.tolerance = 1e-2;
        Eigen::VectorXd t(1);
        t << std::pow(2.0, -10);
        SubgroupGenerators gen = h_t_generators(c.g, c.rd, t);
        if (c.fault) gen.algebra.col(0) += 0.1 * c.rng.unit(gen.algebra.rows());
        const SampledClosedSet st = sample_subgroup(c.g, gen, 10.0, 0.05, c.seed);
        const SampledClosedSet s0 =
            sample_subgroup(c.g, h_t_generators(c.g, c.rd, Eigen::VectorXd::Zero(1)), 10.0, 0.05, c.seed);
        worst = local_hausdorff(st, s0);
        out.samples = 1;
    } else {
        out.tolerance = 0.25;
        SampleOptions opts;
        opts.word_len = 2;
        const auto subsets = all_subsets(static_cast<int>(r));
        for (const auto& subset : subsets) {
            const Eigen::VectorXd tlim = indicator(subset, r);
            const Eigen::VectorXd tpath =
                tlim + std::pow(2.0, -10) * (Eigen::VectorXd::Ones(r) - tlim);
            SubgroupGenerators gen = h_t_generators(c.g, c.rd, tpath);
            if (c.fault) gen.algebra.col(0) += 0.1 * c.rng.unit(gen.algebra.rows());
            const SampledClosedSet spath = sample_subgroup(c.g, gen, 10.0, 0.05, c.seed, opts);
            const SampledClosedSet slim =
                sample_subgroup(c.g, h_t_generators(c.g, c.rd, tlim), 10.0, 0.05, c.seed, opts);
            worst = std::max(worst, local_hausdorff(spath, slim));
        }
        out.samples = static_cast<long>(subsets.size());
    }
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_groupoid_axioms(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-12;
    double worst = 0.0;
    bool law_failed = false;
    long triples = 0;
    for (int attempts = 0; triples < 1000 && attempts < 1200; ++attempts) {
        try {
            const Eigen::VectorXd t = rand_t(c, c.rng.uniform() < 0.3 ? 0.5 : 0.0);
            const Arrow a1{rand_group_elem(c, 0.8), oshima_point(rand_group_elem(c, 0.8), t)};
            const Arrow a2{rand_group_elem(c, 0.8), target(a1)};
            const Arrow a3{rand_group_elem(c, 0.8), target(a2)};
            const Arrow left = compose(c.g, c.rd, a3, compose(c.g, c.rd, a2, a1, c.tol), c.tol);
            const Arrow right = compose(c.g, c.rd, compose(c.g, c.rd, a3, a2, c.tol), a1, c.tol);
            worst = std::max(worst, (left.gamma - right.gamma).norm() /
                                        std::max(1.0, left.gamma.norm()));
            if (!arrow_eq(c.g, c.rd, compose(c.g, c.rd, a1, unit_arrow(source(a1)), c.tol), a1, c.tol))
                law_failed = true;
            if (!arrow_eq(c.g, c.rd, compose(c.g, c.rd, unit_arrow(target(a1)), a1, c.tol), a1, c.tol))
                law_failed = true;
            if (!arrow_eq(c.g, c.rd, compose(c.g, c.rd, arrow_inverse(a1), a1, c.tol),
                          unit_arrow(source(a1)), c.tol))
                law_failed = true;
            ++triples;
        } catch (const NotInChart&) {
        }
    }
    long changes = 0;
    for (int attempts = 0; changes < 100 && attempts < 200; ++attempts) {
        try {
            const Eigen::VectorXd t = rand_t(c, c.rng.uniform() < 0.3 ? 0.5 : 0.0);
            const Eigen::MatrixXd gbase = rand_group_elem(c, 0.8);
            const Arrow a{rand_group_elem(c, 0.8), oshima_point(gbase, t)};
            const DeformedBasis db = h_t_basis(c.g, c.rd, t);
            HWord w;
            w.rep = c.rng.pick(static_cast<int>(c.g.m_reps.size()));
            const int letters = 1 + c.rng.pick(2);
            for (int l = 0; l < letters; ++l)
                w.letters.push_back(c.rng.vec(static_cast<Eigen::Index>(db.vecs.size()), 0.5));
            Eigen::MatrixXd h = evaluate_word(c.g, db, w);
            if (c.fault) h = h * linalg::expm(rand_alg(c, 0.05));
            const Eigen::MatrixXd delta = gbase * h * gbase.inverse();
            const Arrow shifted{a.gamma * delta, a.base};
            if (!arrow_eq(c.g, c.rd, shifted, a, c.tol)) law_failed = true;
            ++changes;
        } catch (const NotInChart&) {
        }
    }
    out.samples = triples + changes;
    out.max_residual = std::max(worst, law_failed ? 1.0 : 0.0);
    out.pass = !law_failed && worst <= out.tolerance && triples == 1000 && changes == 100;
    return out;
}

CheckResult check_chart_isomorphism(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-9;
    double worst = 0.0;
    bool law_failed = false;
    for (int k = 0; k < 200; ++k) {
        const ChartCoords from{rand_n_elem(c, 0.8), rand_t(c, 0.3)};
        const ChartArrow w1 = chart_arrow(c.g, c.rd, rand_n_elem(c, 0.8), rand_a_elem(c, 1.0), from, c.tol);
        Arrow a = chart_iso(w1);
        // Multiplicative shift keeps the faulted arrow inside the group, so it
        // fails the round trip rather than the membership validation.
        if (c.fault) a.gamma = a.gamma * linalg::expm(rand_alg(c, 1e-6));
        const ChartArrow back = chart_iso_inv(c.g, c.rd, a, c.tol);
        const double scale = std::max(1.0, w1.a.norm());
        double res = std::max({(back.from.n - w1.from.n).norm(), (back.from.t - w1.from.t).norm(),
                               (back.to.n - w1.to.n).norm(), (back.to.t - w1.to.t).norm(),
                               (back.a - w1.a).norm() / scale});
        worst = std::max(worst, res);

        const ChartArrow w2 = chart_arrow(c.g, c.rd, rand_n_elem(c, 0.8), rand_a_elem(c, 1.0), w1.to, c.tol);
        const Arrow lhs = chart_iso(chart_compose(c.g, c.rd, w2, w1, c.tol));
        const Arrow rhs = compose(c.g, c.rd, chart_iso(w2), chart_iso(w1), c.tol);
        worst = std::max(worst, (lhs.gamma - rhs.gamma).norm() / std::max(1.0, lhs.gamma.norm()));
        if (!arrow_eq(c.g, c.rd, lhs, rhs, c.tol)) law_failed = true;
    }
    out.samples = 400;
    out.max_residual = std::max(worst, law_failed ? 1.0 : 0.0);
    out.pass = !law_failed && worst <= out.tolerance;
    return out;
}

CheckResult check_normal_derivative(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-5;
    const Eigen::Index r = c.rd.simple.size();
    double worst = 0.0;
    long samples = 0;
    std::vector<Eigen::VectorXd> bases;
    for (const Eigen::VectorXd& s : sign_patterns(r)) {
        if ((s.array() >= 0.0).all() && (s.array() == 0.0).any()) bases.push_back(s);
    }
    for (const Eigen::VectorXd& t0 : bases) {
        const DeformedBasis db = h_t_basis(c.g, c.rd, t0);
        for (Eigen::Index alpha = 0; alpha < r; ++alpha) {
            if (t0[alpha] != 0.0) continue;
            long words = 0;
            for (int attempts = 0; words < 50 && attempts < 120; ++attempts) {
                try {
                    HWord w;
                    w.rep = c.rng.pick(static_cast<int>(c.g.m_reps.size()));
                    const int letters = 1 + c.rng.pick(2);
                    for (int l = 0; l < letters; ++l)
                        w.letters.push_back(c.rng.vec(static_cast<Eigen::Index>(db.vecs.size()), 0.6));
                    Eigen::MatrixXd gamma = evaluate_word(c.g, db, w);
                    if (c.fault) gamma = gamma * linalg::expm(1e-3 * c.g.a_basis[0]);
                    const double d = normal_derivative(c.g, c.rd, gamma, t0, static_cast<int>(alpha), c.tol);
                    worst = std::max(worst, std::abs(d - 1.0));
                    ++words;
                    ++samples;
                } catch (const NotInChart&) {
                }
            }
            for (int k = 0; k < 10; ++k) {
                const Eigen::MatrixXd a = rand_a_elem(c, 1.0);
                const double expected = simple_weights(c.g, c.rd, a, c.tol)[alpha];
                const double d = normal_derivative(c.g, c.rd, a, t0, static_cast<int>(alpha), c.tol);
                worst = std::max(worst, std::abs(d - expected));
                ++samples;
            }
        }
    }
    out.samples = samples;
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_bmodel_functoriality(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-12;
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const ChartCoords from{rand_n_elem(c, 0.8), rand_t(c, 0.3)};
        const ChartArrow w1 = chart_arrow(c.g, c.rd, rand_n_elem(c, 0.8), rand_a_elem(c, 1.0), from, c.tol);
        const ChartArrow w2 = chart_arrow(c.g, c.rd, rand_n_elem(c, 0.8), rand_a_elem(c, 1.0), w1.to, c.tol);
        ModelBArrow b1 = oshima_to_b(c.g, c.rd, w1, c.tol);
        const ModelBArrow b2 = oshima_to_b(c.g, c.rd, w2, c.tol);
        if (c.fault) b1.a[0] *= 1.0 + 1e-8;
        const ModelBArrow lhs = model_compose(b2, b1);
        const ModelBArrow rhs = oshima_to_b(c.g, c.rd, chart_compose(c.g, c.rd, w2, w1, c.tol), c.tol);
        const double scale = std::max(1.0, rhs.a.cwiseAbs().maxCoeff());
        worst = std::max({worst, (lhs.a - rhs.a).cwiseAbs().maxCoeff() / scale,
                          (lhs.m - rhs.m).cwiseAbs().maxCoeff(),
                          (lhs.m2 - rhs.m2).cwiseAbs().maxCoeff() /
                              std::max(1.0, rhs.m2.cwiseAbs().maxCoeff())});
    }
    for (int k = 0; k < 50; ++k) {
        const Eigen::Index r = c.rd.simple.size();
        Eigen::VectorXd m(r), a(r);
        for (Eigen::Index i = 0; i < r; ++i) {
            m[i] = c.rng.uniform() < 0.4 ? 0.0 : c.rng.sym(2.0);
            a[i] = std::exp(c.rng.sym(1.0));
        }
        const ModelBArrow arr = model_arrow(m, a);
        std::vector<double> tv;
        for (Eigen::Index i = 0; i < r; ++i)
            if (m[i] == 0.0) tv.push_back(a[i]);
        Eigen::VectorXd tvec(static_cast<Eigen::Index>(tv.size()));
        for (Eigen::Index i = 0; i < tvec.size(); ++i) tvec[i] = tv[static_cast<std::size_t>(i)];
        const Eigen::VectorXd got = a_of_T(arr.m2, tvec, m);
        worst = std::max(worst, ((got - a).cwiseQuotient(a)).cwiseAbs().maxCoeff());
    }
    out.samples = 250;
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

CheckResult check_orbit_combinatorics(Ctx& c) {
    CheckResult out;
    out.tolerance = 0.25;
    const Eigen::Index r = c.rd.simple.size();
    double worst = 0.0;
    bool failed = false;

    std::vector<Eigen::VectorXd> patterns = sign_patterns(r);
    if (c.fault) patterns.pop_back();
    std::set<std::vector<int>> classes, satake_classes;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c.g.n, c.g.n);
    for (const Eigen::VectorXd& s : patterns) {
        const OshimaPoint p = oshima_point(id, s);
        const Eigen::VectorXi cls = orbit_class(p);
        for (Eigen::Index i = 0; i < r; ++i)
            if (cls[i] != static_cast<int>(s[i])) failed = true;
        std::vector<int> key(cls.data(), cls.data() + cls.size());
        classes.insert(key);
        if (satake_member(p)) satake_classes.insert(key);
    }
    long want = 1, want_satake = 1;
    for (Eigen::Index i = 0; i < r; ++i) {
        want *= 3;
        want_satake *= 2;
    }
    if (static_cast<long>(classes.size()) != want) failed = true;
    if (static_cast<long>(satake_classes.size()) != want_satake) failed = true;

    long pairs = 0;
    if (r <= 2) {
        SampleOptions opts;
        opts.word_len = 2;
        std::map<std::string, SampledClosedSet> cache;
        const auto sample_at = [&](const Eigen::VectorXd& t) -> const SampledClosedSet& {
            std::string key(reinterpret_cast<const char*>(t.data()), static_cast<std::size_t>(t.size()) * sizeof(double));
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, sample_subgroup(c.g, h_t_generators(c.g, c.rd, t), 10.0, 0.05, c.seed, opts)).first;
            return it->second;
        };
        const auto subsets = all_subsets(static_cast<int>(r));
        for (const auto& bi : subsets) {
            for (const auto& bj : subsets) {
                if (bi == bj) continue;
                const bool contained = std::includes(bj.begin(), bj.end(), bi.begin(), bi.end());
                const Eigen::VectorXd ti = indicator(bi, r);
                const Eigen::VectorXd tj = indicator(bj, r);
                Eigen::VectorXd probe(r);
                for (Eigen::Index k = 0; k < r; ++k) {
                    const bool in_i = ti[k] != 0.0, in_j = tj[k] != 0.0;
                    probe[k] = in_j ? (in_i ? 1.0 : std::pow(2.0, -10)) : 0.0;
                }
                const double d = local_hausdorff(sample_at(probe), sample_at(ti));
                ++pairs;
                if (contained) {
                    worst = std::max(worst, d);
                    if (d > out.tolerance) failed = true;
                } else if (d <= out.tolerance) {
                    failed = true;
                }
            }
        }
    }
    out.samples = static_cast<long>(patterns.size()) + pairs;
    out.max_residual = std::max(worst, failed ? 1e3 : 0.0);
    out.pass = !failed && worst <= out.tolerance;
    return out;
}

CheckResult check_sphere_model(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-9;
    double worst = 0.0;
    bool region_failed = false;
    for (int k = 0; k < 1000; ++k) {
        const Eigen::VectorXd t = rand_t(c, 0.2);
        const OshimaPoint p = oshima_point(rand_group_elem(c, 1.0), t);
        const Eigen::MatrixXd gamma = rand_group_elem(c, 1.0);
        const SpherePoint moved = sl2_sphere(c.g, act(gamma, p));
        const Eigen::MatrixXd gm =
            c.fault ? Eigen::MatrixXd(gamma + rand_matrix(c.rng, 2, 2, 1e-6)) : gamma;
        const SpherePoint via = mobius(gm, sl2_sphere(c.g, p));
        worst = std::max(worst, chordal(moved, via));

        const SpherePoint z = sl2_sphere(c.g, p);
        const double im = std::imag(z.num * std::conj(z.den));
        const double mag = std::norm(z.num) + std::norm(z.den);
        if (t[0] > 0.0 && im <= 0.0) region_failed = true;
        if (t[0] < 0.0 && im >= 0.0) region_failed = true;
        if (t[0] == 0.0 && std::abs(im) > 1e-12 * mag) region_failed = true;
    }
    out.samples = 1000;
    out.max_residual = std::max(worst, region_failed ? 1.0 : 0.0);
    out.pass = !region_failed && worst <= out.tolerance;
    return out;
}

CheckResult check_compactness_witness(Ctx& c) {
    CheckResult out;
    out.tolerance = 1e-8;
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const Eigen::VectorXd t = rand_t(c, 0.0, 0.3, 2.5);
        const OshimaPoint p = oshima_point(rand_group_elem(c, 1.0), t);
        CompactWitness cw = compact_witness(c.g, c.rd, p, c.tol);
        double res = cw.residual;
        if (c.fault) {
            cw.t[0] += 1e-6;
            double d = std::numeric_limits<double>::infinity();
            point_eq(c.g, c.rd, p, oshima_point(cw.k, cw.t), c.tol, &d);
            res = d;
        }
        if (cw.t.cwiseAbs().maxCoeff() > 1.0 + 1e-9) res = std::max(res, 1.0);
        const Eigen::MatrixXd ktk = cw.k.transpose() * cw.k;
        if ((ktk - Eigen::MatrixXd::Identity(c.g.n, c.g.n)).norm() > 1e-9) res = std::max(res, 1.0);
        worst = std::max(worst, res);
    }
    out.samples = 500;
    out.max_residual = worst;
    out.pass = worst <= out.tolerance;
    return out;
}

struct CheckSpec {
    const char* id;
    const char* statement;
    CheckResult (*fn)(Ctx&);
    bool rank_one_only;
};

constexpr CheckSpec kChecks[] = {
    {"bmodel_functoriality", "chart-to-model map commutes with composition and the frame formula",
     check_bmodel_functoriality, false},
    {"chart_isomorphism", "chart arrows round-trip through the groupoid and respect composition",
     check_chart_isomorphism, false},
    {"compactness_witness", "every dense-orbit point rewrites into the compact window",
     check_compactness_witness, false},
    {"fell_limit", "sampled subgroups converge in the windowed Hausdorff metric", check_fell_limit,
     false},
    {"groupoid_axioms", "associativity, unit and inverse laws hold on representatives",
     check_groupoid_axioms, false},
    {"iwasawa_transversality", "deformed subalgebra is transverse to a + n",
     check_iwasawa_transversality, false},
    {"nilpotent_dichotomy", "pure lower-unipotent parts are ad-nilpotent, mixed elements are not",
     check_nilpotent_dichotomy, false},
    {"normal_derivative",
     "subgroup words act with unit normal derivative, split-torus elements with their weight",
     check_normal_derivative, false},
    {"normalizer_dimension", "normalizer dimension equals subgroup plus split-torus dimensions",
     check_normalizer_dimension, false},
    {"orbit_combinatorics",
     "sign classes, nonnegative classes, and the closure order match the stratification",
     check_orbit_combinatorics, false},
    {"sphere_model", "the rank-one model is equivariant and separates the three orbit regions",
     check_sphere_model, true},
    {"subalgebra_closure", "deformed frames close under the bracket", check_subalgebra_closure,
     false},
    {"subalgebra_equivariance", "conjugating the frame matches rescaling the parameter",
     check_subalgebra_equivariance, false},
};

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const CheckResult& e) { return e.pass; });
}

VerifyReport verify_suite(const std::string& group_name, std::uint64_t seed, const Tolerances& tol,
                          const std::string& fault_inject) {
    const auto start = std::chrono::steady_clock::now();
    const Group g = build_group(group_name, tol);
    const RootDatum rd = restricted_root_decomposition(g, tol);

    VerifyReport rep;
    rep.group = group_name;
    rep.seed = seed;
    const bool rank_one = rd.simple.size() == 1 && g.sl_family;
    bool fault_ran = fault_inject.empty();
    for (const CheckSpec& spec : kChecks) {
        if (spec.rank_one_only && !rank_one) continue;
        const bool fault = fault_inject == spec.id;
        fault_ran = fault_ran || fault;
        Ctx ctx{g, rd, tol, fault, Rng(mix_seed(seed, spec.id)), seed};
        CheckResult r = spec.fn(ctx);
        r.check_id = spec.id;
        r.statement = spec.statement;
        r.group = group_name;
        rep.entries.push_back(std::move(r));
    }
    if (!fault_ran)
        throw Unsupported("fault target '" + fault_inject + "' does not name a check that ran for " +
                          group_name);
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string report_json(const VerifyReport& r, int indent) {
    nlohmann::json j;
    j["schema_version"] = r.schema_version;
    j["group"] = r.group;
    j["seed"] = r.seed;
    j["wall_time_s"] = r.wall_time_s;
    j["entries"] = nlohmann::json::array();
    for (const CheckResult& e : r.entries) {
        j["entries"].push_back({{"check_id", e.check_id},
                                {"statement", e.statement},
                                {"group", e.group},
                                {"samples", e.samples},
                                {"max_residual", e.max_residual},
                                {"tolerance", e.tolerance},
                                {"pass", e.pass}});
    }
    return j.dump(indent);
}

}  // namespace satake
