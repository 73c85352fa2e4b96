#include "satake/degeneration.hpp"

#include <cmath>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

using linalg::hstack;

double t_pow_2gamma(const RootDatum& rd, int pos_index, const Eigen::VectorXd& t) {
    if (pos_index < 0 || pos_index >= static_cast<int>(rd.positive.size()))
        throw UnknownRoot("positive-root index out of range");
    if (t.size() != rd.coeff.cols()) throw DimensionMismatch("t has the wrong length");
    double out = 1.0;
    for (Eigen::Index j = 0; j < t.size(); ++j) {
        int n = rd.coeff(pos_index, j);
        if (n > 0) out *= std::pow(t[j] * t[j], n);
    }
    return out;
}

std::vector<int> support(const Eigen::VectorXd& t) {
    std::vector<int> out;
    for (Eigen::Index j = 0; j < t.size(); ++j)
        if (t[j] != 0.0) out.push_back(static_cast<int>(j));
    return out;
}

Eigen::MatrixXd DeformedBasis::span() const {
    Eigen::MatrixXd out(vecs.empty() ? 0 : vecs.front().coords.size(),
                        static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t i = 0; i < vecs.size(); ++i)
        out.col(static_cast<Eigen::Index>(i)) = vecs[i].coords;
    return out;
}

DeformedBasis h_t_basis(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t) {
    DeformedBasis out;
    out.t = t;
    for (Eigen::Index j = 0; j < rd.m_space.cols(); ++j) {
        DeformedVector v;
        v.coords = v.x = v.theta_x = rd.m_space.col(j);
        out.vecs.push_back(std::move(v));
    }
    for (int i = 0; i < static_cast<int>(rd.positive.size()); ++i) {
        double w = t_pow_2gamma(rd, i, t);
        const Eigen::MatrixXd& sp = rd.positive[static_cast<std::size_t>(i)].space;
        for (Eigen::Index j = 0; j < sp.cols(); ++j) {
            DeformedVector v;
            v.pos_root = i;
            v.x = sp.col(j);
            v.theta_x = g.theta_coords * sp.col(j);
            v.coords = w * v.x + v.theta_x;
            out.vecs.push_back(std::move(v));
        }
    }
    return out;
}

DeformedBasis reevaluate(const RootDatum& rd, const DeformedBasis& basis,
                         const Eigen::VectorXd& t) {
    DeformedBasis out = basis;
    out.t = t;
    for (auto& v : out.vecs) {
        if (v.pos_root < 0) continue;
        v.coords = t_pow_2gamma(rd, v.pos_root, t) * v.x + v.theta_x;
    }
    return out;
}

KNSplit split_k_n(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t) {
    DeformedBasis basis = h_t_basis(g, rd, t);
    std::vector<Eigen::MatrixXd> k_cols, n_cols;
    for (const auto& v : basis.vecs) {
        if (v.pos_root >= 0 && t_pow_2gamma(rd, v.pos_root, t) == 0.0)
            n_cols.push_back(v.x);
        else
            k_cols.push_back(v.coords / v.coords.norm());
    }
    return {hstack(k_cols, g.dim()), hstack(n_cols, g.dim())};
}

Eigen::MatrixXd a_log(const Group& g, const Eigen::MatrixXd& a, const Tolerances& tol) {
    if (a.rows() != g.n || a.cols() != g.n) throw NotInA("wrong matrix size");
    if (!a.allFinite()) throw NotInA("entries not finite");
    Eigen::MatrixXd x;
    if (g.sl_family) {
        double off = (a - Eigen::MatrixXd(a.diagonal().asDiagonal())).norm();
        if (off > tol.fact * std::max(1.0, a.norm()) || a.diagonal().minCoeff() <= 0.0)
            throw NotInA("not a positive diagonal matrix");
        x = a.diagonal().array().log().matrix().asDiagonal();
    } else {
        x = a.log();
        if (!x.allFinite()) throw NotInA("no real logarithm");
    }
    g.a_coefficients(x, tol.fact);  // rejects logs outside a
    return x;
}

Eigen::VectorXd simple_weights(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& a,
                               const Tolerances& tol) {
    Eigen::MatrixXd x = a_log(g, a, tol);
    Eigen::VectorXd c = g.a_coefficients(x, tol.fact);
    Eigen::VectorXd out(static_cast<Eigen::Index>(rd.simple.size()));
    for (std::size_t j = 0; j < rd.simple.size(); ++j)
        out[static_cast<Eigen::Index>(j)] = std::exp(rd.simple[j].on_a.dot(c));
    return out;
}

Eigen::VectorXd a_action(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& a,
                         const Eigen::VectorXd& t, const Tolerances& tol) {
    if (t.size() != static_cast<Eigen::Index>(rd.simple.size()))
        throw DimensionMismatch("t has the wrong length");
    return simple_weights(g, rd, a, tol).cwiseProduct(t);
}

Eigen::MatrixXd a_t_section(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t,
                            const Tolerances& tol) {
    const Eigen::Index r = g.rank_a();
    const Eigen::Index s = static_cast<Eigen::Index>(rd.simple.size());
    if (t.size() != s) throw DimensionMismatch("t has the wrong length");

    Eigen::MatrixXd all(s, r);
    for (Eigen::Index j = 0; j < s; ++j)
        all.row(j) = rd.simple[static_cast<std::size_t>(j)].on_a.transpose();
    if (linalg::nullspace(all, tol.rank).cols() > 0)
        throw CenterAmbiguity("simple roots do not determine a section");

    std::vector<int> supp = support(t);
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(supp.size()), r);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(supp.size()));
    for (std::size_t i = 0; i < supp.size(); ++i) {
        rows.row(static_cast<Eigen::Index>(i)) = all.row(supp[i]);
        rhs[static_cast<Eigen::Index>(i)] = std::log(std::abs(t[supp[i]]));
    }
    double res = 0.0;
    Eigen::VectorXd c = supp.empty() ? Eigen::VectorXd::Zero(r) : linalg::lsq(rows, rhs, &res);
    if (res > tol.fact * std::max(1.0, rhs.size() ? rhs.cwiseAbs().maxCoeff() : 1.0))
        throw NumericalBreakdown("section equations are inconsistent");

    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(g.n, g.n);
    for (Eigen::Index k = 0; k < r; ++k) x += c[k] * g.a_basis[static_cast<std::size_t>(k)];
    return linalg::expm(x);
}

namespace detail {

std::vector<int> sl_simple_positions(const Group& g, const RootDatum& rd) {
    if (!g.sl_family) throw Unsupported("needs an sl backend");
    const Eigen::Index r = g.rank_a();
    std::vector<int> out;
    for (const auto& alpha : rd.simple) {
        int p = -1;
        for (Eigen::Index k = 0; k < r; ++k) {
            Eigen::VectorXd pattern = Eigen::VectorXd::Zero(r);
            pattern[k] = 1.0;
            if (k + 1 < r) pattern[k + 1] = -1.0;
            if ((alpha.on_a - pattern).norm() < 1e-8) {
                p = static_cast<int>(k);
                break;
            }
        }
        if (p < 0) throw Unsupported("simple root is not adjacent-difference shaped");
        out.push_back(p);
    }
    return out;
}

std::vector<int> block_sizes_for(const Group& g, const RootDatum& rd,
                                 const std::vector<int>& subset) {
    std::vector<int> pos = sl_simple_positions(g, rd);
    std::vector<char> merge(static_cast<std::size_t>(g.n) - 1, 0);
    for (int j : subset) {
        if (j < 0 || j >= static_cast<int>(pos.size()))
            throw UnknownRoot("simple-root index out of range");
        merge[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])] = 1;
    }
    std::vector<int> sizes{1};
    for (Eigen::Index i = 0; i + 1 < g.n; ++i) {
        if (merge[static_cast<std::size_t>(i)])
            ++sizes.back();
        else
            sizes.push_back(1);
    }
    return sizes;
}

BlockUDL block_udl(const Eigen::MatrixXd& m, const std::vector<int>& sizes) {
    const Eigen::Index n = m.rows();
    BlockUDL out{Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Zero(n, n),
                 Eigen::MatrixXd::Identity(n, n)};
    Eigen::MatrixXd s = m;
    double scale = std::max(1.0, linalg::op_norm(m));

    Eigen::Index end = n;
    for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) {
        Eigen::Index sz = *it, start = end - sz;
        Eigen::MatrixXd e = s.block(start, start, sz, sz);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues()[sz - 1] <= 1e-13 * scale)
            throw NotInCell("singular pivot block");
        out.d.block(start, start, sz, sz) = e;
        if (start > 0) {
            Eigen::MatrixXd einv = svd.solve(Eigen::MatrixXd::Identity(sz, sz));
            out.u.block(0, start, start, sz) = s.block(0, start, start, sz) * einv;
            out.l.block(start, 0, sz, start) = einv * s.block(start, 0, sz, start);
            s.block(0, 0, start, start) -=
                s.block(0, start, start, sz) * out.l.block(start, 0, sz, start);
        }
        end = start;
    }
    return out;
}

}  // namespace detail

namespace {

Eigen::MatrixXd block_diag_of(const std::vector<Eigen::MatrixXd>& blocks, Eigen::Index n) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return out;
}

}  // namespace

NAH nah_factorize(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& x,
                  const Eigen::VectorXd& t, const Tolerances& tol) {
    if (!g.in_group(x, tol.fact)) throw NotInGroup("matrix is not in the group");
    Eigen::MatrixXd sect = a_t_section(g, rd, t, tol);
    std::vector<int> sizes = detail::block_sizes_for(g, rd, support(t));

    Eigen::MatrixXd gt = x * sect;
    detail::BlockUDL udl = detail::block_udl(gt, sizes);

    std::vector<Eigen::MatrixXd> n_blocks, a_blocks, k_blocks;
    Eigen::Index at = 0;
    for (int sz : sizes) {
        Eigen::MatrixXd db = udl.d.block(at, at, sz, sz);
        double scale = std::pow(std::abs(db.determinant()), 1.0 / sz);
        IwasawaNAK nak = detail::nak_matrix(db / scale);
        n_blocks.push_back(nak.n);
        a_blocks.push_back(scale * nak.a);
        k_blocks.push_back(nak.k);
        at += sz;
    }

    NAH out;
    out.n = udl.u * block_diag_of(n_blocks, g.n);
    Eigen::MatrixXd ahat = block_diag_of(a_blocks, g.n);
    Eigen::VectorXd sect_inv = sect.diagonal().cwiseInverse();
    out.a = ahat * sect_inv.asDiagonal();
    out.h = sect * (block_diag_of(k_blocks, g.n) * udl.l) * sect_inv.asDiagonal();
    return out;
}

bool subgroup_membership(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& x,
                         const Eigen::VectorXd& t, const Eigen::MatrixXd& conj,
                         const Tolerances& tol, double* residual) {
    if (!g.sl_family) throw Unsupported("membership test needs an sl backend");
    Eigen::MatrixXd z = x;
    if (conj.size() > 0) z = conj.inverse() * x * conj;
    Eigen::MatrixXd sect = a_t_section(g, rd, t, tol);
    Eigen::VectorXd sect_inv = sect.diagonal().cwiseInverse();
    Eigen::MatrixXd w = sect_inv.asDiagonal() * z * sect;

    std::vector<int> sizes = detail::block_sizes_for(g, rd, support(t));
    double res = std::abs(w.determinant() - 1.0);
    Eigen::Index at = 0;
    for (int sz : sizes) {
        Eigen::MatrixXd wb = w.block(at, at, sz, sz);
        res = std::max(res, (wb * wb.transpose() - Eigen::MatrixXd::Identity(sz, sz)).norm());
        if (at + sz < g.n)
            res = std::max(res, w.block(at, at + sz, sz, g.n - at - sz).norm());
        at += sz;
    }
    if (residual) *residual = res;
    double wn = w.norm();
    return res <= tol.fact * std::max(1.0, wn * wn);
}

bool subgroup_membership(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& x,
                         const std::vector<int>& subset, const Eigen::MatrixXd& conj,
                         const Tolerances& tol, double* residual) {
    Eigen::VectorXd t = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rd.simple.size()));
    for (int j : subset) {
        if (j < 0 || j >= t.size()) throw UnknownRoot("simple-root index out of range");
        t[j] = 1.0;
    }
    return subgroup_membership(g, rd, x, t, conj, tol, residual);
}

SubgroupGenerators h_t_generators(const Group& g, const RootDatum& rd, const Eigen::VectorXd& t) {
    DeformedBasis basis = h_t_basis(g, rd, t);
    SubgroupGenerators gen;
    gen.algebra.resize(g.dim(), static_cast<Eigen::Index>(basis.vecs.size()));
    for (std::size_t i = 0; i < basis.vecs.size(); ++i) {
        const Eigen::VectorXd& c = basis.vecs[i].coords;
        gen.algebra.col(static_cast<Eigen::Index>(i)) = c / c.norm();
    }
    gen.reps = g.m_reps;
    return gen;
}

SubgroupGenerators conjugate_generators(const Group& g, const SubgroupGenerators& gen,
                                        const Eigen::MatrixXd& c) {
    SubgroupGenerators out;
    Eigen::MatrixXd cinv = c.inverse();
    out.algebra.resize(gen.algebra.rows(), gen.algebra.cols());
    for (Eigen::Index j = 0; j < gen.algebra.cols(); ++j)
        out.algebra.col(j) = g.coords(c * g.from_coords(gen.algebra.col(j)) * cinv);
    for (const auto& r : gen.reps) out.reps.push_back(c * r * cinv);
    return out;
}

}  // namespace satake
