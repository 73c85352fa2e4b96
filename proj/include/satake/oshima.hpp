#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "satake/degeneration.hpp"

namespace satake {

struct ChartCoords {
    Eigen::MatrixXd n;
    Eigen::VectorXd t;
};

// The class [[g, t]], with cached chart coordinates when known.
struct OshimaPoint {
    Eigen::MatrixXd g;
    Eigen::VectorXd t;
    std::optional<ChartCoords> canonical;
};

OshimaPoint oshima_point(const Eigen::MatrixXd& g, const Eigen::VectorXd& t);

// gamma . [[g, t]] = [[gamma g, t]].
OshimaPoint act(const Eigen::MatrixXd& gamma, const OshimaPoint& p);

// Chart coordinates on the big cell: [[g, t]] = [[n, a.t]] where g = n a h.
ChartCoords canonicalize(const Group& g, const RootDatum& rd, const OshimaPoint& p,
                         const Tolerances& tol = {});
std::optional<ChartCoords> try_canonicalize(const Group& g, const RootDatum& rd,
                                            const OshimaPoint& p, const Tolerances& tol = {});

// Identity plus signed-permutation representatives; the translates of the big
// cell by this list are the charts points are searched in.
std::vector<Eigen::MatrixXd> chart_atlas(const Group& g);

// Equality via a common chart; NotInChart when a point canonicalizes in no
// chart of the atlas.  The coordinate distance in the first common chart is
// written to *distance when given.
bool point_eq(const Group& g, const RootDatum& rd, const OshimaPoint& a, const OshimaPoint& b,
              const Tolerances& tol = {}, double* distance = nullptr);

// Componentwise sign of t; constant on G-orbits.
Eigen::VectorXi orbit_class(const OshimaPoint& p);

// True iff no coordinate is negative: the closure of the dense positive part.
bool satake_member(const OshimaPoint& p);

// [[g, s.t]] for s in {-1, +1}^Sigma.
OshimaPoint z2_flip(const Eigen::VectorXi& s, const OshimaPoint& p);

// A point of the Riemann sphere in homogeneous coordinates.
struct SpherePoint {
    std::complex<double> num, den;

    bool is_infinity() const { return std::abs(den) <= 1e-14 * std::abs(num); }
    std::complex<double> value() const { return num / den; }
};

double chordal(const SpherePoint& a, const SpherePoint& b);
SpherePoint mobius(const Eigen::MatrixXd& g, const SpherePoint& z);

// [[g, t]] -> g . (i t) for the rank-one group.
SpherePoint sl2_sphere(const Group& g, const OshimaPoint& p);

struct CompactWitness {
    Eigen::MatrixXd k;
    Eigen::VectorXd t;  // every |t_alpha| <= 1
    double residual;    // chart-coordinate distance to the input point
};

// Rewrite a dense-orbit point as [[k, t]] with k orthogonal and |t_alpha| <= 1.
CompactWitness compact_witness(const Group& g, const RootDatum& rd, const OshimaPoint& p,
                               const Tolerances& tol = {});

}  // namespace satake
