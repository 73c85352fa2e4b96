#pragma once

#include <vector>

#include <Eigen/Dense>

#include "satake/oshima.hpp"

namespace satake {

// The arrow [[gamma, g, t]] from [[g, t]] to [[gamma g, t]], kept as a
// representative over its source.
struct Arrow {
    Eigen::MatrixXd gamma;
    OshimaPoint base;
};

Arrow make_arrow(const Group& g, const Eigen::MatrixXd& gamma, const OshimaPoint& base,
                 const Tolerances& tol = {});

OshimaPoint source(const Arrow& a);
OshimaPoint target(const Arrow& a);
Arrow unit_arrow(const OshimaPoint& p);
Arrow arrow_inverse(const Arrow& a);

// after . first; sources and targets are compared as points.
Arrow compose(const Group& g, const RootDatum& rd, const Arrow& after, const Arrow& first,
              const Tolerances& tol = {});

// Equal bases and gamma_b^{-1} gamma_a in the isotropy subgroup of the base.
bool arrow_eq(const Group& g, const RootDatum& rd, const Arrow& a, const Arrow& b,
              const Tolerances& tol = {});

// Chart picture of arrows over the big cell: t2 = a . t1.
struct ChartArrow {
    ChartCoords to;
    Eigen::MatrixXd a;
    ChartCoords from;
};

ChartArrow chart_arrow(const Group& g, const RootDatum& rd, const Eigen::MatrixXd& n2,
                       const Eigen::MatrixXd& a, const ChartCoords& from,
                       const Tolerances& tol = {});
ChartArrow chart_unit(const ChartCoords& at);
ChartArrow chart_inverse(const ChartArrow& w);
ChartArrow chart_compose(const Group& g, const RootDatum& rd, const ChartArrow& after,
                         const ChartArrow& first, const Tolerances& tol = {});

// ((n2,t2), a, (n1,t1)) -> Arrow(n2 a n1^{-1} over [[n1, t1]]), and its
// inverse for arrows with both endpoints in the big cell.
Arrow chart_iso(const ChartArrow& w);
ChartArrow chart_iso_inv(const Group& g, const RootDatum& rd, const Arrow& a,
                         const Tolerances& tol = {});

// Coset labels of an arrow over the stratum of a subset of simple roots:
// the pair (gamma g a~, g a~), each read modulo the degenerate subgroup,
// jointly modulo a shared right shift fixing the stratum.
struct ReducedArrow {
    Eigen::MatrixXd x2, x1;
    std::vector<int> subset;
};

ReducedArrow orbit_reduction(const Group& g, const RootDatum& rd, const Arrow& a,
                             const std::vector<int>& subset, const Tolerances& tol = {});
bool reduced_eq(const Group& g, const RootDatum& rd, const ReducedArrow& r,
                const ReducedArrow& s, const Tolerances& tol = {});

}  // namespace satake
