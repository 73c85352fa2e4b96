#pragma once

namespace satake {

/// Numerical tolerances threaded through every operation.  The defaults are
/// deliberate: `alg` guards Lie-algebra identities (bracket residuals,
/// equivariance), `fact` guards matrix factorization residuals and group
/// membership, `integrality` guards integer recognition (root coefficients),
/// and `rank` is the relative singular-value threshold used for rank
/// decisions, subspace intersections and eigenvalue clustering.
struct Tolerances {
    double alg = 1e-10;
    double fact = 1e-9;
    double integrality = 1e-6;
    double rank = 1e-8;
};

} // namespace satake
