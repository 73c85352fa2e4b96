#pragma once

#include <Eigen/Dense>

#include "satake/group.hpp"

namespace satake {

struct IwasawaKAN {
    Eigen::MatrixXd k, a, n;
};

struct IwasawaNAK {
    Eigen::MatrixXd n, a, k;
};

struct CartanKAK {
    Eigen::MatrixXd k1, a, k2;
};

// g = k a n with k special orthogonal, a positive diagonal, n unit upper
// triangular.
IwasawaKAN factorize_kan(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol = {});

// g = n a k, the opposite order.
IwasawaNAK factorize_nak(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol = {});

// g = k1 a k2 with the diagonal of a ascending, so a^alpha <= 1 for every
// positive root.
CartanKAK factorize_kak(const Group& g, const Eigen::MatrixXd& x, const Tolerances& tol = {});

namespace detail {

// Raw matrix factorizations without group membership checks; k comes out
// orthogonal but may have determinant -1 when the input does.
IwasawaKAN kan_matrix(const Eigen::MatrixXd& m);
IwasawaNAK nak_matrix(const Eigen::MatrixXd& m);

}  // namespace detail

}  // namespace satake
