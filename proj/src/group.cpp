#include <satake/group.hpp>
#include <satake/linalg.hpp>

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace satake {

namespace {

Eigen::VectorXd stack_coefficients(const Eigen::MatrixXd& stacked, const Eigen::MatrixXd& x,
                                   double tol, const char* what) {
    double residual = 0.0;
    Eigen::VectorXd c = linalg::lsq(stacked, linalg::vec(x), &residual);
    const double scale = std::max(1.0, x.norm());
    if (residual > tol * scale) {
        std::ostringstream msg;
        msg << what << ": residual " << residual << " exceeds " << tol * scale;
        if (std::string(what) == "a_coefficients") throw NotInA(msg.str());
        throw NotInGroup(msg.str());
    }
    return c;
}

void validate_cartan_data(const Group& g, const Tolerances& tol) {
    const Eigen::Index d = g.dim();
    const double t = tol.fact;

    if (linalg::rank(g.basis_stack, tol.rank) != d)
        throw InvalidCartanData("basis is linearly dependent");

    // theta is an involutive algebra automorphism.
    if ((g.theta_on_basis * g.theta_on_basis - Eigen::MatrixXd::Identity(d, d)).norm() > t * d)
        throw InvalidCartanData("theta is not involutive");

    // B is symmetric, theta-invariant, and -B(.,theta .) is positive definite
    // (these are exactly the conditions that make the frame construction and
    // the symmetric eigen-decompositions downstream legitimate).
    if ((g.form_on_basis - g.form_on_basis.transpose()).norm() > t * std::max(1.0, g.form_on_basis.norm()))
        throw InvalidCartanData("form is not symmetric");
    Eigen::MatrixXd thf = g.theta_on_basis.transpose() * g.form_on_basis * g.theta_on_basis;
    if ((thf - g.form_on_basis).norm() > t * std::max(1.0, g.form_on_basis.norm()))
        throw InvalidCartanData("form is not theta-invariant");

    // Bracket closure, theta[X,Y] = [theta X, theta Y], and invariance of B.
    std::vector<Eigen::MatrixXd> th(d);
    for (Eigen::Index i = 0; i < d; ++i) th[i] = g.theta(g.basis[i]);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            Eigen::MatrixXd br = g.basis[i] * g.basis[j] - g.basis[j] * g.basis[i];
            if (!g.in_algebra(br, t)) throw InvalidCartanData("basis does not close under bracket");
            Eigen::MatrixXd thbr = th[i] * th[j] - th[j] * th[i];
            if ((g.theta(br) - thbr).norm() > t * std::max(1.0, br.norm()))
                throw InvalidCartanData("theta is not an automorphism");
        }
    }
    for (Eigen::Index i = 0; i < d && i < 8; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index k = 0; k < d; ++k) {
                Eigen::MatrixXd br1 = g.basis[i] * g.basis[j] - g.basis[j] * g.basis[i];
                double lhs = g.form(br1, g.basis[k]);
                Eigen::MatrixXd br2 = g.basis[i] * g.basis[k] - g.basis[k] * g.basis[i];
                double rhs = -g.form(g.basis[j], br2);
                if (std::abs(lhs - rhs) > t * 10 * std::max(1.0, std::abs(lhs)))
                    throw InvalidCartanData("form is not ad-invariant");
            }
        }
    }

    // a_basis: abelian, inside the -1 eigenspace of theta.
    for (const auto& a : g.a_basis) {
        if (!g.in_algebra(a, t)) throw InvalidCartanData("a_basis element outside g");
        if ((g.theta(a) + a).norm() > t * std::max(1.0, a.norm()))
            throw InvalidCartanData("a_basis element not in the -1 eigenspace of theta");
    }
    for (size_t i = 0; i < g.a_basis.size(); ++i)
        for (size_t j = i + 1; j < g.a_basis.size(); ++j) {
            Eigen::MatrixXd br = g.a_basis[i] * g.a_basis[j] - g.a_basis[j] * g.a_basis[i];
            if (br.norm() > t * 10) throw InvalidCartanData("a_basis is not abelian");
        }
    if (linalg::rank(g.a_coords_stack, tol.rank) != g.rank_a())
        throw InvalidCartanData("a_basis is linearly dependent");
}

void finish_build(Group& g, const Tolerances& tol) {
    const Eigen::Index d = g.dim();
    g.basis_stack.resize(static_cast<Eigen::Index>(g.n) * g.n, d);
    for (Eigen::Index i = 0; i < d; ++i) g.basis_stack.col(i) = linalg::vec(g.basis[i]);

    // Gram matrix of <X,Y> = -B(X, theta Y) on the basis and its Cholesky
    // factor; frame coordinates are L^T * (basis coefficients).
    Eigen::MatrixXd gram = -(g.form_on_basis * g.theta_on_basis);
    gram = 0.5 * (gram + gram.transpose());
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw InvalidCartanData("-B(.,theta .) is not positive definite");
    g.chol = llt.matrixL();

    g.theta_coords = g.chol.transpose() * g.theta_on_basis *
                     g.chol.transpose().triangularView<Eigen::Upper>().solve(
                         Eigen::MatrixXd::Identity(d, d));

    g.a_coords_stack.resize(d, g.rank_a());
    for (Eigen::Index k = 0; k < g.rank_a(); ++k)
        g.a_coords_stack.col(k) = g.coords(g.a_basis[static_cast<size_t>(k)], tol.fact);

    validate_cartan_data(g, tol);
}

Group build_sl(int n, const Tolerances& tol) {
    if (n < 2 || n > 9) throw UnsupportedGroup("sl family supports 2 <= n <= 9");
    Group g;
    g.name = "sl" + std::to_string(n) + "r";
    g.sl_family = true;
    g.n = n;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
            e(i, j) = 1.0;
            g.basis.push_back(e);
        }
    // Diagonal part: h_k = E_kk - Id/n.  This ordered family fixes the
    // positivity convention (lexicographic on gamma(h_1),...,gamma(h_{n-1})),
    // which makes N the unit upper triangular subgroup.
    for (int k = 0; k < n - 1; ++k) {
        Eigen::MatrixXd h = -Eigen::MatrixXd::Identity(n, n) / n;
        h(k, k) += 1.0;
        g.basis.push_back(h);
        g.a_basis.push_back(h);
    }

    const Eigen::Index d = g.dim();
    Eigen::MatrixXd stack(static_cast<Eigen::Index>(n) * n, d);
    for (Eigen::Index i = 0; i < d; ++i) stack.col(i) = linalg::vec(g.basis[i]);
    g.theta_on_basis.resize(d, d);
    g.form_on_basis.resize(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        Eigen::MatrixXd th = -g.basis[i].transpose();
        g.theta_on_basis.col(i) = linalg::lsq(stack, linalg::vec(th));
        for (Eigen::Index j = 0; j < d; ++j)
            g.form_on_basis(j, i) = (g.basis[j] * g.basis[i]).trace();
    }

    // Components of M = diagonal sign matrices with determinant one,
    // identity first, then lexicographic.
    for (int mask = 0; mask < (1 << n); ++mask) {
        int parity = 0;
        for (int b = 0; b < n; ++b) parity ^= (mask >> b) & 1;
        if (parity != 0) continue;
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
        for (int b = 0; b < n; ++b)
            if ((mask >> b) & 1) m(b, b) = -1.0;
        g.m_reps.push_back(m);
    }

    finish_build(g, tol);
    return g;
}

Eigen::MatrixXd parse_matrix(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols,
                             const char* what) {
    Eigen::MatrixXd m(rows, cols);
    if (!j.is_array()) throw InvalidCartanData(std::string(what) + ": expected an array");
    if (!j.empty() && j[0].is_array()) {
        if (static_cast<Eigen::Index>(j.size()) != rows)
            throw InvalidCartanData(std::string(what) + ": wrong row count");
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (static_cast<Eigen::Index>(j[r].size()) != cols)
                throw InvalidCartanData(std::string(what) + ": wrong column count");
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
        }
    } else {
        if (static_cast<Eigen::Index>(j.size()) != rows * cols)
            throw InvalidCartanData(std::string(what) + ": wrong entry count");
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c)
                m(r, c) = j[static_cast<size_t>(r * cols + c)].get<double>();
    }
    return m;
}

} // namespace

Eigen::VectorXd Group::coefficients(const Eigen::MatrixXd& x, double tol) const {
    if (x.rows() != n || x.cols() != n) throw DimensionMismatch("coefficients: wrong matrix size");
    return stack_coefficients(basis_stack, x, tol, "coefficients");
}

Eigen::VectorXd Group::coords(const Eigen::MatrixXd& x, double tol) const {
    return chol.transpose() * coefficients(x, tol);
}

Eigen::MatrixXd Group::from_coords(const Eigen::VectorXd& c) const {
    if (c.size() != dim()) throw DimensionMismatch("from_coords: wrong size");
    Eigen::VectorXd coeff = chol.transpose().triangularView<Eigen::Upper>().solve(c);
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < dim(); ++i) x += coeff(i) * basis[static_cast<size_t>(i)];
    return x;
}

Eigen::VectorXd Group::a_coefficients(const Eigen::MatrixXd& x, double tol) const {
    if (x.rows() != n || x.cols() != n) throw DimensionMismatch("a_coefficients: wrong matrix size");
    Eigen::MatrixXd stack(static_cast<Eigen::Index>(n) * n, rank_a());
    for (Eigen::Index k = 0; k < rank_a(); ++k) stack.col(k) = linalg::vec(a_basis[static_cast<size_t>(k)]);
    return stack_coefficients(stack, x, tol, "a_coefficients");
}

bool Group::in_algebra(const Eigen::MatrixXd& x, double tol) const {
    if (x.rows() != n || x.cols() != n) return false;
    double residual = 0.0;
    linalg::lsq(basis_stack, linalg::vec(x), &residual);
    return residual <= tol * std::max(1.0, x.norm());
}

bool Group::in_group(const Eigen::MatrixXd& g, double tol) const {
    if (!sl_family) throw Unsupported("group membership is defined for the SL backends only");
    if (g.rows() != n || g.cols() != n) return false;
    const double scale = std::max(1.0, std::pow(g.norm(), n - 1));
    return std::abs(g.determinant() - 1.0) <= tol * scale;
}

Eigen::MatrixXd Group::theta(const Eigen::MatrixXd& x) const {
    Eigen::VectorXd c = coefficients(x);
    Eigen::VectorXd tc = theta_on_basis * c;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < dim(); ++i) out += tc(i) * basis[static_cast<size_t>(i)];
    return out;
}

double Group::form(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const {
    return coefficients(x).dot(form_on_basis * coefficients(y));
}

double Group::inner(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) const {
    return coords(x).dot(coords(y));
}

Eigen::MatrixXd ad_matrix(const Group& g, const Eigen::MatrixXd& z) {
    const Eigen::Index d = g.dim();
    Eigen::MatrixXd out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        Eigen::MatrixXd bi = g.from_coords(Eigen::VectorXd::Unit(d, i));
        out.col(i) = g.coords(z * bi - bi * z);
    }
    return out;
}

Group build_group(const std::string& name, const Tolerances& tol) {
    if (name.size() == 4 && name.substr(0, 2) == "sl" && name.back() == 'r' &&
        name[2] >= '2' && name[2] <= '9')
        return build_sl(name[2] - '0', tol);
    throw UnsupportedGroup("unknown group name: " + name);
}

Group build_group_from_spec(const std::string& json_text, const Tolerances& tol) {
    nlohmann::json spec;
    try {
        spec = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidCartanData(std::string("GroupSpec parse error: ") + e.what());
    }
    if (spec.contains("family")) {
        if (spec["family"].get<std::string>() != "sl")
            throw UnsupportedGroup("unknown family in GroupSpec");
        return build_sl(spec.at("n").get<int>(), tol);
    }
    if (!spec.contains("raw")) throw InvalidCartanData("GroupSpec needs 'family' or 'raw'");
    const auto& raw = spec["raw"];

    Group g;
    g.name = "raw";
    g.sl_family = false;
    g.n = raw.at("n").get<int>();
    if (g.n < 1) throw InvalidCartanData("raw: n must be positive");

    for (const auto& b : raw.at("basis"))
        g.basis.push_back(parse_matrix(b, g.n, g.n, "raw basis"));
    if (g.basis.empty()) throw InvalidCartanData("raw: empty basis");
    const Eigen::Index d = g.dim();
    g.theta_on_basis = parse_matrix(raw.at("theta_matrix"), d, d, "theta_matrix");
    g.form_on_basis = parse_matrix(raw.at("form_matrix"), d, d, "form_matrix");
    for (const auto& a : raw.at("a_basis"))
        g.a_basis.push_back(parse_matrix(a, g.n, g.n, "raw a_basis"));
    if (g.a_basis.empty()) throw InvalidCartanData("raw: empty a_basis");
    g.m_reps.push_back(Eigen::MatrixXd::Identity(g.n, g.n));

    finish_build(g, tol);
    return g;
}

} // namespace satake
