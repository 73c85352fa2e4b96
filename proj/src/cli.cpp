#include "satake/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
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

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Eigen::VectorXd parse_vector(const std::string& s) {
    const auto parts = split(s, ',');
    Eigen::VectorXd v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = parse_double(trimmed(parts[i]));
    return v;
}

Eigen::MatrixXd parse_matrix(const std::string& s) {
    const auto rows = split(s, ';');
    std::vector<Eigen::VectorXd> parsed;
    for (const std::string& r : rows) parsed.push_back(parse_vector(r));
    const Eigen::Index cols = parsed.front().size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(parsed.size()), cols);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        if (parsed[i].size() != cols) throw UsageError("ragged matrix literal");
        m.row(static_cast<Eigen::Index>(i)) = parsed[i];
    }
    return m;
}

// "a1,a2" (1-based names) or "0,1" (indices); empty means the empty set.
std::vector<int> parse_subset(const std::string& s, int rank) {
    std::vector<int> out;
    if (trimmed(s).empty()) return out;
    for (const std::string& raw : split(s, ',')) {
        const std::string tok = trimmed(raw);
        int idx = 0;
        if (!tok.empty() && (tok[0] == 'a' || tok[0] == 'A')) {
            idx = static_cast<int>(parse_double(tok.substr(1))) - 1;
        } else {
            idx = static_cast<int>(parse_double(tok));
        }
        if (idx < 0 || idx >= rank) throw UsageError("subset index out of range: '" + tok + "'");
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json vector_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

Eigen::MatrixXd json_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw UsageError(std::string(what) + ": expected an array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
            throw UsageError(std::string(what) + ": ragged rows");
        for (Eigen::Index k = 0; k < cols; ++k) {
            if (!j[i][k].is_number()) throw UsageError(std::string(what) + ": non-numeric entry");
            m(i, k) = j[i][k].get<double>();
        }
    }
    return m;
}

Eigen::VectorXd json_vector(const json& j, const char* what) {
    if (!j.is_array()) throw UsageError(std::string(what) + ": expected an array");
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw UsageError(std::string(what) + ": non-numeric entry");
        v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    }
    return v;
}

json parse_json_arg(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError(std::string(what) + ": invalid JSON");
    return j;
}

Arrow arrow_from_json(const Group& g, const json& j, const Tolerances& tol) {
    if (!j.is_object() || !j.contains("gamma") || !j.contains("g") || !j.contains("t"))
        throw UsageError("arrow literal needs fields gamma, g, t");
    return make_arrow(g, json_matrix(j["gamma"], "gamma"),
                      oshima_point(json_matrix(j["g"], "g"), json_vector(j["t"], "t")), tol);
}

struct Globals {
    std::string group = "sl2r";
    std::uint64_t seed = 42;
    Tolerances tol;
    int json_indent = 2;
    std::string fault_inject;
    std::string config;
};

void load_config(Globals& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw UsageError("config file is not a JSON object");
    if (j.contains("group")) g.group = j["group"].get<std::string>();
    if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
    const auto num = [&](const char* a, const char* b, double& dst) {
        if (j.contains(a)) dst = j[a].get<double>();
        if (j.contains(b)) dst = j[b].get<double>();
    };
    num("tol-alg", "tol_alg", g.tol.alg);
    num("tol-fact", "tol_fact", g.tol.fact);
    if (j.contains("json-indent")) g.json_indent = j["json-indent"].get<int>();
    if (j.contains("json_indent")) g.json_indent = j["json_indent"].get<int>();
    if (j.contains("fault-inject")) g.fault_inject = j["fault-inject"].get<std::string>();
    if (j.contains("fault_inject")) g.fault_inject = j["fault_inject"].get<std::string>();
}

void emit(std::ostream& out, const json& j, int indent) {
    out << (indent < 0 ? j.dump() : j.dump(indent)) << "\n";
}

void add_common(CLI::App* sub, Globals& g) {
    sub->add_option("--group", g.group, "backend name (sl2r, sl3r, ...)")->capture_default_str();
    sub->add_option("--seed", g.seed, "random seed")->capture_default_str();
    sub->add_option("--tol-alg", g.tol.alg, "algebra tolerance")->capture_default_str();
    sub->add_option("--tol-fact", g.tol.fact, "factorization tolerance")->capture_default_str();
    sub->add_option("--json-indent", g.json_indent, "JSON indent, negative for compact")
        ->capture_default_str();
    sub->add_option("--config", g.config, "JSON config file with the same keys");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size())
                load_config(g, args[i + 1]);
            else if (args[i].rfind("--config=", 0) == 0)
                load_config(g, args[i].substr(9));
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"deformation, compactification and groupoid toolkit for SL(n,R)"};
    app.require_subcommand(1);

    auto* roots_cmd = app.add_subcommand("roots", "restricted root decomposition");
    add_common(roots_cmd, g);

    auto* parabolic_cmd = app.add_subcommand("parabolic", "parabolic pieces for a subset of simple roots");
    add_common(parabolic_cmd, g);
    std::string subset_str;
    parabolic_cmd->add_option("--subset", subset_str, "simple roots, e.g. 'a1' or '0,1'; empty set by default");

    auto* deform_cmd = app.add_subcommand("deform", "deformed subalgebra at a parameter");
    add_common(deform_cmd, g);
    std::string t_str = "1";
    std::string emit_what = "basis";
    int max_points = 64;
    deform_cmd->add_option("--t", t_str, "parameter, e.g. '0.5' or '1,0'")->capture_default_str();
    deform_cmd->add_option("--emit", emit_what, "basis or sample")
        ->check(CLI::IsMember({"basis", "sample"}))
        ->capture_default_str();
    deform_cmd->add_option("--max-points", max_points, "cap on emitted sample points")->capture_default_str();

    auto* fell_cmd = app.add_subcommand("fell-limit", "windowed Hausdorff distances along a limit path");
    add_common(fell_cmd, g);
    std::string path_str = "t=2^-n";
    std::string pattern_str;
    int steps = 10;
    double radius = 10.0, eps = 0.05;
    std::string csv_path;
    fell_cmd->add_option("--path", path_str, "path form; only 't=2^-n' is recognized")->capture_default_str();
    fell_cmd->add_option("--pattern", pattern_str, "limit sign pattern, e.g. '1,0'; zero pattern by default");
    fell_cmd->add_option("--steps", steps, "largest n")->check(CLI::Range(1, 20))->capture_default_str();
    fell_cmd->add_option("--radius", radius, "window radius")->capture_default_str();
    fell_cmd->add_option("--eps", eps, "sampling resolution")->capture_default_str();
    fell_cmd->add_option("--csv", csv_path, "also write an n,distance table to this file");

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit class of a parameter");
    add_common(orbit_cmd, g);
    std::string orbit_t;
    orbit_cmd->add_option("--t", orbit_t, "parameter vector, e.g. '1,0'")->required();

    auto* sphere_cmd = app.add_subcommand("sphere", "rank-one sphere model of a point");
    add_common(sphere_cmd, g);
    std::string g_str = "1,0;0,1";
    std::string sphere_t = "1";
    sphere_cmd->add_option("--g", g_str, "group element, rows ';'-separated")->capture_default_str();
    sphere_cmd->add_option("--t", sphere_t, "parameter")->capture_default_str();

    auto* compose_cmd = app.add_subcommand("compose", "compose two arrows (second after first)");
    add_common(compose_cmd, g);
    std::string arrow1_str, arrow2_str;
    compose_cmd->add_option("--arrow1", arrow1_str, "JSON {\"gamma\":[[..]],\"g\":[[..]],\"t\":[..]}")->required();
    compose_cmd->add_option("--arrow2", arrow2_str, "JSON arrow applied second")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "coset labels of an arrow over a stratum");
    add_common(reduce_cmd, g);
    std::string reduce_orbit, reduce_arrow;
    reduce_cmd->add_option("--orbit", reduce_orbit, "subset of simple roots, e.g. 'a1'");
    reduce_cmd->add_option("--arrow", reduce_arrow, "JSON arrow literal")->required();

    auto* bmodel_cmd = app.add_subcommand("bmodel", "model scaling groupoid");
    add_common(bmodel_cmd, g);
    bool do_compose = false, do_derivative = false;
    std::string b1_str, b2_str, word_str, a_elem_str, t0_str;
    std::string alpha_str = "0";
    bmodel_cmd->add_flag("--compose", do_compose, "compose --b2 after --b1");
    bmodel_cmd->add_flag("--normal-derivative", do_derivative, "chart-coordinate derivative at --t0");
    bmodel_cmd->add_option("--b1", b1_str, "JSON {\"m\":[..],\"a\":[..]}");
    bmodel_cmd->add_option("--b2", b2_str, "JSON model arrow applied second");
    bmodel_cmd->add_option("--word", word_str, "JSON {\"rep\":0,\"letters\":[[..],..]}");
    bmodel_cmd->add_option("--a-elem", a_elem_str, "split-torus coefficients, e.g. '0.7' or '0.7,-0.2'");
    bmodel_cmd->add_option("--t0", t0_str, "base parameter with a vanishing coordinate");
    bmodel_cmd->add_option("--alpha", alpha_str, "simple root, e.g. 'a1' or '0'")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run every property check and emit a report");
    add_common(verify_cmd, g);
    verify_cmd->add_option("--fault-inject", g.fault_inject, "perturb the named check's input");

    std::vector<const char*> argv;
    argv.push_back("satake");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto run = [&]() -> int {
        const Group grp = build_group(g.group, g.tol);
        const RootDatum rd = restricted_root_decomposition(grp, g.tol);
        const int rank = static_cast<int>(rd.simple.size());

        if (app.got_subcommand(roots_cmd)) {
            json j;
            j["group"] = g.group;
            j["rank"] = rank;
            j["dim"] = grp.dim();
            j["dims"] = {{"k", rd.k_space.cols()}, {"p", rd.p_space.cols()}, {"m", rd.m_space.cols()},
                         {"n", rd.n_space.cols()}};
            json pos = json::array();
            for (std::size_t i = 0; i < rd.positive.size(); ++i) {
                json entry;
                json coeff = json::array();
                for (int k = 0; k < rank; ++k) coeff.push_back(rd.coeff(static_cast<Eigen::Index>(i), k));
                entry["coeff"] = coeff;
                entry["multiplicity"] = rd.positive[i].multiplicity();
                pos.push_back(entry);
            }
            j["positive"] = pos;
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(parabolic_cmd)) {
            const auto subset = parse_subset(subset_str, rank);
            const ParabolicDatum pd = parabolic_datum(grp, rd, subset, g.tol);
            json j;
            j["group"] = g.group;
            j["subset"] = subset;
            j["dims"] = {{"a_I", pd.a_I.cols()},   {"m_I", pd.m_I.cols()}, {"n_I", pd.n_I.cols()},
                         {"nbar_I", pd.nbar_I.cols()}, {"k_I", pd.k_I.cols()}, {"h_I", pd.h_I.cols()},
                         {"p_I", pd.p_I.cols()}};
            j["normalizer_dim"] = normalizer_subalgebra(grp, pd.h_I, g.tol).cols();
            j["a_I_basis"] = matrix_json(pd.a_I);
            j["h_I_basis"] = matrix_json(pd.h_I);
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(deform_cmd)) {
            const Eigen::VectorXd t = parse_vector(t_str);
            if (t.size() != rank) throw UsageError("parameter has the wrong rank");
            json j;
            j["group"] = g.group;
            j["t"] = vector_json(t);
            if (emit_what == "basis") {
                const DeformedBasis db = h_t_basis(grp, rd, t);
                json vecs = json::array();
                for (const DeformedVector& v : db.vecs) {
                    json e;
                    e["pos_root"] = v.pos_root;
                    e["coords"] = vector_json(v.coords);
                    if (v.pos_root >= 0) e["weight"] = t_pow_2gamma(rd, v.pos_root, t);
                    vecs.push_back(e);
                }
                j["vectors"] = vecs;
                const KNSplit split = split_k_n(grp, rd, t);
                j["split"] = {{"k_dim", split.k_part.cols()}, {"n_dim", split.n_part.cols()}};
            } else {
                const SampledClosedSet set =
                    sample_subgroup(grp, h_t_generators(grp, rd, t), 5.0, 0.1, g.seed);
                j["count"] = set.points.size();
                json pts = json::array();
                for (std::size_t i = 0; i < set.points.size() && i < static_cast<std::size_t>(max_points); ++i)
                    pts.push_back(matrix_json(set.points[i]));
                j["points"] = pts;
            }
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(fell_cmd)) {
            std::string compact = path_str;
            compact.erase(std::remove_if(compact.begin(), compact.end(),
                                         [](unsigned char ch) { return std::isspace(ch); }),
                          compact.end());
            if (compact != "t=2^-n") throw UsageError("unrecognized path form: '" + path_str + "'");
            Eigen::VectorXd pattern = Eigen::VectorXd::Zero(rank);
            if (!trimmed(pattern_str).empty()) pattern = parse_vector(pattern_str);
            if (pattern.size() != rank) throw UsageError("pattern has the wrong rank");
            for (Eigen::Index i = 0; i < pattern.size(); ++i)
                if (pattern[i] != 0.0 && pattern[i] != 1.0)
                    throw UsageError("pattern entries must be 0 or 1");
            const SampledClosedSet limit =
                sample_subgroup(grp, h_t_generators(grp, rd, pattern), radius, eps, g.seed);
            json rows = json::array();
            std::ostringstream csv;
            csv << "n,distance\n";
            for (int n = 1; n <= steps; ++n) {
                const Eigen::VectorXd tn =
                    pattern + std::pow(2.0, -n) * (Eigen::VectorXd::Ones(rank) - pattern);
                const SampledClosedSet sn =
                    sample_subgroup(grp, h_t_generators(grp, rd, tn), radius, eps, g.seed);
                const double d = local_hausdorff(sn, limit);
                rows.push_back({{"n", n}, {"t", vector_json(tn)}, {"distance", d}});
                csv << n << "," << d << "\n";
            }
            json j;
            j["group"] = g.group;
            j["pattern"] = vector_json(pattern);
            j["radius"] = radius;
            j["eps"] = eps;
            j["rows"] = rows;
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                if (!f) throw UsageError("cannot write csv file: " + csv_path);
                f << csv.str();
            }
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(orbit_cmd)) {
            const Eigen::VectorXd t = parse_vector(orbit_t);
            if (t.size() != rank) throw UsageError("parameter has the wrong rank");
            const OshimaPoint p = oshima_point(Eigen::MatrixXd::Identity(grp.n, grp.n), t);
            const Eigen::VectorXi cls = orbit_class(p);
            json j;
            j["group"] = g.group;
            j["t"] = vector_json(t);
            j["class"] = std::vector<int>(cls.data(), cls.data() + cls.size());
            j["satake"] = satake_member(p);
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(sphere_cmd)) {
            const Eigen::MatrixXd gm = parse_matrix(g_str);
            const Eigen::VectorXd t = parse_vector(sphere_t);
            const SpherePoint z = sl2_sphere(grp, oshima_point(gm, t));
            json j;
            j["group"] = g.group;
            j["num"] = {z.num.real(), z.num.imag()};
            j["den"] = {z.den.real(), z.den.imag()};
            j["infinite"] = z.is_infinity();
            if (!z.is_infinity()) {
                const std::complex<double> v = z.value();
                j["value"] = {v.real(), v.imag()};
            }
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(compose_cmd)) {
            const Arrow a1 = arrow_from_json(grp, parse_json_arg(arrow1_str, "--arrow1"), g.tol);
            const Arrow a2 = arrow_from_json(grp, parse_json_arg(arrow2_str, "--arrow2"), g.tol);
            const Arrow c = compose(grp, rd, a2, a1, g.tol);
            json j;
            j["group"] = g.group;
            j["gamma"] = matrix_json(c.gamma);
            j["base"] = {{"g", matrix_json(c.base.g)}, {"t", vector_json(c.base.t)}};
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(reduce_cmd)) {
            const auto subset = parse_subset(reduce_orbit, rank);
            const Arrow a = arrow_from_json(grp, parse_json_arg(reduce_arrow, "--arrow"), g.tol);
            const ReducedArrow r = orbit_reduction(grp, rd, a, subset, g.tol);
            json j;
            j["group"] = g.group;
            j["subset"] = r.subset;
            j["x2"] = matrix_json(r.x2);
            j["x1"] = matrix_json(r.x1);
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(bmodel_cmd)) {
            if (do_compose == do_derivative)
                throw UsageError("pick exactly one of --compose and --normal-derivative");
            json j;
            j["group"] = g.group;
            if (do_compose) {
                const json j1 = parse_json_arg(b1_str, "--b1");
                const json j2 = parse_json_arg(b2_str, "--b2");
                if (!j1.is_object() || !j1.contains("m") || !j1.contains("a") || !j2.is_object() ||
                    !j2.contains("m") || !j2.contains("a"))
                    throw UsageError("model arrow literal needs fields m and a");
                const ModelBArrow b1 = model_arrow(json_vector(j1["m"], "m"), json_vector(j1["a"], "a"));
                const ModelBArrow b2 = model_arrow(json_vector(j2["m"], "m"), json_vector(j2["a"], "a"));
                const ModelBArrow c = model_compose(b2, b1);
                j["m"] = vector_json(c.m);
                j["m2"] = vector_json(c.m2);
                j["a"] = vector_json(c.a);
            } else {
                if (trimmed(t0_str).empty()) throw UsageError("--normal-derivative needs --t0");
                const Eigen::VectorXd t0 = parse_vector(t0_str);
                if (t0.size() != rank) throw UsageError("t0 has the wrong rank");
                const auto alpha_set = parse_subset(alpha_str, rank);
                if (alpha_set.size() != 1) throw UsageError("--alpha must name one simple root");
                Eigen::MatrixXd gamma;
                if (!trimmed(word_str).empty()) {
                    const json jw = parse_json_arg(word_str, "--word");
                    if (!jw.is_object() || !jw.contains("letters"))
                        throw UsageError("word literal needs a letters field");
                    HWord w;
                    w.rep = jw.value("rep", 0);
                    for (const json& l : jw["letters"]) w.letters.push_back(json_vector(l, "letter"));
                    gamma = evaluate_word(grp, h_t_basis(grp, rd, t0), w);
                } else if (!trimmed(a_elem_str).empty()) {
                    const Eigen::VectorXd c = parse_vector(a_elem_str);
                    if (c.size() != grp.rank_a()) throw UsageError("--a-elem has the wrong rank");
                    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(grp.n, grp.n);
                    for (Eigen::Index k = 0; k < c.size(); ++k)
                        x += c[k] * grp.a_basis[static_cast<std::size_t>(k)];
                    gamma = linalg::expm(x);
                } else {
                    throw UsageError("--normal-derivative needs --word or --a-elem");
                }
                j["t0"] = vector_json(t0);
                j["alpha"] = alpha_set[0];
                j["derivative"] = normal_derivative(grp, rd, gamma, t0, alpha_set[0], g.tol);
            }
            emit(out, j, g.json_indent);
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            const VerifyReport rep = verify_suite(g.group, g.seed, g.tol, g.fault_inject);
            out << report_json(rep, g.json_indent) << "\n";
            return rep.all_pass() ? 0 : 1;
        }

        throw UsageError("no subcommand selected");
    };

    try {
        return run();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace satake
