// weddle: command line front end. JSON on stdout (or --out); exit codes
// 0 ok, 1 a check failed, 2 configuration or input error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weddle/algebra/interchange.hpp"
#include "weddle/burkhardt/burkhardt.hpp"
#include "weddle/curve/curve.hpp"
#include "weddle/heis/heisenberg.hpp"
#include "weddle/suite/suite.hpp"
#include "weddle/sympchar/sympchar.hpp"
#include "weddle/theta/weddle.hpp"

using namespace weddle;
using Json = suite::Json;
using algebra::Complex;
using algebra::Fp;
using algebra::Rational;
using algebra::Vec;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kConfigError = 2;

constexpr const char* kCapEnv = "WEDDLE_POINT_CAP";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const Json& j, const std::string& out) {
    const auto text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << text;
}

std::uint64_t point_cap() {
    const char* env = std::getenv(kCapEnv);
    if (!env || !*env) return burkhardt::kDefaultPointCap;
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw ParseError(std::string(kCapEnv) + " must be a positive integer");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

long long parse_integer(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
}

std::vector<long long> parse_roots(const std::string& text) {
    std::vector<long long> out;
    for (const auto& s : split(text, ',')) out.push_back(parse_integer(s));
    return out;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

sympchar::Characteristic parse_characteristic(const std::vector<int>& v) {
    if (v.size() != 4) throw ParseError("a characteristic needs four entries a1 a2 b1 b2");
    for (int x : v)
        if (x != 0 && x != 1) throw ParseError("characteristic entries must be 0 or 1");
    return sympchar::Characteristic({v[0], v[1]}, {v[2], v[3]});
}

theta::PeriodMatrix load_omega(const std::string& path) {
    return path.empty() ? theta::default_period_matrix() : theta::parse_period_matrix(read_file(path));
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json complex_vec(const Vec<Complex>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_json(z));
    return out;
}

template <class F>
Json exact_vec(const Vec<F>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if constexpr (std::is_same_v<F, Rational>)
            out.push_back(x.get_str());
        else
            out.push_back(x.value());
    }
    return out;
}

// Field flag: "Q", or a prime given as "p" or "Fp:p"; 0 means Q.
std::int64_t parse_field(const std::string& text) {
    if (text == "Q") return 0;
    const auto body = text.rfind("Fp:", 0) == 0 ? text.substr(3) : text;
    const auto p = parse_integer(body);
    if (p < 2 || !algebra::is_prime(static_cast<std::uint64_t>(p))) throw ParseError("field must be Q or a prime");
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-3 theta, Burkhardt and Weddle computations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("--out", out, "Write JSON here instead of stdout");
    std::function<int()> action;

    // --- sympchar
    auto* orbits = app.add_subcommand("orbits", "Sp(4,F_2)-orbits of theta characteristics");
    orbits->callback([&] {
        action = [&] {
            Json j = Json::array();
            for (const auto& o : sympchar::characteristic_orbits(2)) {
                Json members = Json::array();
                for (const auto& m : o) members.push_back(sympchar::to_string(m));
                j.push_back({{"size", o.size()}, {"parity", sympchar::parity(o.front())}, {"members", members}});
            }
            emit({{"orbits", j}}, out);
            return kOk;
        };
    });

    int g = 2;
    long long n = 2;
    auto* order = app.add_subcommand("group-order", "|Sp(2g, Z/n)| and [Gamma_g : Gamma_g(n)]");
    order->add_option("--g", g, "Genus")->required();
    order->add_option("--n", n, "Level")->required();
    order->callback([&] {
        action = [&] {
            emit({{"g", g},
                  {"n", n},
                  {"order", sympchar::group_order(g, n).get_str()},
                  {"formula", sympchar::symplectic_order_formula(g, n).get_str()},
                  {"gamma_index", sympchar::gamma_index(g, n).get_str()}},
                 out);
            return kOk;
        };
    });

    std::string matrix_file;
    std::vector<int> odd_base{1, 0, 1, 0};
    auto* classify = app.add_subcommand("classify", "Congruence subgroups containing an integer symplectic matrix");
    classify->add_option("--matrix", matrix_file, "Whitespace-separated integer grid")->required();
    classify->add_option("--odd-base", odd_base, "Odd characteristic a1 a2 b1 b2 fixing Gamma_2(3)^-")->expected(4);
    classify->callback([&] {
        action = [&] {
            const auto m = sympchar::parse_int_matrix(read_file(matrix_file));
            Json labels = Json::array();
            for (auto l : sympchar::classify_gamma(m, parse_characteristic(odd_base))) labels.push_back(sympchar::to_string(l));
            emit({{"symplectic", m.is_symplectic()}, {"labels", labels}}, out);
            return kOk;
        };
    });

    // --- heis
    std::uint64_t seed = 1;
    auto* hv = app.add_subcommand("heisenberg-verify", "Schroedinger representation and Schur intertwiners");
    hv->add_option("--seed", seed);
    hv->callback([&] {
        action = [&] {
            const auto r = heis::verify_heisenberg(seed);
            emit({{"group_law", r.group_law},
                  {"j_intertwining", r.j_intertwining},
                  {"eigensplit", r.eigensplit},
                  {"schur_dims", r.schur_dims},
                  {"block_split", r.block_split},
                  {"projectivity", r.projectivity},
                  {"sequence", r.sequence},
                  {"generator_solution_dims", r.generator_solution_dims},
                  {"counterexamples", r.counterexamples}},
                 out);
            return r.ok() ? kOk : kCheckFailed;
        };
    });

    // --- burkhardt
    std::string field = "Q";
    auto* derive = app.add_subcommand("derive-burkhardt", "Interpolate the invariant quartic on the St_- image");
    derive->add_option("--field", field, "Q or a prime p > 100 (also Fp:p)");
    derive->add_option("--seed", seed);
    derive->callback([&] {
        action = [&] {
            const auto p = parse_field(field);
            Json j;
            if (p == 0) {
                const auto f = burkhardt::derive_burkhardt_rational(seed);
                j = {{"field", "Q"},
                     {"nullity", f.nullity},
                     {"samples", f.samples},
                     {"monomials", f.monomials},
                     {"readable", algebra::to_readable(f.quartic, "r")},
                     {"quartic", algebra::to_interchange(f.quartic)}};
            } else {
                const auto f = burkhardt::derive_burkhardt_fp(p, seed);
                j = {{"field", "Fp:" + std::to_string(p)},
                     {"nullity", f.nullity},
                     {"samples", f.samples},
                     {"monomials", f.monomials},
                     {"quartic", algebra::to_interchange(f.quartic, p)}};
            }
            emit(j, out);
            return kOk;
        };
    });

    std::string point;
    auto* stein = app.add_subcommand("steinerian", "Kernel vector of M_-[z] from the pfaffian quartics");
    stein->add_option("--point", point, "z1,z2,z3,z4 (rationals)")->required();
    stein->add_option("--field", field, "Q or a prime p");
    stein->callback([&] {
        action = [&] {
            const auto parts = split(point, ',');
            if (parts.size() != 4) throw ParseError("--point needs four coordinates");
            const auto p = parse_field(field);
            Json j = {{"point", parts}};
            if (p == 0) {
                Vec<Rational> z;
                for (const auto& s : parts) z.push_back(parse_rational(s));
                const auto r = burkhardt::steinerian_minus(z);
                j["base_locus"] = !r.has_value();
                if (r) j["r"] = exact_vec(*r);
            } else {
                Vec<Fp> z;
                for (const auto& s : parts) z.push_back(Fp(parse_integer(s), p));
                const auto r = burkhardt::steinerian_minus(z);
                j["base_locus"] = !r.has_value();
                if (r) j["r"] = exact_vec(*r);
            }
            emit(j, out);
            return kOk;
        };
    });

    std::int64_t p = 31;
    int k = 1;
    auto* fibers = app.add_subcommand("fibers", "Fiber sizes of St_- over P^3(F_{p^k})");
    fibers->add_option("--p", p, "Prime, p = 1 mod 3, p <= 200");
    fibers->add_option("--k", k, "Extension degree 1 or 2");
    fibers->callback([&] {
        action = [&] {
            const auto c = burkhardt::count_fibers_ff(p, k, point_cap());
            auto hist = [](const auto& m) {
                Json h = Json::object();
                for (const auto& [size, count] : m) h[std::to_string(size)] = count;
                return h;
            };
            emit({{"p", c.p},
                  {"k", c.k},
                  {"points", c.points},
                  {"base_points", c.base_points},
                  {"images", c.images},
                  {"histogram", hist(c.histogram)},
                  {"smooth_histogram", hist(c.smooth_histogram)},
                  {"singular_histogram", hist(c.singular_histogram)},
                  {"singular_images", c.singular_images},
                  {"max_fiber", c.max_fiber},
                  {"max_smooth_fiber", c.max_smooth_fiber},
                  {"generic_fiber", c.generic_fiber}},
                 out);
            return kOk;
        };
    });

    auto* base = app.add_subcommand("base-locus", "Common zeros of the five pfaffian quartics over F_{p^k}");
    base->add_option("--p", p, "Prime, p = 1 mod 3, p <= 200")->required();
    base->add_option("--k", k, "Extension degree 1 or 2");
    base->callback([&] {
        action = [&] {
            emit({{"p", p}, {"k", k}, {"base_points", burkhardt::count_base_locus_ff(p, k, point_cap())}}, out);
            return kOk;
        };
    });

    // --- theta
    std::string omega_file;
    std::vector<int> chr{1, 0, 1, 0};
    auto* tnull = app.add_subcommand("theta-null", "Level-3 theta-null of a half-period translate");
    tnull->add_option("--omega", omega_file, "File with 8 reals: re/im of O11 O12 O21 O22");
    tnull->add_option("--char", chr, "a1 a2 b1 b2")->expected(4);
    tnull->callback([&] {
        action = [&] {
            const auto om = load_omega(omega_file);
            const auto kappa = parse_characteristic(chr);
            const auto t = theta::theta_null(kappa, om);
            const auto inv = theta::involution_matrix(kappa, om);
            emit({{"omega", om.to_string()},
                  {"char", sympchar::to_string(kappa)},
                  {"parity", t.parity},
                  {"point", complex_vec(t.point)},
                  {"coords", complex_vec(t.coords)},
                  {"off_space", t.off_space},
                  {"det_plus", t.det_plus},
                  {"involution",
                   {{"epsilon", inv.epsilon},
                    {"dim_invariant", inv.dim_invariant},
                    {"dim_anti", inv.dim_anti},
                    {"invariant_j_label", inv.invariant_j_label}}}},
                 out);
            return kOk;
        };
    });

    std::string report;
    double tol = 1e-6;
    auto* wt = app.add_subcommand("weddle-theta", "Quartic surface fitted on the odd side of the theta image");
    wt->add_option("--omega", omega_file, "File with 8 reals");
    wt->add_option("--char", chr, "Odd characteristic a1 a2 b1 b2")->expected(4);
    wt->add_option("--seed", seed);
    wt->add_option("--tol", tol, "Residual tolerance");
    wt->add_option("--report", report, "Write the JSON report here");
    wt->callback([&] {
        action = [&] {
            const auto om = load_omega(omega_file);
            const auto w = theta::weddle_from_theta(om, parse_characteristic(chr), seed);
            Json lines = Json::array();
            for (const auto& l : w.lines) lines.push_back({{"label", l.label}, {"residual", l.residual}});
            Json nodes = Json::array();
            for (const auto& x : w.nodes) nodes.push_back(complex_vec(x));
            const bool ok = w.fit_nullity == 1 && w.node_gradient < tol && w.line_residual < tol &&
                            w.cubic_quadrics == 3 && w.rigidity_nullity == 1 && w.rigidity_distance < tol;
            emit({{"omega", om.to_string()},
                  {"char", sympchar::to_string(w.kappa)},
                  {"ok", ok},
                  {"fit_nullity", w.fit_nullity},
                  {"fit_gap", w.fit_gap},
                  {"fresh_residual", w.fresh_residual},
                  {"nodes", nodes},
                  {"node_value", w.node_value},
                  {"node_gradient", w.node_gradient},
                  {"lines", lines},
                  {"line_residual", w.line_residual},
                  {"twisted_cubic_quadrics", w.cubic_quadrics},
                  {"rigidity_nullity", w.rigidity_nullity},
                  {"rigidity_distance", w.rigidity_distance},
                  {"quartic", algebra::to_interchange(w.quartic)}},
                 report.empty() ? out : report);
            return ok ? kOk : kCheckFailed;
        };
    });

    // --- curve
    std::string roots = "0,1,2,3,4,5";
    std::int64_t cp = 101;
    auto add_curve_opts = [&](CLI::App* sub) {
        sub->add_option("--f", roots, "Roots of the sextic, comma-separated integers");
        sub->add_option("--p", cp, "Prime field");
        sub->add_option("--seed", seed);
    };
    auto* wc = app.add_subcommand("weddle-curve", "W' fitted on secants of the tricanonical curve over F_p");
    add_curve_opts(wc);
    wc->callback([&] {
        action = [&] {
            const auto c = curve::curve_ff(parse_roots(roots), cp);
            const auto w = curve::weddle_prime_fit(c, seed);
            const auto h = curve::hyperplane_section(c, seed + 1);
            Json nodes = Json::array();
            for (const auto& x : w.nodes) nodes.push_back(exact_vec(x));
            const bool ok = w.nullity == 1 && w.node_gradient == 0.0 && w.lines.size() == 25 &&
                            w.line_residual == 0.0 && w.rigidity_nullity == 1 && w.rigidity_distance == 0.0;
            emit({{"p", cp},
                  {"ok", ok},
                  {"embedding_degree", h.multiplicity_total},
                  {"nullity", w.nullity},
                  {"samples", w.samples},
                  {"nodes", nodes},
                  {"node_gradient", w.node_gradient},
                  {"lines", w.lines.size()},
                  {"line_residual", w.line_residual},
                  {"joins_met", w.joins_met},
                  {"rigidity_nullity", w.rigidity_nullity},
                  {"quartic", algebra::to_interchange(w.quartic, cp)}},
                 out);
            return ok ? kOk : kCheckFailed;
        };
    });

    auto* kum = app.add_subcommand("kummer", "Quadrics through the curve, phi and the Kummer quartic over F_p");
    add_curve_opts(kum);
    kum->callback([&] {
        action = [&] {
            const auto c = curve::curve_ff(parse_roots(roots), cp);
            const auto q = curve::quadrics_through_curve(c, seed);
            const auto ph = curve::phi_checks(c, q.basis, seed + 1);
            const auto kf = curve::kummer_fit(c, q.basis, seed + 2);
            Json quadrics = Json::array(), nodes = Json::array();
            for (const auto& f : q.basis) quadrics.push_back(algebra::to_interchange(f, cp));
            for (const auto& x : kf.nodes) nodes.push_back(exact_vec(x));
            const bool ok = q.basis.size() == 4 && ph.secant_constant == 0.0 && ph.tangent_common == 0.0 &&
                            kf.nullity == 1 && kf.nodes.size() == 16 && kf.nodes_distinct && kf.node_gradient == 0.0;
            emit({{"p", cp},
                  {"ok", ok},
                  {"quadrics", quadrics},
                  {"phi_secant_constant", ph.secant_constant == 0.0},
                  {"phi_tangent_common", ph.tangent_common == 0.0},
                  {"origin", exact_vec(ph.origin)},
                  {"nullity", kf.nullity},
                  {"nodes", nodes},
                  {"node_gradient_zero", kf.node_gradient == 0.0},
                  {"quartic", algebra::to_interchange(kf.quartic, cp)}},
                 out);
            return ok ? kOk : kCheckFailed;
        };
    });

    auto* oct = app.add_subcommand("sec-octic", "Secant octic and its restriction to {y = 0} over F_p");
    add_curve_opts(oct);
    oct->callback([&] {
        action = [&] {
            const auto c = curve::curve_ff(parse_roots(roots), cp);
            const auto w = curve::weddle_prime_fit(c, seed);
            const auto s = curve::sec_octic_tangency(c, w.quartic, seed + 1);
            const bool ok = s.nullity == 1 && s.fresh_vanish && s.restriction_proportional;
            emit({{"p", cp},
                  {"ok", ok},
                  {"samples", s.samples},
                  {"monomials", s.monomials},
                  {"nullity", s.nullity},
                  {"fresh_vanish", s.fresh_vanish},
                  {"restriction_proportional_to_square", s.restriction_proportional},
                  {"ratio", s.ratio.value()},
                  {"singular_along_curve", s.singular_along_curve},
                  {"octic", algebra::to_interchange(s.octic, cp)}},
                 out);
            return ok ? kOk : kCheckFailed;
        };
    });

    // --- suites
    std::string suites = "all";
    bool timings = false;
    auto* run = app.add_subcommand("run", "Run check suites and write the JSON report");
    run->add_option("--suite", suites, "Comma-separated: sympchar, heis, burk, theta, curve, cross, all");
    run->add_option("--seed", seed);
    run->add_option("--p", cp, "Prime for the exact curve side and the F_p interpolation");
    run->add_option("--tol", tol, "Tolerance for numeric theta-side checks");
    run->add_option("--omega", omega_file, "File with 8 reals");
    run->add_option("--f", roots, "Roots of the sextic");
    run->add_flag("--timings", timings, "Record runtimes (makes the report run-dependent)");
    run->callback([&] {
        action = [&] {
            suite::RunConfig cfg;
            cfg.suites = suite::parse_suites(suites);
            cfg.seed = seed;
            cfg.p = cp;
            cfg.tol = tol;
            if (!omega_file.empty()) cfg.omega = load_omega(omega_file);
            cfg.roots = parse_roots(roots);
            cfg.point_cap = point_cap();
            cfg.timings = timings;
            const auto rep = suite::run_suite(cfg);
            const auto text = rep.dump();
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out);
                if (!f) throw ParseError("cannot write " + out);
                f << text;
            }
            for (const auto& r : rep.records)
                std::cerr << r.id << " " << suite::to_string(r.status) << (r.error.empty() ? "" : " " + r.error) << "\n";
            return rep.hard_failure() ? kCheckFailed : kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    try {
        return action();
    } catch (const suite::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << " (raise " << kCapEnv << ")\n";
        return kConfigError;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kConfigError;
    } catch (const UnsupportedDomain& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
        return kConfigError;
    } catch (const ShapeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
}
