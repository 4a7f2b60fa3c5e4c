// Python bindings. Structured results cross as JSON text and are decoded in
// weddle/__init__.py.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weddle/algebra/interchange.hpp"
#include "weddle/burkhardt/burkhardt.hpp"
#include "weddle/curve/curve.hpp"
#include "weddle/heis/heisenberg.hpp"
#include "weddle/suite/suite.hpp"
#include "weddle/sympchar/sympchar.hpp"
#include "weddle/theta/weddle.hpp"

namespace py = pybind11;
using namespace weddle;
using Json = suite::Json;

namespace {

sympchar::Characteristic characteristic(const std::array<int, 4>& c) {
    for (int x : c)
        if (x != 0 && x != 1) throw ParseError("characteristic entries must be 0 or 1");
    return sympchar::Characteristic({c[0], c[1]}, {c[2], c[3]});
}

theta::PeriodMatrix period_matrix(const std::optional<std::array<std::complex<double>, 4>>& om) {
    if (!om) return theta::default_period_matrix();
    return theta::PeriodMatrix((*om)[0], (*om)[1], (*om)[2], (*om)[3]);
}

std::string fiber_census(std::int64_t p, int k, std::uint64_t cap) {
    const auto c = burkhardt::count_fibers_ff(p, k, cap);
    auto hist = [](const auto& m) {
        Json h = Json::object();
        for (const auto& [size, n] : m) h[std::to_string(size)] = n;
        return h;
    };
    return Json{{"p", c.p},
                {"k", c.k},
                {"points", c.points},
                {"base_points", c.base_points},
                {"histogram", hist(c.histogram)},
                {"smooth_histogram", hist(c.smooth_histogram)},
                {"singular_images", c.singular_images},
                {"max_smooth_fiber", c.max_smooth_fiber}}
        .dump();
}

std::string run_suite(const std::string& suites, std::uint64_t seed, std::int64_t p, double tol,
                      const std::optional<std::array<std::complex<double>, 4>>& omega,
                      const std::vector<long long>& roots, std::uint64_t cap) {
    suite::RunConfig cfg;
    cfg.suites = suite::parse_suites(suites);
    cfg.seed = seed;
    cfg.p = p;
    cfg.tol = tol;
    if (omega) cfg.omega = period_matrix(omega);
    cfg.roots = roots;
    cfg.point_cap = cap;
    py::gil_scoped_release release;
    return suite::run_suite(cfg).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Level-3 theta, Burkhardt and Weddle computations";

    py::register_exception<Error>(m, "Error");
    py::register_exception<suite::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<UnsupportedDomain>(m, "UnsupportedDomain", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

    m.def("group_order", [](int g, long long n) { return sympchar::group_order(g, n).get_str(); }, py::arg("g"),
          py::arg("n"));
    m.def("gamma_index", [](int g, long long n) { return sympchar::gamma_index(g, n).get_str(); }, py::arg("g"),
          py::arg("n"));
    m.def("characteristic_orbits", [] {
        std::vector<std::vector<std::array<int, 4>>> out;
        for (const auto& o : sympchar::characteristic_orbits(2)) {
            out.emplace_back();
            for (const auto& c : o) out.back().push_back({c.a[0], c.a[1], c.b[0], c.b[1]});
        }
        return out;
    });
    m.def("stabilizer_order", [](std::array<int, 4> c) { return sympchar::stabilizer(characteristic(c)).order; },
          py::arg("characteristic"));

    m.def("verify_heisenberg", [](std::uint64_t seed) {
        const auto r = heis::verify_heisenberg(seed);
        return py::dict(py::arg("group_law") = r.group_law, py::arg("j_intertwining") = r.j_intertwining,
                        py::arg("eigensplit") = r.eigensplit, py::arg("schur_dims") = r.schur_dims,
                        py::arg("block_split") = r.block_split, py::arg("projectivity") = r.projectivity,
                        py::arg("ok") = r.ok());
    }, py::arg("seed") = 1);

    m.def("derive_burkhardt", [](std::int64_t p, std::uint64_t seed) {
        return p == 0 ? algebra::to_interchange(burkhardt::derive_burkhardt_rational(seed).quartic)
                      : algebra::to_interchange(burkhardt::derive_burkhardt_fp(p, seed).quartic, p);
    }, py::arg("p") = 0, py::arg("seed") = 1);
    m.def("steinerian_minus", [](const std::array<long, 4>& z) -> std::optional<std::vector<std::string>> {
        algebra::Vec<algebra::Rational> v;
        for (long x : z) v.push_back(algebra::Rational(x));
        const auto r = burkhardt::steinerian_minus(v);
        if (!r) return std::nullopt;
        std::vector<std::string> out;
        for (const auto& x : *r) out.push_back(x.get_str());
        return out;
    }, py::arg("z"));
    m.def("base_locus_count", &burkhardt::count_base_locus_ff, py::arg("p"), py::arg("k") = 1,
          py::arg("cap") = burkhardt::kDefaultPointCap);
    m.def("_fiber_census", &fiber_census, py::arg("p"), py::arg("k") = 1, py::arg("cap") = burkhardt::kDefaultPointCap);

    m.def("theta", [](std::array<int, 4> c, std::array<std::complex<double>, 2> z,
                      std::optional<std::array<std::complex<double>, 4>> omega) {
        return theta::theta(characteristic(c), z, period_matrix(omega)).value;
    }, py::arg("characteristic"), py::arg("z"), py::arg("omega") = py::none());
    m.def("weddle_from_theta", [](std::array<int, 4> c, std::uint64_t seed,
                                  std::optional<std::array<std::complex<double>, 4>> omega) {
        const auto w = theta::weddle_from_theta(period_matrix(omega), characteristic(c), seed);
        return py::dict(py::arg("fit_nullity") = w.fit_nullity, py::arg("nodes") = w.nodes.size(),
                        py::arg("node_gradient") = w.node_gradient, py::arg("lines") = w.lines.size(),
                        py::arg("line_residual") = w.line_residual, py::arg("twisted_cubic_quadrics") = w.cubic_quadrics,
                        py::arg("rigidity_nullity") = w.rigidity_nullity,
                        py::arg("quartic") = algebra::to_interchange(w.quartic));
    }, py::arg("characteristic") = std::array<int, 4>{1, 0, 1, 0}, py::arg("seed") = 1, py::arg("omega") = py::none());

    m.def("weddle_curve", [](const std::vector<long long>& roots, std::int64_t p, std::uint64_t seed) {
        const auto w = curve::weddle_prime_fit(curve::curve_ff(roots, p), seed);
        return py::dict(py::arg("nullity") = w.nullity, py::arg("nodes") = w.nodes.size(),
                        py::arg("node_gradient") = w.node_gradient, py::arg("lines") = w.lines.size(),
                        py::arg("line_residual") = w.line_residual, py::arg("rigidity_nullity") = w.rigidity_nullity,
                        py::arg("quartic") = algebra::to_interchange(w.quartic, p));
    }, py::arg("roots") = std::vector<long long>{0, 1, 2, 3, 4, 5}, py::arg("p") = 101, py::arg("seed") = 1);

    m.def("_run_suite", &run_suite, py::arg("suites"), py::arg("seed"), py::arg("p"), py::arg("tol"), py::arg("omega"),
          py::arg("roots"), py::arg("cap"));
}
