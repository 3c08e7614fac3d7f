#include "gkp/closed_forms.hpp"
#include "gkp/compositions.hpp"
#include "gkp/core.hpp"
#include "gkp/io.hpp"
#include "gkp/lattice_paths.hpp"
#include "gkp/poly_basis.hpp"
#include "gkp/stirling.hpp"
#include "gkp/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::object to_py(const gkp::Rational& value) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(gkp::to_string(value));
}

gkp::Rational from_py(const py::handle& value) {
    if (py::isinstance<py::float_>(value)) throw py::type_error("floats are not exact; pass int, Fraction or str");
    return gkp::parse_rational(py::str(value).cast<std::string>());
}

gkp::AffineWeight weight_from_py(const py::sequence& seq) {
    if (py::len(seq) != 3) throw py::value_error("a weight is a sequence of three rationals (c0, c1, c2)");
    return {from_py(seq[0]), from_py(seq[1]), from_py(seq[2])};
}

gkp::GkpSpec spec_from_py(const py::sequence& a, const py::sequence& b) { return {weight_from_py(a), weight_from_py(b)}; }

py::list rationals_to_py(const std::vector<gkp::Rational>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

std::vector<gkp::Rational> rationals_from_py(const py::sequence& seq) {
    std::vector<gkp::Rational> out;
    for (const auto& v : seq) out.push_back(from_py(v));
    return out;
}

py::list triangle_to_py(const gkp::Triangle& t) {
    py::list rows;
    for (const auto& row : t.rows()) rows.append(rationals_to_py(row));
    return rows;
}

gkp::LatticePath path_from_py(const std::string& text) {
    gkp::LatticePath p;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '.') {
            ++i;
        } else if (text.compare(i, 2, "NE") == 0) {
            p.steps.push_back(gkp::Step::NE);
            i += 2;
        } else if (text[i] == 'E') {
            p.steps.push_back(gkp::Step::E);
            ++i;
        } else {
            throw py::value_error("path strings use the steps E and NE");
        }
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact two-term triangular recurrences, weighted lattice paths and r-Eulerian numbers.";

    m.def("eval_weight", [](const py::sequence& w, long n, long k) { return to_py(weight_from_py(w)(n, k)); },
          py::arg("w"), py::arg("n"), py::arg("k"));
    m.def("triangle_by_recurrence",
          [](const py::sequence& a, const py::sequence& b, std::size_t n_max) {
              return triangle_to_py(gkp::triangle_by_recurrence(spec_from_py(a, b), n_max));
          },
          py::arg("a"), py::arg("b"), py::arg("n_max"), "Rows T(n, 0..n) for n = 0..n_max.");

    m.def("enumerate_paths",
          [](long n, long k) {
              std::vector<std::string> out;
              gkp::for_each_path(n, k, [&](const gkp::LatticePath& p) { out.push_back(gkp::to_string(p)); });
              return out;
          },
          py::arg("n"), py::arg("k"));
    m.def("path_weight",
          [](const std::string& path, const py::sequence& a, const py::sequence& b) {
              return to_py(gkp::path_weight(path_from_py(path), spec_from_py(a, b)));
          },
          py::arg("path"), py::arg("a"), py::arg("b"));
    m.def("sigma_of_path", [](const std::string& path) { return gkp::sigma_of_path(path_from_py(path)).values; },
          py::arg("path"));
    m.def("sigma_tilde",
          [](std::vector<long> sigma, long n) { return gkp::sigma_tilde({std::move(sigma), n}).values; },
          py::arg("sigma"), py::arg("n"));

    auto spec_fn = [&m](const char* name, gkp::Rational (*fn)(long, long, const gkp::GkpSpec&)) {
        m.def(name,
              [fn](long n, long k, const py::sequence& a, const py::sequence& b) {
                  return to_py(fn(n, k, spec_from_py(a, b)));
              },
              py::arg("n"), py::arg("k"), py::arg("a"), py::arg("b"));
    };
    spec_fn("total_weight_paths", gkp::total_weight_paths);
    spec_fn("explicit_sum_paths", gkp::explicit_sum_paths);
    spec_fn("closed_form_general", gkp::closed_form_general);
    spec_fn("closed_form_a2zero", gkp::closed_form_a2zero);
    spec_fn("alt_sum_bk", gkp::alt_sum_bk);

    m.def("explicit_sum_b1",
          [](long n, long k, const py::sequence& a) { return to_py(gkp::explicit_sum_b1(n, k, weight_from_py(a))); },
          py::arg("n"), py::arg("k"), py::arg("a"));
    m.def("alt_sum_b1",
          [](long n, long k, const py::sequence& a) { return to_py(gkp::alt_sum_b1(n, k, weight_from_py(a))); },
          py::arg("n"), py::arg("k"), py::arg("a"));
    m.def("rising_factorial",
          [](const py::handle& x, const py::handle& step, long count) {
              return to_py(gkp::rising_factorial(from_py(x), from_py(step), count));
          },
          py::arg("x"), py::arg("step"), py::arg("m"));

    m.def("enumerate_weak_compositions",
          [](long n, long k) {
              std::vector<std::vector<long>> out;
              gkp::for_each_weak_composition(n, k, [&](const gkp::WeakComposition& c) { out.push_back(c.parts); });
              return out;
          },
          py::arg("n"), py::arg("k"));
    m.def("comp_to_sigma",
          [](std::vector<long> parts, long n) {
              const long k = static_cast<long>(parts.size()) - 1;
              return gkp::comp_to_sigma({std::move(parts), n, k}).values;
          },
          py::arg("parts"), py::arg("n"));
    m.def("sigma_tilde_to_comp",
          [](std::vector<long> st, long n) { return gkp::sigma_tilde_to_comp({std::move(st), n}).parts; },
          py::arg("sigma_tilde"), py::arg("n"));
    m.def("weight_beta",
          [](std::vector<long> st, long n, const py::handle& a0, const py::handle& a1) {
              return to_py(gkp::weight_beta({std::move(st), n}, from_py(a0), from_py(a1)));
          },
          py::arg("sigma_tilde"), py::arg("n"), py::arg("a0"), py::arg("a1"));
    m.def("weight_delta",
          [](std::vector<long> parts, long n, const py::handle& a0, const py::handle& a1) {
              const long k = static_cast<long>(parts.size()) - 1;
              return to_py(gkp::weight_delta({std::move(parts), n, k}, from_py(a0), from_py(a1)));
          },
          py::arg("parts"), py::arg("n"), py::arg("a0"), py::arg("a1"));

    m.def("rising_basis_poly",
          [](const py::handle& step, long n) { return rationals_to_py(gkp::rising_basis_poly(from_py(step), n).coeffs()); },
          py::arg("step"), py::arg("n"), "Monomial coefficients, lowest degree first.");
    m.def("shifted_falling_basis_poly",
          [](const py::handle& shift, const py::handle& step, long k) {
              return rationals_to_py(gkp::shifted_falling_basis_poly(from_py(shift), from_py(step), k).coeffs());
          },
          py::arg("shift"), py::arg("step"), py::arg("k"));
    m.def("verify_transition",
          [](const py::sequence& a, long n_max) {
              py::list out;
              for (const auto& c : gkp::verify_transition(weight_from_py(a), n_max).checks) {
                  out.append(py::make_tuple(c.n, c.pass));
              }
              return out;
          },
          py::arg("a"), py::arg("n_max"), "List of (n, passed).");
    m.def("change_basis",
          [](const py::sequence& coeffs, const py::sequence& a) {
              return rationals_to_py(gkp::change_basis(rationals_from_py(coeffs), weight_from_py(a)));
          },
          py::arg("coeffs_in_rising"), py::arg("a"));

    m.def("b_triangle", [](long r, std::size_t n_max) { return triangle_to_py(gkp::b_triangle(r, n_max).triangle); },
          py::arg("r"), py::arg("n_max"));
    m.def("b_triangle_via_G",
          [](long r, std::size_t n_max) { return triangle_to_py(gkp::b_triangle_via_G(r, n_max).triangle); },
          py::arg("r"), py::arg("n_max"));
    m.def("b_explicit", [](long r, long n, long k) { return to_py(gkp::b_explicit(r, n, k)); }, py::arg("r"),
          py::arg("n"), py::arg("k"));
    m.def("marked_triangle",
          [](long r, std::size_t n_max) { return triangle_to_py(gkp::marked_triangle(r, n_max)); }, py::arg("r"),
          py::arg("n_max"));
    m.def("marked_explicit", [](long r, long n, long k) { return to_py(gkp::marked_explicit(r, n, k)); },
          py::arg("r"), py::arg("n"), py::arg("k"));
    m.def("enumerate_stirling_perms",
          [](int m_, int n) {
              std::vector<std::vector<int>> out;
              gkp::for_each_stirling_perm(m_, n, [&](const gkp::StirlingPerm& p) { out.push_back(p.word); });
              return out;
          },
          py::arg("m"), py::arg("n"));
    m.def("descent_histogram", &gkp::descent_histogram, py::arg("m"), py::arg("n"), py::arg("include_final") = false);

    m.def("triangle_to_json",
          [](const py::sequence& a, const py::sequence& b, std::size_t n_max) {
              const auto spec = spec_from_py(a, b);
              return gkp::triangle_to_json({spec, gkp::triangle_by_recurrence(spec, n_max)});
          },
          py::arg("a"), py::arg("b"), py::arg("n_max"));
    m.def("triangle_from_json",
          [](const std::string& text) {
              const auto t = gkp::triangle_from_json(text);
              py::dict out;
              out["a"] = py::make_tuple(to_py(t.spec.a.c0), to_py(t.spec.a.c1), to_py(t.spec.a.c2));
              out["b"] = py::make_tuple(to_py(t.spec.b.c0), to_py(t.spec.b.c1), to_py(t.spec.b.c2));
              out["rows"] = triangle_to_py(t.triangle);
              return out;
          },
          py::arg("text"));

    m.def("suite_names", &gkp::suite_names);
    m.def("run_suite",
          [](const std::string& suite, std::optional<long> n_max, long trials, std::uint64_t seed) {
              const auto report = gkp::run_suite(suite, {n_max, trials, seed});
              py::dict out;
              out["suite"] = report.suite;
              out["total"] = report.checks.size();
              out["passed"] = report.passed();
              out["failed"] = report.failed();
              out["ok"] = report.ok();
              return out;
          },
          py::arg("suite"), py::arg("n_max") = py::none(), py::arg("trials") = 100, py::arg("seed") = 42);
}
