#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "tticad/cli.hpp"
#include "tticad/combdiag.hpp"
#include "tticad/regchain.hpp"
#include "tticad/subresultant.hpp"

namespace py = pybind11;
using namespace tticad;

namespace {

py::int_ to_py(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

std::string rational_text(const Rational& q) { return q.get_str(); }

py::dict decompose(const std::string& text, std::optional<std::string> mode, std::optional<std::string> order,
                   double timeout, std::size_t max_nodes) {
  Problem p = parse_problem(text);
  RunOptions o;
  if (mode) {
    if (*mode == "tti") {
      o.mode = Mode::Tti;
    } else if (*mode == "sign") {
      o.mode = Mode::Sign;
    } else {
      throw py::value_error("mode must be 'tti' or 'sign'");
    }
  }
  o.order = order;
  o.limits.max_nodes = max_nodes;
  if (timeout > 0) {
    o.limits.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(timeout));
  }
  RunResult r;
  {
    py::gil_scoped_release release;
    r = run(p, o);
  }
  py::list truth, index, trace;
  for (const auto& c : r.cad.cells) {
    truth.append(py::cast(c.truth));
    index.append(py::cast(c.index));
  }
  for (const auto& t : r.trace) trace.append(py::make_tuple(t.conditions, t.action));
  py::dict d;
  d["cells"] = r.cad.cells.size();
  d["full_dimensional"] = r.cad.full_dimensional_count();
  d["base_line"] = r.cad.base_line_count();
  d["cells_per_level"] = cells_per_level(r.cad);
  d["seconds"] = r.seconds;
  d["index"] = index;
  d["truth"] = truth;
  d["trace"] = trace;
  d["tree"] = format_tree(*r.cad.tree, p.variables);
  d["json"] = make_cell_dump(r).to_json();
  d["svg"] = r.cad.n == 2 ? py::object(py::str(emit_svg(r.cad, default_box(r.cad), p.variables))) : py::none();
  return d;
}

py::dict combdiag(int r, int s, int t) {
  if (r < 1 || s < 0 || t < 0 || (s == 0 && t == 0)) throw py::value_error("need r >= 1, s, t >= 0, s + t > 0");
  DiagramShape sh{r, s, t};
  auto L = systems_of_shape(sh);
  py::dict d;
  d["complete"] = to_py(build_diagram_list(L, DiagramVariant::Complete).node_count());
  d["partial"] = to_py(build_diagram_list(L, DiagramVariant::Partial).node_count());
  d["complete_formula"] = to_py(closed_form(sh, DiagramVariant::Complete));
  d["partial_formula"] = to_py(closed_form(sh, DiagramVariant::Partial));
  return d;
}

int var_index(const std::vector<std::string>& names, const std::string& v) {
  auto it = std::find(names.begin(), names.end(), v);
  if (it == names.end()) throw py::value_error("unknown variable '" + v + "'");
  return static_cast<int>(it - names.begin());
}

std::string py_resultant(const std::string& a, const std::string& b, const std::string& var,
                         const std::vector<std::string>& names) {
  return resultant(parse_polynomial(a, names), parse_polynomial(b, names), var_index(names, var)).to_string(names);
}

std::string py_discriminant(const std::string& a, const std::string& var, const std::vector<std::string>& names) {
  return discriminant(parse_polynomial(a, names), var_index(names, var)).to_string(names);
}

py::list py_isolate_roots(const std::string& poly, const std::string& var) {
  std::vector<std::string> names = {var};
  py::list out;
  for (const auto& r : isolate_roots(parse_polynomial(poly, names), 0, {})) {
    py::dict d;
    if (r->rational) {
      d["exact"] = rational_text(r->value);
      d["interval"] = py::make_tuple(rational_text(r->value), rational_text(r->value));
    } else {
      d["exact"] = py::none();
      d["interval"] = py::make_tuple(rational_text(r->lo), rational_text(r->hi));
    }
    d["approx"] = r->approx();
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truth-table invariant cylindrical algebraic decomposition";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("decompose", &decompose, py::arg("problem"), py::arg("mode") = py::none(), py::arg("order") = py::none(),
        py::arg("timeout") = 0.0, py::arg("max_nodes") = 0,
        "Decompose a problem given in the problem file format.");
  m.def("combdiag", &combdiag, py::arg("r"), py::arg("s"), py::arg("t"),
        "Combination diagram sizes for r systems of s equations and t other constraints.");
  m.def("resultant", &py_resultant, py::arg("a"), py::arg("b"), py::arg("var"), py::arg("variables"));
  m.def("discriminant", &py_discriminant, py::arg("p"), py::arg("var"), py::arg("variables"));
  m.def("isolate_roots", &py_isolate_roots, py::arg("poly"), py::arg("var") = "x",
        "Real roots of a univariate polynomial as isolating intervals.");
}
