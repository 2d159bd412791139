// Python surface: polynomials travel as strings in the library's text grammar.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "inalg/betti.hpp"
#include "inalg/cli.hpp"
#include "inalg/flat_family.hpp"
#include "inalg/hilbert.hpp"
#include "inalg/io.hpp"
#include "inalg/scenarios.hpp"
#include "inalg/weight_oracle.hpp"

namespace py = pybind11;
using namespace inalg;

namespace {

using Strings = std::vector<std::string>;

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

std::vector<Polynomial> parse_all(const Strings& gens, const Ring& r) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(parse_polynomial(g, r));
  return out;
}

Strings print_all(const std::vector<Polynomial>& ps, const OrderSpec& ord) {
  Strings out;
  for (const auto& p : ps) out.push_back(to_string(p, ord));
  return out;
}

Strings print_all(const std::vector<Monomial>& ms, const PolyRing& r) {
  Strings out;
  for (const auto& m : ms) out.push_back(to_string(m, r));
  return out;
}

WeightVector weight_of(const std::vector<long>& w) {
  std::vector<Integer> e(w.begin(), w.end());
  return WeightVector(std::move(e));
}

Strings groebner_basis(const Strings& gens, const Strings& vars, const std::string& order) {
  auto r = make_ring(vars);
  auto ord = parse_order(order, *r);
  return print_all(buchberger(IdealGens(r, parse_all(gens, r)), ord).elements, ord);
}

Strings initial_ideal_of(const Strings& gens, const Strings& vars, const std::string& order) {
  auto r = make_ring(vars);
  return print_all(initial_ideal(IdealGens(r, parse_all(gens, r)), parse_order(order, *r)).mingens,
                   *r);
}

std::string leading_monomial_of(const std::string& f, const Strings& vars,
                                const std::string& order) {
  auto r = make_ring(vars);
  return to_string(leading_monomial(parse_polynomial(f, r), parse_order(order, *r)), *r);
}

py::dict sagbi(const Strings& gens, const Strings& vars, const std::string& order,
               std::int64_t cap) {
  auto r = make_ring(vars);
  auto ord = parse_order(order, *r);
  auto state = sagbi_complete(SubalgebraGens(r, parse_all(gens, r)), ord, cap);
  py::dict d;
  d["generators"] = print_all(state.gens.gens, ord);
  d["initial"] = print_all(initial_algebra_gens(state, ord), *r);
  d["truncated_at"] = state.truncated_at ? py::object(py::int_(*state.truncated_at)) : py::none();
  return d;
}

py::dict sagbi_check(const Strings& gens, const Strings& vars, const std::string& order) {
  auto r = make_ring(vars);
  auto ord = parse_order(order, *r);
  auto t = sagbi_test(SubalgebraGens(r, parse_all(gens, r)), ord);
  py::dict d;
  d["passed"] = t.passed;
  d["witnesses"] = print_all(t.witnesses, ord);
  return d;
}

py::dict weight_for(const std::vector<std::pair<std::string, std::string>>& pairs,
                    const Strings& vars) {
  auto r = make_ring(vars);
  ComparisonSet C(r->nvars());
  for (const auto& [m, n] : pairs) C.add(parse_monomial(m, r), parse_monomial(n, r));
  py::dict d;
  try {
    auto a = find_weight(C);
    d["feasible"] = true;
    d["weight"] = to_py(a.entries());
  } catch (const Infeasible& e) {
    d["feasible"] = false;
    d["certificate"] = to_py(e.certificate());
  }
  return d;
}

py::list order_weight(const Strings& gens, const Strings& vars, const std::string& order) {
  auto r = make_ring(vars);
  return to_py(
      represent_order_by_weight(IdealGens(r, parse_all(gens, r)), parse_order(order, *r)).entries());
}

py::tuple hilbert(const Strings& monomials, const Strings& vars,
                  std::optional<std::vector<long>> weights) {
  auto r = make_ring(vars);
  std::vector<Monomial> ms;
  for (const auto& m : monomials) ms.push_back(parse_monomial(m, r));
  auto a = weights ? weight_of(*weights) : WeightVector::ones(r->nvars());
  auto H = hilbert_series_monomial(MonomialIdeal(r, ms), a);
  return py::make_tuple(to_py(H.numerator), H.denom_degrees);
}

py::list hilbert_values(const Strings& gens, const Strings& vars, const std::string& order,
                        std::int64_t d_max) {
  auto r = make_ring(vars);
  auto M = initial_ideal(IdealGens(r, parse_all(gens, r)), parse_order(order, *r));
  auto H = hilbert_series_monomial(M, WeightVector::ones(r->nvars()));
  return to_py(hilbert_function(H, d_max).values);
}

std::size_t dimension(const Strings& gens, const Strings& vars, const std::string& order) {
  auto r = make_ring(vars);
  return krull_dim_monomial(initial_ideal(IdealGens(r, parse_all(gens, r)), parse_order(order, *r)));
}

py::dict betti(const Strings& gens, const Strings& vars, std::optional<std::int64_t> j_max) {
  auto r = make_ring(vars);
  IdealGens I(r, parse_all(gens, r));
  auto bound = j_max ? *j_max
                     : std::max<std::int64_t>(
                           1, betti_degree_bound(initial_ideal(I, OrderSpec::revlex(r->nvars()))));
  auto T = graded_betti(I, bound);
  py::dict d;
  for (const auto& [ij, b] : T.entries) d[py::make_tuple(ij.first, ij.second)] = to_py(b);
  return d;
}

py::tuple execute(const std::string& command, const std::string& text,
                  std::optional<std::string> order, std::optional<std::string> weight,
                  std::optional<std::int64_t> cap, std::optional<std::int64_t> dmax,
                  std::optional<std::int64_t> jmax, std::optional<std::string> fiber,
                  std::optional<std::int64_t> freeness_bound, bool tableau) {
  cli::Flags f;
  f.order = std::move(order);
  f.weight = std::move(weight);
  f.cap = cap;
  f.dmax = dmax;
  f.jmax = jmax;
  f.fiber = std::move(fiber);
  f.freeness_bound = freeness_bound;
  f.tableau = tableau;
  auto o = cli::execute(command, text, f);
  return py::make_tuple(o.exit_code, o.out, o.err);
}

py::tuple run(const Strings& args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  auto o = cli::run(args, in);
  return py::make_tuple(o.exit_code, o.out, o.err);
}

}  // namespace

PYBIND11_MODULE(_inalg, m) {
  m.doc() = "Initial ideals and initial algebras with exact rational arithmetic";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("groebner_basis", &groebner_basis, py::arg("gens"), py::arg("variables"),
        py::arg("order") = "revlex", "Reduced Groebner basis, ascending by leading monomial.");
  m.def("initial_ideal", &initial_ideal_of, py::arg("gens"), py::arg("variables"),
        py::arg("order") = "revlex", "Minimal generators of the initial ideal.");
  m.def("leading_monomial", &leading_monomial_of, py::arg("polynomial"), py::arg("variables"),
        py::arg("order") = "revlex");
  m.def("sagbi_complete", &sagbi, py::arg("gens"), py::arg("variables"), py::arg("order"),
        py::arg("cap"), "Degree-capped Sagbi completion.");
  m.def("sagbi_test", &sagbi_check, py::arg("gens"), py::arg("variables"),
        py::arg("order") = "revlex");
  m.def("find_weight", &weight_for, py::arg("pairs"), py::arg("variables"),
        "Positive weight with a.m > a.n for every (m, n), or a Farkas certificate.");
  m.def("order_weight", &order_weight, py::arg("gens"), py::arg("variables"), py::arg("order"),
        "Weight whose initial ideal equals the initial ideal for the order.");
  m.def("hilbert_series", &hilbert, py::arg("monomials"), py::arg("variables"),
        py::arg("weights") = py::none(),
        "(numerator coefficients, denominator degrees) of R/M.");
  m.def("hilbert_function", &hilbert_values, py::arg("gens"), py::arg("variables"),
        py::arg("order") = "revlex", py::arg("d_max") = 10);
  m.def("krull_dimension", &dimension, py::arg("gens"), py::arg("variables"),
        py::arg("order") = "revlex");
  m.def("betti_numbers", &betti, py::arg("gens"), py::arg("variables"),
        py::arg("j_max") = py::none(), "{(i, j): beta_ij} of R/I.");
  m.def("execute", &execute, py::arg("command"), py::arg("problem"), py::arg("order") = py::none(),
        py::arg("weight") = py::none(), py::arg("cap") = py::none(), py::arg("dmax") = py::none(),
        py::arg("jmax") = py::none(), py::arg("fiber") = py::none(),
        py::arg("freeness_bound") = py::none(), py::arg("tableau") = false,
        "Runs one CLI command on problem text; returns (exit code, stdout, stderr).");
  m.def("run", &run, py::arg("args"), py::arg("stdin") = "",
        "Runs the CLI with an argument list; returns (exit code, stdout, stderr).");
  m.def("scenario_names", &scenario_names);
  m.def(
      "verify",
      [](const std::string& name) {
        auto r = run_scenario(name);
        return py::make_tuple(r.passed(), r.text());
      },
      py::arg("name"));
}
