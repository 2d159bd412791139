#include "inalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "inalg/betti.hpp"
#include "inalg/flat_family.hpp"
#include "inalg/hilbert.hpp"
#include "inalg/io.hpp"
#include "inalg/linalg.hpp"
#include "inalg/scenarios.hpp"
#include "inalg/weight_oracle.hpp"

namespace inalg::cli {

namespace {

/// Raised for well-formed files that do not fit the command.
struct Usage : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct Context {
  ProblemFile problem;
  OrderSpec order;
  std::optional<WeightVector> weight;
  const Flags& flags;

  std::optional<std::int64_t> cap() const { return flags.cap ? flags.cap : problem.cap; }
  std::optional<std::int64_t> dmax() const { return flags.dmax ? flags.dmax : problem.dmax; }
  std::optional<std::int64_t> jmax() const { return flags.jmax ? flags.jmax : problem.jmax; }
  std::optional<std::int64_t> freeness_bound() const {
    return flags.freeness_bound ? flags.freeness_bound : problem.freeness_bound;
  }
  WeightVector grading() const {
    return problem.weight_b ? *problem.weight_b : WeightVector::ones(problem.ring->nvars());
  }
  IdealGens ideal() const {
    if (problem.kind != BlockKind::Ideal) throw Usage("this command needs an ideal block");
    return IdealGens(problem.ring, problem.gens);
  }
  SubalgebraGens algebra() const {
    if (problem.kind != BlockKind::Algebra) throw Usage("this command needs an algebra block");
    return SubalgebraGens(problem.ring, problem.gens);
  }
};

std::string block(const Ring& ring, const OrderSpec& ord, BlockKind kind,
                  const std::vector<Polynomial>& ps) {
  std::string out = ring_header(*ring, ord) + block_keyword(kind) + "\n";
  for (const auto& p : ps) out += "  " + to_string(p, ord) + "\n";
  return out + "end\n";
}

std::vector<Polynomial> as_polynomials(const Ring& ring, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> out;
  for (const auto& m : ms) out.push_back(Polynomial::monomial(ring, m));
  return out;
}

std::string spaced(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

std::string exponent_list(const std::vector<Exponent>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

std::string values_line(const HilbertFunctionTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.values.size(); ++i) s += (i ? "," : "") + t.values[i].get_str();
  return s;
}

std::int64_t default_cap(const SubalgebraGens& F) {
  std::int64_t d = 1;
  for (const auto& g : F.gens) d = std::max(d, g.total_degree());
  return 2 * d;
}

std::string series_report(const HilbertSeries& H) {
  std::ostringstream out;
  out << "series: " << to_string(H) << "\n";
  try {
    auto r = reduce_series(H);
    out << "reduced: " << to_string(HilbertSeries{r.h, r.denom_degrees}) << "\n";
    out << "h-vector: " << spaced(r.h) << "\n";
    out << "h-vector symmetric: " << (gorenstein_symmetry_check(H) ? "yes" : "no") << "\n";
  } catch (const InvalidArgument& e) {
    out << "# no reduced form: " << e.what() << "\n";
  }
  return out.str();
}

Outcome cmd_gb(const Context& c) {
  auto G = buchberger(c.ideal(), c.order);
  return {0,
          "# reduced Groebner basis, " + std::to_string(G.elements.size()) + " elements\n" +
              block(c.problem.ring, c.order, BlockKind::Ideal, G.elements),
          ""};
}

Outcome cmd_ini(const Context& c) {
  const Ring& r = c.problem.ring;
  if (c.problem.kind == BlockKind::Ideal) {
    auto I = c.ideal();
    if (c.weight) {
      auto ini = initial_ideal_weight(I, *c.weight, c.order);
      auto ord = OrderSpec::weight_refined(*c.weight, c.order);
      return {0,
              "# initial ideal for weight " + c.weight->to_string() + "\n" +
                  block(r, ord, BlockKind::Ideal, ini.gens),
              ""};
    }
    auto M = initial_ideal(I, c.order);
    return {0,
            "# initial ideal, " + std::to_string(M.mingens.size()) + " minimal generators\n" +
                block(r, c.order, BlockKind::Ideal, as_polynomials(r, M.mingens)),
            ""};
  }
  auto F = c.algebra();
  auto ord = c.weight ? OrderSpec::weight_refined(*c.weight, c.order) : c.order;
  auto state = sagbi_complete(F, ord, c.cap().value_or(default_cap(F)));
  std::string status = state.confirmed()
                           ? "confirmed"
                           : "truncated at degree " + std::to_string(*state.truncated_at);
  if (c.weight) {
    std::vector<Polynomial> forms;
    for (const auto& g : state.gens.gens) forms.push_back(initial_form(g, *c.weight));
    std::sort(forms.begin(), forms.end(),
              [](const Polynomial& f, const Polynomial& g) { return f.canonical_compare(g) < 0; });
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return {0,
            "# initial algebra for weight " + c.weight->to_string() + ", " + status + "\n" +
                block(r, ord, BlockKind::Algebra, forms),
            ""};
  }
  return {0,
          "# initial algebra, " + status + "\n" +
              block(r, ord, BlockKind::Algebra, as_polynomials(r, initial_algebra_gens(state, ord))),
          ""};
}

Outcome cmd_sagbi(const Context& c) {
  auto F = c.algebra();
  const Ring& r = c.problem.ring;
  std::ostringstream out;
  if (auto cap = c.cap()) {
    auto state = sagbi_complete(F, c.order, *cap);
    out << "status: "
        << (state.confirmed() ? std::string("confirmed")
                              : "truncated at degree " + std::to_string(*state.truncated_at))
        << "\n";
    out << block(r, c.order, BlockKind::Algebra, state.gens.gens);
    out << "# initial monomials:";
    bool first = true;
    for (const auto& m : initial_algebra_gens(state, c.order)) {
      out << (first ? " " : ", ") << to_string(m, *r);
      first = false;
    }
    out << "\n";
    return {0, out.str(), ""};
  }
  auto test = sagbi_test(F, c.order);
  out << "sagbi test: " << (test.passed ? "passed" : "failed") << "\n";
  out << "# generators Y1..Y" << F.gens.size() << "\n";
  out << block(r, c.order, BlockKind::Algebra, F.gens);
  out << "relations: " << test.relations.size() << "\n";
  for (std::size_t i = 0; i < test.relations.size(); ++i) {
    const auto& rel = test.relations[i];
    out << "relation " << i + 1 << ": " << to_string(rel.relation) << "\n";
    out << "  lift: " << (rel.lift.is_zero() ? "0" : to_string(rel.lift, c.order)) << "\n";
    out << "  subduction steps: " << rel.subduction.steps.size() << "\n";
    for (const auto& s : rel.subduction.steps)
      out << "    " << to_string(s.scalar) << " " << exponent_list(s.exponents) << "\n";
    out << "  remainder: "
        << (rel.subduction.remainder.is_zero() ? "0" : to_string(rel.subduction.remainder, c.order))
        << "\n";
  }
  return {0, out.str(), ""};
}

Outcome cmd_weight(const Context& c) {
  const Ring& r = c.problem.ring;
  ComparisonSet C(r->nvars());
  switch (c.problem.kind) {
    case BlockKind::Pairs:
      for (const auto& [m, n] : c.problem.pairs) C.add(m, n);
      break;
    case BlockKind::Ideal:
      C = order_comparisons(buchberger(c.ideal(), c.order));
      break;
    case BlockKind::Algebra: {
      auto F = c.algebra();
      if (!sagbi_test(F, c.order).passed)
        return {1, "not a Sagbi basis: no weight represents this order on the algebra\n", ""};
      C = generator_comparisons(F, c.order);
      break;
    }
  }
  std::string tableau;
  if (c.flags.tableau)
    tableau = "# inequalities\n" + inequality_tableau(C, *r);
  try {
    auto a = find_weight(C);
    if (!satisfies(a, C)) throw InternalInconsistency("weight fails its own inequalities");
    return {0, spaced(a.entries()) + "\n" + tableau, ""};
  } catch (const Infeasible& e) {
    return {1, "infeasible\ncertificate: " + spaced(e.certificate()) + "\n" + tableau, ""};
  }
}

Outcome cmd_family(const Context& c) {
  auto I = c.ideal();
  std::ostringstream out;
  WeightVector a;
  if (c.weight) {
    a = *c.weight;
  } else {
    a = represent_order_by_weight(I, c.order);
    out << "# weight chosen to represent the order\n";
  }
  auto F = homogenize_ideal(I, a, c.order);
  out << family_dump(F);
  auto bound = c.freeness_bound().value_or(default_freeness_bound(F));
  auto report = freeness_basis_check(F, bound);
  out << "freeness: " << (report.free ? "free" : "not free") << " through degree " << bound
      << "\n";
  out << "# degree standard codim\n";
  for (const auto& d : report.degrees)
    out << "# " << d.degree << " " << d.standard << " " << d.codim << "\n";
  std::optional<Rational> t = c.problem.fiber;
  if (c.flags.fiber) t = parse_rational(*c.flags.fiber);
  if (t) {
    auto G = buchberger(fiber(F, *t), c.order);
    out << "# fiber t = " << to_string(*t) << ", reduced Groebner basis\n";
    out << block(c.problem.ring, c.order, BlockKind::Ideal, G.elements);
  }
  return {report.free ? 0 : 1, out.str(), ""};
}

Outcome cmd_hilbert(const Context& c) {
  auto b = c.grading();
  auto dmax = c.dmax().value_or(10);
  if (dmax < 0) throw Usage("negative --dmax");
  std::ostringstream out;
  out << "# grading " << b.to_string() << "\n";
  if (c.problem.kind == BlockKind::Ideal) {
    auto I = c.ideal();
    for (const auto& g : I.gens)
      if (!g.is_homogeneous(b)) throw NotGraded("ideal is not homogeneous for the grading");
    auto M = initial_ideal(I, c.order);
    auto H = hilbert_series_monomial(M, b);
    out << series_report(H);
    out << "function: " << values_line(hilbert_function(H, dmax)) << "\n";
    return {0, out.str(), ""};
  }
  auto F = c.algebra();
  std::int64_t cap = std::max<std::int64_t>(dmax, 1);
  for (const auto& g : F.gens) cap = std::max(cap, g.total_degree());
  if (auto user = c.cap()) cap = std::max(cap, *user);
  auto state = sagbi_complete(F, c.order, cap);
  if (state.confirmed()) {
    auto H = hilbert_series_subalgebra(state, c.order, b, true);
    out << "# series of the initial algebra, degrees divided by their gcd\n";
    out << series_report(H);
  } else {
    out << "# initial algebra truncated at degree " << *state.truncated_at
        << ", no closed series\n";
  }
  out << "function: " << values_line(hilbert_function_subalgebra(state, c.order, b, dmax)) << "\n";
  return {0, out.str(), ""};
}

Outcome cmd_dim(const Context& c) {
  if (c.problem.kind == BlockKind::Ideal) {
    auto M = initial_ideal(c.ideal(), c.order);
    return {0, "dimension: " + std::to_string(krull_dim_monomial(M)) + "\n", ""};
  }
  auto F = c.algebra();
  auto state = sagbi_complete(F, c.order, c.cap().value_or(default_cap(F)));
  // Transcendence degree: rank of the initial exponent vectors.
  std::vector<linalg::SparseRow> rows;
  for (const auto& m : initial_algebra_gens(state, c.order)) {
    linalg::SparseRow row;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) row.emplace_back(v, Rational(m[v]));
    rows.push_back(std::move(row));
  }
  return {0, "dimension: " + std::to_string(linalg::rank(std::move(rows))) + "\n", ""};
}

Outcome cmd_betti(const Context& c) {
  auto I = c.ideal();
  std::ostringstream out;
  if (auto j = c.jmax()) {
    auto T = graded_betti(I, *j);
    out << "# Betti numbers of R/I through degree " << *j << "\n" << to_string(T);
    if (T.complete) {
      auto inv = projdim_and_reg(T);
      out << "projdim: " << inv.projdim << "\nreg: " << inv.reg << "\n";
    } else {
      out << "# incomplete: entries above degree " << *j << " may be missing\n";
    }
    return {0, out.str(), ""};
  }
  auto cmp = betti_comparison(I, c.order);
  out << "# Betti numbers of R/I\n" << to_string(cmp.ideal);
  out << "projdim: " << cmp.ideal_invariants.projdim << "\nreg: " << cmp.ideal_invariants.reg
      << "\n";
  out << "# Betti numbers of R/ini(I)\n" << to_string(cmp.initial);
  out << "projdim: " << cmp.initial_invariants.projdim
      << "\nreg: " << cmp.initial_invariants.reg << "\n";
  out << "equal: " << (cmp.equal ? "yes" : "no") << "\n";
  return {0, out.str(), ""};
}

Outcome dispatch(const std::string& command, const Context& c) {
  if (command == "gb") return cmd_gb(c);
  if (command == "ini") return cmd_ini(c);
  if (command == "sagbi") return cmd_sagbi(c);
  if (command == "weight") return cmd_weight(c);
  if (command == "family") return cmd_family(c);
  if (command == "hilbert") return cmd_hilbert(c);
  if (command == "dim") return cmd_dim(c);
  if (command == "betti") return cmd_betti(c);
  throw Usage("unknown command `" + command + "`");
}

Outcome verify(const std::string& name) {
  auto names = scenario_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += " " + n;
    return {2, "", "error: unknown scenario `" + name + "`; known:" + list + "\n"};
  }
  auto report = run_scenario(name);
  return {report.passed() ? 0 : 1, report.text(), ""};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"gb",      "ini", "sagbi", "weight", "family",
                                              "hilbert", "dim", "betti", "verify"};
  return names;
}

Outcome execute(const std::string& command, std::string_view problem_text, const Flags& flags) {
  try {
    auto problem = parse_problem(problem_text);
    OrderSpec order = flags.order ? parse_order(*flags.order, *problem.ring)
                                  : problem.order_or_default();
    std::optional<WeightVector> weight = problem.weight_a;
    if (flags.weight) weight = parse_weight(*flags.weight);
    if (weight && weight->size() != problem.ring->nvars())
      throw RingMismatch("weight arity does not match the ring");
    Context ctx{std::move(problem), std::move(order), std::move(weight), flags};
    return dispatch(command, ctx);
  } catch (const StepLimitExceeded& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InternalInconsistency& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Infeasible& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, "", std::string("error: ") + e.what() + "\n"};
  }
}

Outcome run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Initial ideals and initial algebras with exact arithmetic", "inalg"};
  std::string command, target;
  Flags flags;
  app.add_option("command", command, "gb | ini | sagbi | weight | family | hilbert | dim | "
                                     "betti | verify")
      ->required();
  app.add_option("file", target, "problem file, `-` for stdin, or a scenario for verify");
  app.add_option("--order", flags.order, "lex, deglex, revlex, lex(y,x,z), weight(3,2,1; lex)");
  app.add_option("--weight", flags.weight, "weight a1,a2,...");
  app.add_option("--cap", flags.cap, "degree cap for Sagbi completion");
  app.add_option("--dmax", flags.dmax, "last degree of Hilbert function values");
  app.add_option("--jmax", flags.jmax, "last internal degree of Betti numbers");
  app.add_option("--fiber", flags.fiber, "fiber t = p/q of the family");
  app.add_option("--freeness-bound", flags.freeness_bound, "last degree of the freeness check");
  app.add_flag("--tableau", flags.tableau, "print the inequality system with the weight");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string("error: ") + e.what() + "\n" + app.help()};
  }
  if (command == "verify") {
    if (target.empty()) return {2, "", "error: verify needs a scenario name\n"};
    return verify(target);
  }
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    return {2, "", "error: unknown command `" + command + "`\n"};
  std::string text;
  if (target.empty() || target == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(target, std::ios::binary);
    if (!file) return {2, "", "error: cannot read `" + target + "`\n"};
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return execute(command, text, flags);
}

}  // namespace inalg::cli
