#include "inalg/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "inalg/betti.hpp"
#include "inalg/cli.hpp"
#include "inalg/flat_family.hpp"
#include "inalg/hilbert.hpp"
#include "inalg/io.hpp"
#include "inalg/weight_oracle.hpp"

namespace inalg {

bool ScenarioReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ScenarioReport::text() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + name + ": " + c.label + "\n";
    if (!c.passed && !c.detail.empty()) out += "  " + c.detail + "\n";
  }
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(ScenarioReport& r) : r_(r) {}

  void check(std::string label, bool ok, std::string detail = {}) {
    r_.checks.push_back({std::move(label), ok, std::move(detail)});
  }

  /// Runs `body`; an exception counts as a failure of `label`.
  void guarded(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(label, false, std::string("exception: ") + e.what());
    }
  }

 private:
  ScenarioReport& r_;
};

Polynomial P(const Ring& r, std::string_view s) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(const Ring& r, std::initializer_list<std::string_view> s) {
  std::vector<Polynomial> out;
  for (auto t : s) out.push_back(parse_polynomial(t, r));
  return out;
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + to_string(p);
  return s.empty() ? "(0)" : s;
}

std::string join(const std::vector<Monomial>& ms, const PolyRing& r) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : ", ") + to_string(m, r);
  return s;
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

/// Random polynomial with coefficients in [-3, 3] \ {0}. Homogeneous ones
/// have all terms of total degree `deg`; others mix degrees 0..deg.
Polynomial random_poly(const Ring& r, std::mt19937_64& rng, int deg, bool homogeneous, int terms) {
  std::size_t n = r->nvars();
  std::uniform_int_distribution<int> coef(1, 3), sign(0, 1), dd(0, deg);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    int d = homogeneous ? deg : (k == 0 ? deg : dd(rng));
    Monomial m(n);
    for (int e = 0; e < d; ++e) m[var(rng)] += 1;
    int c = coef(rng) * (sign(rng) ? -1 : 1);
    ts.push_back({Rational(c), std::move(m)});
  }
  return Polynomial(r, std::move(ts));
}

/// Nonzero random polynomial homogeneous for weight b of degree d, assuming
/// that degree is attained.
Polynomial random_graded(const Ring& r, std::mt19937_64& rng, const WeightVector& b,
                         std::int64_t d, int terms) {
  auto basis = monomials_of_degree(r->nvars(), b, d);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(1, 3), sign(0, 1);
  for (;;) {
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k)
      ts.push_back({Rational(coef(rng) * (sign(rng) ? -1 : 1)), basis[pick(rng)]});
    Polynomial f(r, std::move(ts));
    if (!f.is_zero()) return f;
  }
}

// Leading monomials of x1 + x2*x4 + x3^2 under three orders.
void leading(Recorder& rec) {
  auto r = make_ring({"x1", "x2", "x3", "x4"});
  auto f = P(r, "x1 + x2*x4 + x3^2");
  struct Case {
    const char* name;
    OrderSpec ord;
    const char* expected;
  };
  for (const auto& c : {Case{"lex", OrderSpec::lex(4), "x1"},
                        Case{"deglex", OrderSpec::deglex(4), "x2*x4"},
                        Case{"revlex", OrderSpec::revlex(4), "x3^2"}}) {
    auto got = leading_monomial(f, c.ord);
    rec.check(std::string(c.name) + " leading monomial of x1 + x2*x4 + x3^2 is " + c.expected,
              got == parse_monomial(c.expected, r), "got " + to_string(got, *r));
  }
}

// The algebra K[x+y, xy, xy^2] has no finite Sagbi basis.
void nofinsagbi(Recorder& rec) {
  auto r = make_ring({"x", "y"});
  struct Variant {
    const char* label;
    std::vector<Polynomial> gens;
    OrderSpec ord;
    const char* base;  // x or y
    const char* step;  // the variable whose powers grow
  };
  std::vector<Variant> variants{
      {"x > y", Ps(r, {"x + y", "x*y", "x*y^2"}), OrderSpec::deglex(2), "x", "y"},
      {"y > x", Ps(r, {"x + y", "y*x", "y*x^2"}), OrderSpec::deglex(2, {1, 0}), "y", "x"}};
  for (const auto& v : variants) {
    for (std::int64_t d : {4, 6, 8}) {
      std::string tag = std::string(v.label) + ", cap " + std::to_string(d);
      rec.guarded(tag, [&] {
        SubalgebraGens F(r, v.gens);
        auto state = sagbi_complete(F, v.ord, d);
        rec.check(tag + ": completion reports truncation at the cap",
                  state.truncated_at && *state.truncated_at == d);
        std::vector<Monomial> want{parse_monomial(v.base, r)};
        for (std::int64_t k = 1; k < d; ++k)
          want.push_back(parse_monomial(std::string(v.base) + "*" + v.step + "^" +
                                            std::to_string(k),
                                        r));
        std::sort(want.begin(), want.end(), [&](const Monomial& a, const Monomial& b) {
          return v.ord.compare(a, b) < 0;
        });
        auto got = initial_algebra_gens(state, v.ord);
        rec.check(tag + ": initial monomials " + join(want, *r), got == want,
                  "got " + join(got, *r));
        auto hf = hilbert_function_subalgebra(state, v.ord, WeightVector::ones(2), d - 1);
        auto series = hilbert_function(HilbertSeries{{1, -1, 1}, {1, 1}}, d - 1);
        std::vector<Integer> expected{1};
        for (std::int64_t k = 1; k < d; ++k) expected.emplace_back(static_cast<long>(k));
        rec.check(tag + ": Hilbert function " + join(expected) + " matches (1-t+t^2)/(1-t)^2",
                  hf.values == expected && series.values == expected, "got " + join(hf.values));
      });
    }
  }
}

// Kernels of the four-generator algebra and of its initial monomials.
void worse(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  auto f = Ps(r, {"x^2 - z^2", "x*y", "y^2", "y*z"});
  auto K = presentation_kernel(f);
  auto want = P(K.ring, "Y2^2 - Y1*Y3 - Y4^2");
  rec.check("presentation kernel is (Y2^2 - Y1*Y3 - Y4^2)",
            K.gens.size() == 1 && K.gens[0] == want, "got " + join(K.gens));
  bool vanish = std::all_of(K.gens.begin(), K.gens.end(),
                            [&](const Polynomial& g) { return substitute(g, f, r).is_zero(); });
  rec.check("presentation kernel vanishes on the generators", vanish);
  std::vector<Monomial> m;
  for (const auto& g : f) m.push_back(leading_monomial(g, OrderSpec::lex(3)));
  auto T = toric_kernel(r, m);
  auto want_t = P(T.ring, "Y2^2 - Y1*Y3");
  rec.check("toric kernel of x^2, x*y, y^2, y*z is (Y2^2 - Y1*Y3)",
            T.gens.size() == 1 && T.gens[0] == want_t, "got " + join(T.gens));
}

// The b-initial ideal of the presentation kernel equals the toric kernel.
void founda(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  SubalgebraGens F(r, Ps(r, {"x^2 - z^2", "x*y", "y^2", "y*z"}));
  WeightVector a{3, 2, 1};
  auto lex = OrderSpec::lex(3);
  auto ref = OrderSpec::weight_refined(a, lex);
  rec.check("generators form a Sagbi basis for weight(3,2,1; lex)", sagbi_test(F, ref).passed);
  auto k = verify_kernel_degeneration(F, a, lex);
  rec.check("b = (6,5,4,3)", k.b == WeightVector{6, 5, 4, 3}, "got " + k.b.to_string());
  auto want = P(k.initial_kernel.ring, "Y2^2 - Y1*Y3");
  rec.check("ini_b(Y2^2 - Y1*Y3 - Y4^2) = Y2^2 - Y1*Y3",
            k.initial_kernel.gens.size() == 1 && k.initial_kernel.gens[0] == want,
            "got " + join(k.initial_kernel.gens));
  rec.check("ini_b of the kernel equals the kernel of the initial forms", k.holds);
}

bool round_trip(const IdealGens& I, const OrderSpec& ord, std::string& detail) {
  auto G = buchberger(I, ord);
  auto C = order_comparisons(G);
  auto a = find_weight(C);
  if (!satisfies(a, C)) {
    detail = "weight " + a.to_string() + " violates an inequality";
    return false;
  }
  auto ini = initial_ideal_weight(I, a, ord);
  std::vector<Monomial> lm;
  for (const auto& g : ini.gens) {
    if (!g.is_monomial()) {
      detail = "ini_a is not monomial for a = " + a.to_string();
      return false;
    }
    lm.push_back(g.terms()[0].mono);
  }
  if (!(MonomialIdeal(I.ring, lm) == initial_ideal(G))) {
    detail = "ini_a differs from ini for a = " + a.to_string();
    return false;
  }
  return true;
}

// Weight representations of orders, with Farkas certificates.
void initbyweight(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  auto lex = OrderSpec::lex(3);
  rec.guarded("twisted cubic round trip", [&] {
    IdealGens I(r, Ps(r, {"x^2 - y", "x*y - z"}));
    auto a = represent_order_by_weight(I, lex);
    auto ini = initial_ideal_weight(I, a, lex);
    std::vector<Polynomial> want = Ps(r, {"y^3", "x*z", "x*y", "x^2"});
    auto got = ini.gens;
    auto canon = [](std::vector<Polynomial> v) {
      std::sort(v.begin(), v.end(),
                [](const Polynomial& f, const Polynomial& g) { return f.canonical_compare(g) < 0; });
      return v;
    };
    rec.check("weight " + a.to_string() + " regenerates {x^2, x*y, x*z, y^3} under lex",
              canon(got) == canon(want), "got " + join(got));
  });
  auto r2 = make_ring({"x", "y"});
  ComparisonSet C(2);
  C.add(parse_monomial("x", r2), parse_monomial("y", r2));
  C.add(parse_monomial("y", r2), parse_monomial("x", r2));
  try {
    find_weight(C);
    rec.check("{x > y, y > x} is infeasible", false, "a weight was returned");
  } catch (const Infeasible& e) {
    rec.check("{x > y, y > x} is infeasible with certificate " + join(e.certificate()),
              is_farkas_certificate(e.certificate(), C));
  }
  std::mt19937_64 rng(0x5eed0005);
  std::uniform_int_distribution<int> ngens(1, 3), deg(1, 3), nterms(2, 4);
  int closed = 0, total = 0;
  std::string first_failure;
  for (int k = 0; k < 50; ++k) {
    std::vector<Polynomial> gens;
    int count = ngens(rng);
    for (int i = 0; i < count; ++i) gens.push_back(random_poly(r, rng, deg(rng), true, nterms(rng)));
    IdealGens I(r, gens);
    for (const auto& ord : {OrderSpec::lex(3), OrderSpec::revlex(3)}) {
      ++total;
      std::string detail;
      bool ok = false;
      try {
        ok = round_trip(I, ord, detail);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      if (ok) {
        ++closed;
      } else if (first_failure.empty()) {
        first_failure = "ideal (" + join(gens) + "): " + detail;
      }
    }
  }
  rec.check("random homogeneous round trips closed: " + std::to_string(closed) + "/" +
                std::to_string(total),
            closed == total, first_failure);
}

// Fibers and freeness of the homogenized family, plus homogeneity of its generators.
void flatfamily(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  auto rev = OrderSpec::revlex(3);
  std::mt19937_64 rng(0x5eed0006);
  std::uniform_int_distribution<int> w(1, 3), ngens(1, 3), deg(1, 3), nterms(2, 4);
  int general = 0, special = 0, free = 0, homog = 0;
  std::string failure;
  const int rounds = 50;
  for (int k = 0; k < rounds; ++k) {
    WeightVector a{w(rng), w(rng), w(rng)};
    std::vector<Polynomial> gens;
    int count = ngens(rng);
    for (int i = 0; i < count; ++i)
      gens.push_back(random_poly(r, rng, deg(rng), false, nterms(rng)));
    IdealGens I(r, gens);
    try {
      auto F = homogenize_ideal(I, a, rev);
      auto tau = OrderSpec::weight_refined(a, rev);
      if (buchberger(fiber(F, 1), tau) == buchberger(I, tau)) ++general;
      else if (failure.empty()) failure = "fiber 1 differs for (" + join(gens) + ")";
      if (buchberger(fiber(F, 0), tau) == buchberger(initial_ideal_weight(I, a, rev), tau)) ++special;
      else if (failure.empty()) failure = "fiber 0 differs for (" + join(gens) + ")";
      if (freeness_basis_check(F, default_freeness_bound(F)).free) ++free;
      else if (failure.empty()) failure = "not free for (" + join(gens) + ")";
      auto ap = a.extended();
      if (std::all_of(F.total.elements.begin(), F.total.elements.end(),
                      [&](const Polynomial& g) { return g.is_homogeneous(ap); }))
        ++homog;
    } catch (const std::exception& e) {
      if (failure.empty()) failure = std::string("exception: ") + e.what();
    }
  }
  auto frac = [&](int c) { return std::to_string(c) + "/" + std::to_string(rounds); };
  rec.check("fiber at t = 1 reproduces I: " + frac(general), general == rounds, failure);
  rec.check("fiber at t = 0 reproduces ini_a(I): " + frac(special), special == rounds, failure);
  rec.check("freeness holds through 2*max a-degree: " + frac(free), free == rounds, failure);
  rec.check("total generators are a'-homogeneous: " + frac(homog), homog == rounds, failure);
}

// Hilbert functions and dimension do not depend on the order.
void transfer(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937_64 rng(0x5eed0007);
  std::uniform_int_distribution<int> w(1, 3), ngens(1, 3), nterms(2, 3), dd(2, 6);
  int hf_equal = 0, dim_equal = 0;
  std::string failure;
  const int rounds = 50;
  for (int k = 0; k < rounds; ++k) {
    WeightVector b{w(rng), w(rng), w(rng)};
    std::vector<Polynomial> gens;
    int count = ngens(rng);
    while (static_cast<int>(gens.size()) < count) {
      std::int64_t d = dd(rng);
      if (monomials_of_degree(3, b, d).empty()) continue;
      gens.push_back(random_graded(r, rng, b, d, nterms(rng)));
    }
    IdealGens I(r, gens);
    try {
      auto cmp = compare_hilbert(I, b, OrderSpec::lex(3), OrderSpec::revlex(3), 12);
      if (cmp.equal) ++hf_equal;
      else if (failure.empty()) failure = "Hilbert functions differ for (" + join(gens) + ")";
      if (cmp.first_dim == cmp.second_dim) ++dim_equal;
      else if (failure.empty()) failure = "dimensions differ for (" + join(gens) + ")";
    } catch (const std::exception& e) {
      if (failure.empty()) failure = std::string("exception: ") + e.what();
    }
  }
  auto frac = [&](int c) { return std::to_string(c) + "/" + std::to_string(rounds); };
  rec.check("Hilbert functions under lex and revlex agree through degree 12: " + frac(hf_equal),
            hf_equal == rounds, failure);
  rec.check("Krull dimension is order independent: " + frac(dim_equal), dim_equal == rounds,
            failure);
}

// Betti numbers only grow under passage to the initial ideal.
void pdreg(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  auto lex = OrderSpec::lex(3);
  using Entries = std::map<std::pair<std::int64_t, std::int64_t>, Integer>;
  struct Fixture {
    const char* label;
    std::vector<Polynomial> gens;
    bool expect_equal;
  };
  std::vector<Fixture> fixtures{{"(x, y)", Ps(r, {"x", "y"}), true},
                                {"(x^2, x*y)", Ps(r, {"x^2", "x*y"}), true},
                                {"(x^2 - y^2)", Ps(r, {"x^2 - y^2"}), true},
                                {"(x^2 - y*z, x*y)", Ps(r, {"x^2 - y*z", "x*y"}), false}};
  for (const auto& f : fixtures) {
    rec.guarded(std::string(f.label) + ": comparison", [&] {
      auto cmp = betti_comparison(IdealGens(r, f.gens), lex);
      rec.check(std::string(f.label) + ": entrywise, projdim and reg inequalities hold", true);
      if (f.expect_equal)
        rec.check(std::string(f.label) + ": tables of R/I and R/ini(I) coincide", cmp.equal);
      if (std::string(f.label) == "(x, y)") {
        Entries diag{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
        rec.check("(x, y): Betti numbers 1; 2; 1 on the diagonal", cmp.ideal.entries == diag);
      }
    });
  }
  std::mt19937_64 rng(0x5eed0008);
  std::uniform_int_distribution<int> ngens(1, 3), deg(1, 3), nterms(2, 3);
  int clean = 0;
  std::string failure;
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens;
    int count = ngens(rng);
    for (int i = 0; i < count; ++i) gens.push_back(random_poly(r, rng, deg(rng), true, nterms(rng)));
    try {
      betti_comparison(IdealGens(r, gens), lex);
      ++clean;
    } catch (const std::exception& e) {
      if (failure.empty()) failure = "(" + join(gens) + "): " + e.what();
    }
  }
  rec.check("random homogeneous ideals without violations: " + std::to_string(clean) + "/20",
            clean == 20, failure);
}

// h-vector symmetry on the four-generator algebra and on R/(x^2, xy).
void gorenstein(Recorder& rec) {
  auto r = make_ring({"x", "y", "z"});
  auto lex = OrderSpec::lex(3);
  SubalgebraGens F(r, Ps(r, {"x^2 - z^2", "x*y", "y^2", "y*z"}));
  auto state = sagbi_complete(F, lex, 4);
  rec.check("Sagbi basis of the algebra is confirmed", state.confirmed());
  auto H = hilbert_series_subalgebra(state, lex, WeightVector::ones(3), true);
  auto red = reduce_series(H);
  bool shape = red.h == std::vector<Integer>{1, 1} &&
               red.denom_degrees == std::vector<std::int64_t>{1, 1, 1};
  rec.check("normalized series reduces to (1 + t)/(1-t)^3", shape,
            "got " + to_string(HilbertSeries{red.h, red.denom_degrees}));
  rec.check("algebra passes the symmetry check", gorenstein_symmetry_check(H));
  auto r2 = make_ring({"x", "y"});
  MonomialIdeal M(r2, {parse_monomial("x^2", r2), parse_monomial("x*y", r2)});
  auto H2 = hilbert_series_monomial(M, WeightVector::ones(2));
  auto red2 = reduce_series(H2);
  rec.check("R/(x^2, x*y) reduces to h = 1 + t - t^2",
            red2.h == std::vector<Integer>{1, 1, -1}, "got " + numerator_to_string(red2.h));
  rec.check("R/(x^2, x*y) fails the symmetry check", !gorenstein_symmetry_check(H2));
}

struct CliCase {
  const char* command;
  const char* text;
  cli::Flags flags;
};

/// Reverses the generator lines of the problem's block.
std::string permute(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines, body;
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (inside && line == "end") {
      std::reverse(body.begin(), body.end());
      lines.insert(lines.end(), body.begin(), body.end());
      body.clear();
      inside = false;
    }
    if (inside) {
      body.push_back(line);
      continue;
    }
    lines.push_back(line);
    if (line == "ideal" || line == "algebra" || line == "pairs") inside = true;
  }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

/// Every `ring ... end` block in a report parses as a problem file.
bool reports_reparse(const std::string& out, std::string& detail) {
  std::istringstream in(out);
  std::string line, chunk;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line.rfind("ring ", 0) == 0) {
      inside = true;
      chunk.clear();
    }
    if (!inside) continue;
    chunk += line + "\n";
    if (line == "end") {
      inside = false;
      try {
        parse_problem(chunk);
      } catch (const std::exception& e) {
        detail = e.what();
        return false;
      }
    }
  }
  return true;
}

// Byte-identical output across runs and generator permutations.
void determinism(Recorder& rec) {
  const char* twisted =
      "ring x, y, z\norder lex\nideal\n  x^2 - y\n  x*y - z\n  y*z - x^3\nend\n";
  const char* algebra = "ring x, y\norder deglex\nalgebra\n  x + y\n  x*y\n  x*y^2\nend\n";
  const char* worse = "ring x, y, z\norder lex\nalgebra\n  x^2 - z^2\n  x*y\n  y^2\n  y*z\nend\n";
  const char* pairs = "ring x, y, z\npairs\n  x > y\n  y^2 > z\n  x*z > y^2\nend\n";
  const char* graded = "ring x, y, z\norder revlex\nideal\n  x^2 - y*z\n  x*y\n  z^3\nend\n";
  cli::Flags none, cap6, fiber, dmax;
  cap6.cap = 6;
  fiber.fiber = "1/2";
  fiber.weight = "2,3,5";
  dmax.dmax = 8;
  cli::Flags tableau;
  tableau.tableau = true;
  std::vector<CliCase> cases{{"gb", twisted, none},          {"ini", twisted, none},
                             {"ini", worse, none},           {"sagbi", algebra, none},
                             {"sagbi", algebra, cap6},       {"weight", twisted, tableau},
                             {"weight", pairs, tableau},     {"family", twisted, fiber},
                             {"hilbert", graded, dmax},      {"hilbert", algebra, dmax},
                             {"hilbert", worse, dmax},       {"dim", graded, none},
                             {"dim", algebra, none},         {"betti", graded, none}};
  for (const auto& c : cases) {
    std::string tag = std::string(c.command) + " on " +
                      std::string(c.text).substr(0, std::string(c.text).find('\n'));
    auto first = cli::execute(c.command, c.text, c.flags);
    auto second = cli::execute(c.command, c.text, c.flags);
    auto permuted = cli::execute(c.command, permute(c.text), c.flags);
    rec.check(tag + ": succeeds", first.exit_code == 0, first.err);
    rec.check(tag + ": identical across runs",
              first.out == second.out && first.exit_code == second.exit_code);
    rec.check(tag + ": identical under generator permutation",
              first.out == permuted.out && first.exit_code == permuted.exit_code);
    std::string detail;
    rec.check(tag + ": report re-parses", reports_reparse(first.out, detail), detail);
  }
}

using ScenarioFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, ScenarioFn>>& registry() {
  static const std::vector<std::pair<std::string, ScenarioFn>> table{
      {"leading", leading},         {"nofinsagbi", nofinsagbi}, {"worse", worse},
      {"founda", founda},           {"initbyweight", initbyweight},
      {"flatfamily", flatfamily},   {"transfer", transfer},     {"pdreg", pdreg},
      {"gorenstein", gorenstein},   {"determinism", determinism}};
  return table;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

ScenarioReport run_scenario(std::string_view name) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    ScenarioReport report{n, {}};
    Recorder rec(report);
    rec.guarded("scenario ran to completion", [&] { fn(rec); });
    return report;
  }
  throw InvalidArgument("unknown scenario `" + std::string(name) + "`");
}

}  // namespace inalg
