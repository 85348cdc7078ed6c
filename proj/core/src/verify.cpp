#include "gasketwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gasketwalk/formulas.hpp"
#include "gasketwalk/oeis.hpp"
#include "gasketwalk/resistor.hpp"
#include "gasketwalk/simulate.hpp"
#include "gasketwalk/solver.hpp"

namespace gasketwalk {

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

void add(VerifyReport& rep, std::string name, bool passed, std::string detail = "") {
  rep.checks.push_back({std::move(name), passed, std::move(detail)});
}

void check_formula_vs_solver(VerifyReport& rep, int n_max) {
  const int cap = std::min(n_max, kMaxExactDisks);
  for (PuzzleVariant v : kAllVariants) {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= cap; ++n) {
      const Rational solver = solve_variant_exact(n, v);
      const Rational formula = closed_form(v, n);
      if (solver != formula) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": solver " + to_string(solver) + " vs formula " +
                 to_string(formula);
        break;
      }
    }
    add(rep, "closed form = exact solver, " + variant_name(v) + ", n <= " + std::to_string(cap),
        ok, detail);
  }
}

void check_pq_vs_solver(VerifyReport& rep, int n_max) {
  const int cap = std::min(n_max, kMaxExactDisks);
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= cap && ok; ++n) {
    const PQValues a = pq_values_exact(n);
    const PQValues b = pq_closed(n);
    const std::pair<const Rational*, const Rational*> pairs[] = {
        {&a.p1, &b.p1}, {&a.p2, &b.p2}, {&a.q1, &b.q1}, {&a.q2, &b.q2}, {&a.q3, &b.q3}};
    const char* names[] = {"p1", "p2", "q1", "q2", "q3"};
    for (int i = 0; i < 5; ++i) {
      if (*pairs[i].first != *pairs[i].second) {
        ok = false;
        detail = std::string(names[i]) + "(" + std::to_string(n) + "): solver " +
                 to_string(*pairs[i].first) + " vs formula " + to_string(*pairs[i].second);
        break;
      }
    }
  }
  add(rep, "p/q probabilities = exact solver, n <= " + std::to_string(cap), ok, detail);
}

void check_identity_battery(VerifyReport& rep) {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 6 && ok; ++n) {
    for (const IdentityCheck& c : check_identities(n)) {
      if (!c.holds) {
        ok = false;
        detail = c.name + " at n=" + std::to_string(n) + ": " + c.detail;
        break;
      }
    }
  }
  add(rep, "identity battery, n = 2..6", ok, detail);
}

void check_resistor_route(VerifyReport& rep, int n_max) {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 30 && ok; ++n) {
    if (reduce_gasket(n).R != wye_resistance_closed(n)) {
      ok = false;
      detail = "R(" + std::to_string(n) + ") recurrence vs closed form";
    }
    if (ok && one_way_time(n) != e_one_to_three(n)) {
      ok = false;
      detail = "commute/2 vs tower-to-tower expectation at n=" + std::to_string(n);
    }
  }
  add(rep, "wye reduction & commute time vs formulas, n <= 30", ok, detail);

  const int cap = std::min(n_max, 5);
  ok = true;
  detail.clear();
  double worst = 0;
  for (int n = 1; n <= cap && ok; ++n) {
    const StateGraph g = build_graph(n);
    const double want = to_double(corner_resistance(n));
    const double got = effective_resistance_oracle(
        g, static_cast<std::uint32_t>(corner_code(n, kPeg1)),
        static_cast<std::uint32_t>(corner_code(n, kPeg3)));
    const double rel = std::abs(got - want) / want;
    worst = std::max(worst, rel);
    if (!(rel < 1e-8)) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": oracle " + fmt(got) + " vs 2R " + fmt(want);
    }
  }
  if (ok) detail = "max rel err " + fmt(worst);
  add(rep, "Laplacian resistance oracle vs 2R(n), n <= " + std::to_string(cap), ok, detail);
}

void check_monte_carlo(VerifyReport& rep, const VerifyOptions& opt) {
  const int cap = std::min(opt.n_max, 4);
  for (PuzzleVariant v : kAllVariants) {
    bool ok = true;
    std::string detail;
    double worst_z = 0;
    for (int n = 1; n <= cap && ok; ++n) {
      SimConfig cfg;
      cfg.n = n;
      cfg.variant = v;
      cfg.trials = opt.trials;
      cfg.master_seed = opt.seed;
      const SimStats st = simulate(cfg);
      const double exact = to_double(closed_form(v, n));
      const double se = st.stddev / std::sqrt(static_cast<double>(st.trials));
      if (se == 0.0) {
        if (st.mean != exact) {
          ok = false;
          detail = "n=" + std::to_string(n) + ": degenerate sample mean " + fmt(st.mean) +
                   " != exact " + fmt(exact);
        }
        continue;
      }
      const double z = (st.mean - exact) / se;
      if (std::abs(z) > std::abs(worst_z)) worst_z = z;
      if (!(std::abs(z) <= 4.0)) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": z = " + fmt(z) + " (mean " + fmt(st.mean) +
                 ", exact " + fmt(exact) + ")";
      }
    }
    if (ok) detail = "worst z = " + fmt(worst_z);
    add(rep,
        "Monte Carlo vs exact, " + variant_name(v) + ", n <= " + std::to_string(cap) + ", " +
            std::to_string(opt.trials) + " trials",
        ok, detail);
  }
}

void check_fixtures(VerifyReport& rep, const std::string& dir) {
  for (const SequenceSpec& s : supported_sequences()) {
    const FixtureReport fr = verify_against_fixture(s.id, dir);
    std::string detail;
    if (!fr.problems.empty()) {
      detail = fr.problems.front();
    } else {
      detail = std::to_string(fr.terms_checked) + " terms";
      if (!fr.warnings.empty()) detail += "; " + fr.warnings.front();
    }
    add(rep, "sequence fixture " + s.id, fr.passed, detail);
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
  VerifyReport rep;
  check_formula_vs_solver(rep, opt.n_max);
  check_pq_vs_solver(rep, opt.n_max);
  check_identity_battery(rep);
  check_resistor_route(rep, opt.n_max);
  check_monte_carlo(rep, opt);
  check_fixtures(rep, opt.fixture_dir);
  return rep;
}

void print_report(const VerifyReport& r, std::ostream& os) {
  for (const VerifyCheck& c : r.checks) {
    os << (c.passed ? "[ ok ]" : "[FAIL]") << ' ' << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (r.all_passed() ? "PASS" : "FAIL") << ": " << (r.checks.size() - r.failures()) << '/'
     << r.checks.size() << " checks passed\n";
}

}  // namespace gasketwalk
