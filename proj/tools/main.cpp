// gasketwalk: expected random-move counts for Tower of Hanoi variants,
// computed by closed forms, exact linear algebra on the state graph,
// Monte Carlo simulation, and the electrical-network reduction.
//
// Exit codes: 0 success, 1 check/verification failure or runtime error,
// 2 bad arguments, 3 size cap exceeded, 4 solver non-convergence,
// 5 unknown sequence id.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gasketwalk/errors.hpp"
#include "gasketwalk/formulas.hpp"
#include "gasketwalk/graph.hpp"
#include "gasketwalk/oeis.hpp"
#include "gasketwalk/rational.hpp"
#include "gasketwalk/resistor.hpp"
#include "gasketwalk/simulate.hpp"
#include "gasketwalk/solver.hpp"
#include "gasketwalk/variant.hpp"
#include "gasketwalk/verify.hpp"

namespace gw = gasketwalk;
using json = nlohmann::ordered_json;

namespace {

enum class Format { kTable, kJson, kCsv };

Format to_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kTable;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

json rational_json(const gw::Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

gw::PuzzleVariant variant_or_die(const std::string& s) {
  auto v = gw::parse_variant(s);
  if (!v) throw std::invalid_argument("unknown variant: " + s);  // pre-validated; belt & braces
  return *v;
}

// --- formula -------------------------------------------------------------

int run_formula_single(const std::string& variant, int n, Format f) {
  gw::Rational value = gw::closed_form(variant_or_die(variant), n);
  switch (f) {
    case Format::kJson:
      std::cout << rational_json(value).dump() << "\n";
      break;
    case Format::kCsv:
      std::cout << "variant,n,value\n" << variant << "," << n << "," << gw::to_string(value) << "\n";
      break;
    case Format::kTable:
      std::cout << gw::to_string(value) << "\n";
      break;
  }
  return 0;
}

int run_formula_grid(int n_max, Format f) {
  std::vector<std::vector<std::string>> cells;  // per variant, per n
  for (auto v : gw::kAllVariants) {
    std::vector<std::string> row;
    for (int n = 1; n <= n_max; ++n) row.push_back(gw::to_string(gw::closed_form(v, n)));
    cells.push_back(std::move(row));
  }

  if (f == Format::kJson) {
    json rows = json::array();
    for (std::size_t i = 0; i < std::size(gw::kAllVariants); ++i) {
      json values = json::array();
      for (int n = 1; n <= n_max; ++n) {
        json cell{{"n", n}};
        cell.update(rational_json(gw::closed_form(gw::kAllVariants[i], n)));
        values.push_back(std::move(cell));
      }
      rows.push_back(json{{"variant", gw::variant_name(gw::kAllVariants[i])},
                          {"values", std::move(values)}});
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }

  if (f == Format::kCsv) {
    std::cout << "variant";
    for (int n = 1; n <= n_max; ++n) std::cout << ",n=" << n;
    std::cout << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << gw::variant_name(gw::kAllVariants[i]);
      for (const auto& c : cells[i]) std::cout << "," << c;
      std::cout << "\n";
    }
    return 0;
  }

  // Aligned grid, variants down, n across.
  std::vector<std::size_t> width(static_cast<std::size_t>(n_max), 0);
  std::size_t label_width = std::string("variant").size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    label_width = std::max(label_width, std::string(gw::variant_name(gw::kAllVariants[i])).size());
    for (int n = 1; n <= n_max; ++n)
      width[n - 1] = std::max(width[n - 1], cells[i][n - 1].size());
  }
  for (int n = 1; n <= n_max; ++n)
    width[n - 1] = std::max(width[n - 1], ("n=" + std::to_string(n)).size());

  std::cout << std::left << std::setw(static_cast<int>(label_width)) << "variant";
  for (int n = 1; n <= n_max; ++n)
    std::cout << "  " << std::right << std::setw(static_cast<int>(width[n - 1]))
              << ("n=" + std::to_string(n));
  std::cout << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::cout << std::left << std::setw(static_cast<int>(label_width))
              << gw::variant_name(gw::kAllVariants[i]);
    for (int n = 1; n <= n_max; ++n)
      std::cout << "  " << std::right << std::setw(static_cast<int>(width[n - 1]))
                << cells[i][n - 1];
    std::cout << "\n";
  }
  return 0;
}

// --- exact ---------------------------------------------------------------

int run_exact(const std::string& variant, int n, bool pq, const std::string& mode,
              const gw::Float64Options& f64opt, Format f) {
  const bool exact = (mode == "exact");

  if (pq) {
    if (exact) {
      gw::PQValues v = gw::pq_values_exact(n);
      const std::pair<const char*, const gw::Rational*> rows[] = {
          {"p1", &v.p1}, {"p2", &v.p2}, {"q1", &v.q1}, {"q2", &v.q2}, {"q3", &v.q3}};
      switch (f) {
        case Format::kJson: {
          json out;
          for (auto [name, r] : rows) out[name] = rational_json(*r);
          std::cout << out.dump() << "\n";
          break;
        }
        case Format::kCsv:
          std::cout << "p1,p2,q1,q2,q3\n";
          for (std::size_t i = 0; i < 5; ++i)
            std::cout << gw::to_string(*rows[i].second) << (i + 1 < 5 ? "," : "\n");
          break;
        case Format::kTable:
          for (auto [name, r] : rows) std::cout << name << " = " << gw::to_string(*r) << "\n";
          break;
      }
    } else {
      gw::PQValuesF64 v = gw::pq_values_f64(n, f64opt);
      const std::pair<const char*, double> rows[] = {
          {"p1", v.p1}, {"p2", v.p2}, {"q1", v.q1}, {"q2", v.q2}, {"q3", v.q3}};
      switch (f) {
        case Format::kJson: {
          json out;
          for (auto [name, x] : rows) out[name] = x;
          std::cout << out.dump() << "\n";
          break;
        }
        case Format::kCsv:
          std::cout << "p1,p2,q1,q2,q3\n";
          for (std::size_t i = 0; i < 5; ++i)
            std::cout << fmt_double(rows[i].second) << (i + 1 < 5 ? "," : "\n");
          break;
        case Format::kTable:
          for (auto [name, x] : rows) std::cout << name << " = " << fmt_double(x) << "\n";
          break;
      }
    }
    return 0;
  }

  gw::PuzzleVariant v = variant_or_die(variant);
  if (exact) {
    gw::Rational value = gw::solve_variant_exact(n, v);
    switch (f) {
      case Format::kJson:
        std::cout << rational_json(value).dump() << "\n";
        break;
      case Format::kCsv:
        std::cout << "variant,n,value\n"
                  << variant << "," << n << "," << gw::to_string(value) << "\n";
        break;
      case Format::kTable:
        std::cout << gw::to_string(value) << "\n";
        break;
    }
  } else {
    double value = gw::solve_variant_f64(n, v, f64opt);
    switch (f) {
      case Format::kJson:
        std::cout << json{{"value", value}}.dump() << "\n";
        break;
      case Format::kCsv:
        std::cout << "variant,n,value\n" << variant << "," << n << "," << fmt_double(value) << "\n";
        break;
      case Format::kTable:
        std::cout << fmt_double(value) << "\n";
        break;
    }
  }
  return 0;
}

// --- simulate ------------------------------------------------------------

int run_simulate(const gw::SimConfig& cfg, Format f) {
  gw::SimStats s = gw::simulate(cfg);

  gw::Rational exact = gw::closed_form(cfg.variant, cfg.n);
  double exact_d = gw::to_double(exact);
  double se = s.trials > 0 ? s.stddev / std::sqrt(static_cast<double>(s.trials)) : 0.0;
  double z;
  if (se > 0)
    z = (s.mean - exact_d) / se;
  else
    z = (s.mean == exact_d) ? 0.0 : std::numeric_limits<double>::infinity();

  switch (f) {
    case Format::kJson: {
      json out{{"variant", gw::variant_name(cfg.variant)},
               {"n", cfg.n},
               {"trials", s.trials},
               {"seed", cfg.master_seed},
               {"mean", s.mean},
               {"variance", s.variance},
               {"stddev", s.stddev},
               {"cv", s.cv},
               {"ci95_halfwidth", s.ci95_halfwidth},
               {"min", s.min},
               {"max", s.max},
               {"censored", s.censored}};
      out["exact"] = rational_json(exact);
      out["z"] = z;
      std::cout << out.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "variant,n,trials,seed,mean,stddev,cv,ci95_halfwidth,min,max,censored,exact,z\n"
                << gw::variant_name(cfg.variant) << "," << cfg.n << "," << s.trials << ","
                << cfg.master_seed << "," << fmt_double(s.mean) << "," << fmt_double(s.stddev)
                << "," << fmt_double(s.cv) << "," << fmt_double(s.ci95_halfwidth) << "," << s.min
                << "," << s.max << "," << s.censored << "," << gw::to_string(exact) << ","
                << fmt_double(z) << "\n";
      break;
    case Format::kTable:
      std::cout << "variant  = " << gw::variant_name(cfg.variant) << "\n"
                << "n        = " << cfg.n << "\n"
                << "trials   = " << s.trials << "\n"
                << "seed     = " << cfg.master_seed << "\n"
                << "mean     = " << fmt_double(s.mean) << "\n"
                << "stddev   = " << fmt_double(s.stddev) << "\n"
                << "cv       = " << fmt_double(s.cv) << "\n"
                << "ci95     = +/- " << fmt_double(s.ci95_halfwidth) << "\n"
                << "min      = " << s.min << "\n"
                << "max      = " << s.max << "\n"
                << "censored = " << s.censored << "\n"
                << "exact    = " << gw::to_string(exact) << "\n"
                << "z        = " << fmt_double(z) << "\n";
      break;
  }
  return 0;
}

int run_cv(const gw::SimConfig& cfg, std::uint64_t resamples, Format f) {
  gw::CvEstimate e = gw::estimate_cv(cfg, resamples);
  switch (f) {
    case Format::kJson: {
      json out{{"variant", gw::variant_name(cfg.variant)},
               {"n", cfg.n},
               {"trials", cfg.trials},
               {"seed", cfg.master_seed},
               {"applicable", e.applicable},
               {"cv", e.cv},
               {"ci_lo", e.ci_lo},
               {"ci_hi", e.ci_hi},
               {"resamples", e.resamples}};
      std::cout << out.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "variant,n,trials,seed,applicable,cv,ci_lo,ci_hi,resamples\n"
                << gw::variant_name(cfg.variant) << "," << cfg.n << "," << cfg.trials << ","
                << cfg.master_seed << "," << (e.applicable ? "yes" : "no") << ","
                << fmt_double(e.cv) << "," << fmt_double(e.ci_lo) << "," << fmt_double(e.ci_hi)
                << "," << e.resamples << "\n";
      break;
    case Format::kTable:
      if (!e.applicable) {
        std::cout << "cv: not applicable (sample mean is 0)\n";
      } else {
        std::cout << "cv       = " << fmt_double(e.cv) << "\n"
                  << "ci95     = [" << fmt_double(e.ci_lo) << ", " << fmt_double(e.ci_hi) << "]\n"
                  << "resamples = " << e.resamples << "\n";
      }
      break;
  }
  return 0;
}

// --- resist --------------------------------------------------------------

int run_resist(int n, Format f) {
  gw::WyeResistance w = gw::reduce_gasket(n);
  gw::Rational corner = gw::corner_resistance(n);
  gw::BigInt edges = gw::edge_count_closed(n);
  gw::Rational commute = gw::commute_time(n);
  gw::Rational one_way = gw::one_way_time(n);

  switch (f) {
    case Format::kJson: {
      json out{{"n", n}};
      out["R"] = rational_json(w.R);
      out["corner"] = rational_json(corner);
      out["edges"] = edges.get_str();
      out["commute"] = rational_json(commute);
      out["one_way"] = rational_json(one_way);
      std::cout << out.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "n,R,corner,edges,commute,one_way\n"
                << n << "," << gw::to_string(w.R) << "," << gw::to_string(corner) << ","
                << edges.get_str() << "," << gw::to_string(commute) << ","
                << gw::to_string(one_way) << "\n";
      break;
    case Format::kTable:
      std::cout << "n       = " << n << "\n"
                << "R       = " << gw::to_string(w.R) << "\n"
                << "corner  = " << gw::to_string(corner) << "\n"
                << "edges   = " << edges.get_str() << "\n"
                << "commute = " << gw::to_string(commute) << "\n"
                << "one-way = " << gw::to_string(one_way) << "\n";
      break;
  }
  return 0;
}

// --- oeis ----------------------------------------------------------------

int run_oeis(const std::string& id, int count, bool remote, const std::string& fixture_dir,
             Format f) {
  const gw::SequenceSpec& spec = gw::sequence_spec(id);
  std::vector<gw::BigInt> terms = gw::generate_sequence(spec.id, count);
  gw::FixtureReport fix = gw::verify_against_fixture(spec.id, fixture_dir);
  std::optional<gw::RemoteComparison> rem;
  if (remote) rem = gw::compare_with_remote(spec.id, fixture_dir);

  // A fetch failure degrades to fixtures-only; a fetched mismatch fails.
  bool ok = fix.passed && (!rem || !rem->fetched || rem->passed);

  switch (f) {
    case Format::kJson: {
      json jterms = json::array();
      for (const auto& t : terms) jterms.push_back(t.get_str());
      json out{{"id", spec.id},
               {"offset", spec.offset},
               {"description", spec.description},
               {"terms", std::move(jterms)}};
      out["fixture"] = json{{"passed", fix.passed},
                            {"terms_checked", fix.terms_checked},
                            {"problems", fix.problems},
                            {"warnings", fix.warnings}};
      if (rem) {
        out["remote"] = json{{"fetched", rem->fetched},
                             {"fetch_error", rem->fetch_error},
                             {"passed", rem->passed},
                             {"shift", rem->shift},
                             {"terms_compared", rem->terms_compared},
                             {"problems", rem->problems}};
      }
      std::cout << out.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "index,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i)
        std::cout << (spec.offset + static_cast<long>(i)) << "," << terms[i].get_str() << "\n";
      break;
    case Format::kTable: {
      for (std::size_t i = 0; i < terms.size(); ++i)
        std::cout << (i ? " " : "") << terms[i].get_str();
      std::cout << "\n";
      if (fix.passed) {
        std::cout << "fixture: PASS (" << fix.terms_checked << " terms)\n";
      } else {
        std::cout << "fixture: FAIL\n";
        for (const auto& p : fix.problems) std::cout << "  " << p << "\n";
      }
      for (const auto& w : fix.warnings) std::cout << "  warning: " << w << "\n";
      if (rem) {
        if (!rem->fetched) {
          std::cout << "remote: UNAVAILABLE (" << rem->fetch_error << "); fixtures only\n";
        } else if (rem->passed) {
          std::cout << "remote: PASS (" << rem->terms_compared << " terms, shift " << rem->shift
                    << ")\n";
        } else {
          std::cout << "remote: FAIL\n";
          for (const auto& p : rem->problems) std::cout << "  " << p << "\n";
        }
      }
      break;
    }
  }
  return ok ? 0 : 1;
}

// --- graph ---------------------------------------------------------------

int run_graph(int n, const std::string& out_path) {
  gw::StateGraph g = gw::build_graph(n);
  if (out_path.empty() || out_path == "-") {
    gw::write_edge_list(g, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 1;
    }
    gw::write_edge_list(g, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected random-move counts for Tower of Hanoi variants on the Sierpinski-gasket"
               " state graph: closed forms, exact and float linear algebra, Monte Carlo"
               " simulation, and the electrical-network reduction."};
  app.set_version_flag("--version", "gasketwalk 1.0.0");
  app.require_subcommand(1);

  const std::vector<std::string> variant_names = {"rtoA", "1to3", "1toA", "halfToA", "rto1"};
  const std::vector<std::string> format_names = {"table", "json", "csv"};

  // formula
  auto* formula = app.add_subcommand("formula", "Closed-form expected move counts");
  std::string fo_variant;
  int fo_n = 1;
  bool fo_all = false;
  int fo_n_max = 6;
  std::string fo_format = "table";
  formula->add_option("--variant", fo_variant, "Puzzle variant")
      ->check(CLI::IsMember(variant_names, CLI::ignore_case));
  formula->add_option("--n", fo_n, "Number of disks")->check(CLI::PositiveNumber);
  formula->add_flag("--all", fo_all, "Grid of all variants for n = 1..n-max");
  formula->add_option("--n-max", fo_n_max, "Grid upper bound (with --all)")
      ->check(CLI::PositiveNumber);
  formula->add_option("--format", fo_format, "Output format")
      ->check(CLI::IsMember(format_names));

  // exact
  auto* exact = app.add_subcommand("exact", "First-principles solve on the explicit state graph");
  std::string ex_variant;
  int ex_n = 1;
  bool ex_pq = false;
  std::string ex_mode = "exact";
  std::string ex_format = "table";
  gw::Float64Options ex_f64;
  exact->add_option("--variant", ex_variant, "Puzzle variant")
      ->check(CLI::IsMember(variant_names, CLI::ignore_case));
  exact->add_option("--n", ex_n, "Number of disks")->check(CLI::PositiveNumber)->required();
  exact->add_flag("--pq", ex_pq, "Print the tower/half-state finish probabilities instead");
  exact->add_option("--mode", ex_mode, "Numeric mode")->check(CLI::IsMember({"exact", "f64"}));
  exact->add_option("--tolerance", ex_f64.tolerance, "Gauss-Seidel residual bound (f64 mode)")
      ->check(CLI::PositiveNumber);
  exact->add_option("--max-sweeps", ex_f64.max_sweeps, "Gauss-Seidel sweep cap (f64 mode)")
      ->check(CLI::PositiveNumber);
  exact->add_option("--format", ex_format, "Output format")->check(CLI::IsMember(format_names));

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate with exact reference");
  gw::SimConfig sim_cfg;
  std::string si_variant;
  bool si_cv = false;
  std::uint64_t si_resamples = 1000;
  std::string si_format = "table";
  simulate->add_option("--n", sim_cfg.n, "Number of disks")->check(CLI::PositiveNumber)->required();
  simulate->add_option("--variant", si_variant, "Puzzle variant")
      ->check(CLI::IsMember(variant_names, CLI::ignore_case))
      ->required();
  simulate->add_option("--trials", sim_cfg.trials, "Number of independent trials")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_cfg.master_seed, "Master seed");
  simulate->add_option("--max-steps", sim_cfg.max_steps, "Per-trial step cap (censoring)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--workers", sim_cfg.workers, "Worker threads (never changes results)")
      ->check(CLI::PositiveNumber);
  simulate->add_flag("--checked", sim_cfg.checked, "Re-validate every move (slow)");
  simulate->add_flag("--cv", si_cv, "Bootstrap the coefficient of variation instead");
  simulate->add_option("--resamples", si_resamples, "Bootstrap resamples (with --cv)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--format", si_format, "Output format")->check(CLI::IsMember(format_names));

  // resist
  auto* resist = app.add_subcommand("resist", "Electrical reduction of the state graph");
  int re_n = 1;
  std::string re_format = "table";
  resist->add_option("--n", re_n, "Number of disks")->check(CLI::PositiveNumber)->required();
  resist->add_option("--format", re_format, "Output format")->check(CLI::IsMember(format_names));

  // verify
  auto* verify = app.add_subcommand("verify", "Run every cross-check and report pass/fail");
  gw::VerifyOptions ver_opt;
  verify->add_option("--n-max", ver_opt.n_max, "Cap for solver-backed checks")
      ->check(CLI::Range(1, 6));
  verify->add_option("--trials", ver_opt.trials, "Monte Carlo trials per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", ver_opt.seed, "Monte Carlo master seed");
  verify->add_option("--fixture-dir", ver_opt.fixture_dir, "Sequence fixture directory");

  // oeis
  auto* oeis = app.add_subcommand("oeis", "Generate a catalogued sequence and check fixtures");
  std::string oe_id;
  int oe_count = 10;
  bool oe_remote = false;
  std::string oe_fixture_dir;
  std::string oe_format = "table";
  oeis->add_option("id", oe_id, "Sequence id (Annnnnn)")->required();
  oeis->add_option("--count", oe_count, "Number of terms to generate")
      ->check(CLI::PositiveNumber);
  oeis->add_flag("--remote", oe_remote, "Also compare the fixture against the published b-file");
  oeis->add_option("--fixture-dir", oe_fixture_dir, "Fixture directory override");
  oeis->add_option("--format", oe_format, "Output format")->check(CLI::IsMember(format_names));

  // graph
  auto* graph = app.add_subcommand("graph", "Export the state graph as a u v edge list");
  int gr_n = 1;
  std::string gr_out;
  graph->add_option("--n", gr_n, "Number of disks")->check(CLI::PositiveNumber)->required();
  graph->add_option("--out", gr_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad arguments are exit 2; --help stays 0
  }

  try {
    if (app.got_subcommand(formula)) {
      if (fo_all == !fo_variant.empty()) {
        std::cerr << "error: pass exactly one of --variant or --all\n";
        return 2;
      }
      if (!fo_all && formula->count("--n") == 0) {
        std::cerr << "error: --n is required with --variant\n";
        return 2;
      }
      return fo_all ? run_formula_grid(fo_n_max, to_format(fo_format))
                    : run_formula_single(fo_variant, fo_n, to_format(fo_format));
    }
    if (app.got_subcommand(exact)) {
      if (ex_pq == !ex_variant.empty()) {
        std::cerr << "error: pass exactly one of --variant or --pq\n";
        return 2;
      }
      return run_exact(ex_variant, ex_n, ex_pq, ex_mode, ex_f64, to_format(ex_format));
    }
    if (app.got_subcommand(simulate)) {
      sim_cfg.variant = variant_or_die(si_variant);
      return si_cv ? run_cv(sim_cfg, si_resamples, to_format(si_format))
                   : run_simulate(sim_cfg, to_format(si_format));
    }
    if (app.got_subcommand(resist)) return run_resist(re_n, to_format(re_format));
    if (app.got_subcommand(verify)) {
      gw::VerifyReport report = gw::run_verification(ver_opt);
      gw::print_report(report, std::cout);
      return report.all_passed() ? 0 : 1;
    }
    if (app.got_subcommand(oeis))
      return run_oeis(oe_id, oe_count, oe_remote, oe_fixture_dir, to_format(oe_format));
    if (app.got_subcommand(graph)) return run_graph(gr_n, gr_out);
  } catch (const gw::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gw::SolveFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const gw::UnknownSequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
