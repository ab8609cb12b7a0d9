// Command-line front end: subcommands for the closed forms, single shots,
// the eps_min bisection, delta sweeps, and the singular-limit tools.
// Scalar results go to stdout as one JSON object; tables go to CSV files
// written atomically. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rosenau/analytic.hpp"
#include "rosenau/csv.hpp"
#include "rosenau/errors.hpp"
#include "rosenau/ode.hpp"
#include "rosenau/problem.hpp"
#include "rosenau/shooting.hpp"
#include "rosenau/singular.hpp"

namespace {

using namespace rosenau;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void usage_fail(const std::string& flag, const std::string& msg) {
  throw UsageError(flag + ": " + msg);
}

// Flat JSON object emitter with insertion order and %.17g doubles, so
// identical runs diff clean.
class JsonOut {
public:
  void add(const std::string& key, double v) { push(key, fmt17(v)); }
  void add(const std::string& key, long v) { push(key, std::to_string(v)); }
  void add(const std::string& key, int v) { push(key, std::to_string(v)); }
  void add(const std::string& key, const std::string& v) {
    std::string quoted = "\"";
    for (char c : v) {
      if (c == '"' || c == '\\') quoted += '\\';
      quoted += c;
    }
    quoted += '"';
    push(key, quoted);
  }
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += parts_[i];
    }
    s += "}";
    return s;
  }

private:
  void push(const std::string& key, const std::string& value) {
    parts_.push_back("\"" + key + "\":" + value);
  }
  std::vector<std::string> parts_;
};

struct ProblemFlags {
  std::string flux_kind = "burgers";
  std::vector<double> coeffs;
  double u_minus = 2.0;
  double u_plus = 0.0;
  double alpha = 1.0;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& pf) {
  cmd->add_option("--flux", pf.flux_kind, "Flux kind: burgers or poly")
      ->check(CLI::IsMember({"burgers", "poly"}));
  cmd->add_option("--coeffs", pf.coeffs,
                  "Polynomial flux coefficients, ascending powers (poly only)");
  cmd->add_option("--u-minus", pf.u_minus, "Left state u- (default 2)");
  cmd->add_option("--u-plus", pf.u_plus, "Right state u+ (default 0)");
  cmd->add_option("--alpha", pf.alpha, "Diffusion exponent alpha >= 0 (default 1)");
}

void check_problem_flags(const ProblemFlags& pf) {
  if (!(pf.alpha >= 0.0)) usage_fail("--alpha", "must be >= 0");
  if (!(pf.u_minus > pf.u_plus)) usage_fail("--u-minus/--u-plus", "need u- > u+");
  if (pf.flux_kind == "poly" && pf.coeffs.size() < 3)
    usage_fail("--coeffs", "polynomial flux needs degree >= 2 (at least 3 coefficients)");
  if (pf.flux_kind == "burgers" && !pf.coeffs.empty())
    usage_fail("--coeffs", "only valid with --flux poly");
}

WaveProblem build_problem(const ProblemFlags& pf) {
  FluxSpec flux = pf.flux_kind == "poly" ? FluxSpec::polynomial(pf.coeffs)
                                         : FluxSpec::burgers();
  return WaveProblem::validate(std::move(flux), pf.u_minus, pf.u_plus, pf.alpha);
}

int resolve_workers(int flag_value) {
  if (const char* env = std::getenv("ROSENAU_WORKERS"); env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 0)
      usage_fail("ROSENAU_WORKERS", "must be a nonnegative integer");
    return static_cast<int>(n);
  }
  return flag_value;
}

void emit(const JsonOut& json) { std::cout << json.str() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Travelling-wave existence toolkit for the generalised Rosenau-KdV equation"};
  app.require_subcommand(1);

  ProblemFlags pf;

  // closed-form
  auto* cmd_cf = app.add_subcommand(
      "closed-form", "Wave speed, S, K, thresholds, closed forms and bounds");
  ProblemFlags pf_cf;
  std::optional<double> cf_delta;
  add_problem_flags(cmd_cf, pf_cf);
  cmd_cf->add_option("--delta", cf_delta, "Dispersion coefficient (optional)");

  // shoot
  auto* cmd_shoot = app.add_subcommand("shoot", "Single shot from the saddle");
  ProblemFlags pf_shoot;
  double sh_delta = 0, sh_eps = 0, sh_offset = 1e-7;
  double sh_rel_tol = 1e-8, sh_abs_tol = 1e-10;
  std::string sh_orbit_out;
  add_problem_flags(cmd_shoot, pf_shoot);
  cmd_shoot->add_option("--delta", sh_delta, "Dispersion coefficient > 0")->required();
  cmd_shoot->add_option("--epsilon", sh_eps, "Diffusion coefficient >= 0")->required();
  cmd_shoot->add_option("--offset", sh_offset, "Relative launch offset (default 1e-7)");
  cmd_shoot->add_option("--rel-tol", sh_rel_tol, "Integrator relative tolerance");
  cmd_shoot->add_option("--abs-tol", sh_abs_tol, "Integrator absolute tolerance");
  cmd_shoot->add_option("--orbit-out", sh_orbit_out, "Write the orbit as CSV");

  // epsmin
  auto* cmd_em = app.add_subcommand("epsmin", "Bisect the existence boundary in eps");
  ProblemFlags pf_em;
  double em_delta = 0, em_tol = 1e-6;
  add_problem_flags(cmd_em, pf_em);
  cmd_em->add_option("--delta", em_delta, "Dispersion coefficient > 0")->required();
  cmd_em->add_option("--tol", em_tol, "Bisection tolerance (default 1e-6)");

  // curve
  auto* cmd_curve = app.add_subcommand("curve", "Sweep eps_min over a delta grid");
  ProblemFlags pf_curve;
  double cv_min = 1e-3, cv_max = 10.0, cv_tol = 1e-6;
  int cv_points = 20, cv_workers = 0;
  bool cv_linear = false;
  std::string cv_out;
  add_problem_flags(cmd_curve, pf_curve);
  cmd_curve->add_option("--delta-min", cv_min, "Smallest delta (default 1e-3)");
  cmd_curve->add_option("--delta-max", cv_max, "Largest delta (default 10)");
  cmd_curve->add_option("--points", cv_points, "Grid size (default 20)");
  cmd_curve->add_flag("--linear", cv_linear, "Linear grid instead of log-spaced");
  cmd_curve->add_option("--tol", cv_tol, "Bisection tolerance (default 1e-6)");
  cmd_curve->add_option("--workers", cv_workers,
                        "Worker count, 0 = all cores (env ROSENAU_WORKERS overrides)");
  cmd_curve->add_option("--out", cv_out, "Output CSV path")->required();

  // singular
  auto* cmd_sing = app.add_subcommand(
      "singular", "Delta -> 0 tools: Z0 profile, eps_star, branch roots");
  ProblemFlags pf_sing;
  std::optional<double> sg_eps;
  std::optional<double> sg_delta;
  int sg_grid = 2048, sg_branch_n = 512;
  std::string sg_profile_out, sg_branch_out;
  add_problem_flags(cmd_sing, pf_sing);
  cmd_sing->add_option("--epsilon", sg_eps, "Profile epsilon (default eps_star)");
  cmd_sing->add_option("--delta", sg_delta, "Report the predicted depth at this delta");
  cmd_sing->add_option("--grid-n", sg_grid, "Profile grid size (default 2048)");
  cmd_sing->add_option("--branch-n", sg_branch_n, "Branch sweep grid size (default 512)");
  cmd_sing->add_option("--profile-out", sg_profile_out, "Write v,G,Z0 CSV");
  cmd_sing->add_option("--branches-out", sg_branch_out, "Write v,w_plus,w_minus CSV");

  // hr
  auto* cmd_hr = app.add_subcommand("hr", "Min-max route to the delta=0 threshold");
  ProblemFlags pf_hr;
  add_problem_flags(cmd_hr, pf_hr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_cf->parsed()) {
      check_problem_flags(pf_cf);
      if (cf_delta && !(*cf_delta >= 0.0)) usage_fail("--delta", "must be >= 0");
      const WaveProblem p = build_problem(pf_cf);
      const BoundsReport br = bounds_report(p, pf_cf.alpha, cf_delta);
      JsonOut j;
      j.add("alpha", pf_cf.alpha);
      j.add("u_minus", p.u_minus());
      j.add("u_plus", p.u_plus());
      j.add("lambda", p.lambda());
      j.add("s", p.S());
      j.add("k", p.K());
      if (br.eps0) j.add("eps0", *br.eps0);
      if (br.h_alpha) j.add("h_alpha", *br.h_alpha);
      if (pf_cf.alpha > 0.5) j.add("tangency_z", tangency_point(pf_cf.alpha));
      j.add("eps_star", eps_star(p));
      j.add("half_alpha_bound", br.half_alpha_bound);
      if (br.c_alpha_bound) j.add("c_alpha_bound", *br.c_alpha_bound);
      if (br.mu_alpha) {
        j.add("a_alpha", response_peak(pf_cf.alpha));
        j.add("mu_alpha", *br.mu_alpha);
        j.add("delta_alpha_lower", *br.delta_alpha_lower);
      }
      emit(j);
      return 0;
    }

    if (cmd_shoot->parsed()) {
      check_problem_flags(pf_shoot);
      if (!(sh_delta > 0.0)) usage_fail("--delta", "must be > 0");
      if (!(sh_eps >= 0.0)) usage_fail("--epsilon", "must be >= 0");
      if (!(sh_offset > 0.0)) usage_fail("--offset", "must be > 0");
      if (!(sh_rel_tol > 0.0)) usage_fail("--rel-tol", "must be > 0");
      if (!(sh_abs_tol > 0.0)) usage_fail("--abs-tol", "must be > 0");
      const WaveProblem p = build_problem(pf_shoot);
      ShootOptions opt;
      opt.offset_rel = sh_offset;
      IntegratorConfig cfg = IntegratorConfig::defaults_for(p);
      cfg.rel_tol = sh_rel_tol;
      cfg.abs_tol = sh_abs_tol;
      opt.config = cfg;
      const ShootResult r = shoot(p, sh_delta, sh_eps, opt);
      JsonOut j;
      j.add("classification", to_string(r.cls.kind));
      j.add("crossings", r.cls.crossings);
      if (!r.cls.reason.empty()) j.add("reason", r.cls.reason);
      if (r.entry_slope) j.add("entry_slope", *r.entry_slope);
      if (const auto* ev = r.orbit.terminal()) j.add("terminal_event", to_string(ev->kind));
      j.add("t_end", r.orbit.t.empty() ? 0.0 : r.orbit.t.back());
      j.add("min_w", r.orbit.min_w());
      j.add("max_w", r.orbit.max_w());
      j.add("samples", static_cast<long>(r.orbit.size()));
      j.add("eps0", eps0(p, sh_delta));
      if (!sh_orbit_out.empty()) {
        write_file_atomic(sh_orbit_out, orbit_csv(r.orbit));
        j.add("orbit_csv", sh_orbit_out);
      }
      emit(j);
      return 0;
    }

    if (cmd_em->parsed()) {
      check_problem_flags(pf_em);
      if (!(em_delta > 0.0)) usage_fail("--delta", "must be > 0");
      if (!(em_tol > 0.0)) usage_fail("--tol", "must be > 0");
      const WaveProblem p = build_problem(pf_em);
      const BisectionResult r = eps_min(p, em_delta, em_tol);
      JsonOut j;
      j.add("eps_min", r.eps_min);
      j.add("bracket_lo", r.bracket.first);
      j.add("bracket_hi", r.bracket.second);
      j.add("iterations", r.iterations);
      j.add("entry_at_min", to_string(r.entry_at_min.kind));
      j.add("eps0", eps0(p, em_delta));
      j.add("delta", em_delta);
      j.add("tol", em_tol);
      emit(j);
      return 0;
    }

    if (cmd_curve->parsed()) {
      check_problem_flags(pf_curve);
      if (!(cv_min > 0.0)) usage_fail("--delta-min", "must be > 0");
      if (!(cv_max > cv_min)) usage_fail("--delta-max", "must exceed --delta-min");
      if (cv_points < 2) usage_fail("--points", "need at least 2");
      if (!(cv_tol > 0.0)) usage_fail("--tol", "must be > 0");
      if (cv_workers < 0) usage_fail("--workers", "must be >= 0");
      const int workers = resolve_workers(cv_workers);
      const WaveProblem p = build_problem(pf_curve);
      const auto grid = make_grid(cv_min, cv_max, cv_points, !cv_linear);
      const auto points = boundary_curve(p, grid, cv_tol, workers);
      write_file_atomic(cv_out, curve_csv(points));
      double best = std::numeric_limits<double>::infinity();
      double best_delta = grid.front();
      int failures = 0;
      std::vector<double> local_minima;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const double e = points[i].eps_min;
        if (!std::isfinite(e)) {
          ++failures;
          continue;
        }
        if (e < best) {
          best = e;
          best_delta = points[i].delta;
        }
        const bool left_ok = i == 0 || !std::isfinite(points[i - 1].eps_min) ||
                             points[i - 1].eps_min >= e;
        const bool right_ok = i + 1 == points.size() ||
                              !std::isfinite(points[i + 1].eps_min) ||
                              points[i + 1].eps_min >= e;
        if (i > 0 && i + 1 < points.size() && left_ok && right_ok)
          local_minima.push_back(points[i].delta);
      }
      JsonOut j;
      j.add("points", static_cast<long>(points.size()));
      j.add("failures", failures);
      j.add("eps_min_min", best);
      j.add("delta_at_min", best_delta);
      j.add("local_min_count", static_cast<long>(local_minima.size()));
      j.add("out", cv_out);
      emit(j);
      return 0;
    }

    if (cmd_sing->parsed()) {
      check_problem_flags(pf_sing);
      if (sg_eps && !(*sg_eps > 0.0)) usage_fail("--epsilon", "must be > 0");
      if (sg_delta && !(*sg_delta > 0.0)) usage_fail("--delta", "must be > 0");
      if (sg_grid < 8) usage_fail("--grid-n", "need at least 8");
      if (sg_branch_n < 2) usage_fail("--branch-n", "need at least 2");
      const WaveProblem p = build_problem(pf_sing);
      const double es = eps_star(p);
      const double eps_used = sg_eps ? *sg_eps : es;
      const SingularProfile prof = z0_profile(p, eps_used, sg_grid);
      JsonOut j;
      j.add("eps_star", es);
      j.add("epsilon", eps_used);
      j.add("z0_max", prof.z0_max);
      j.add("z0_argmax", prof.z0_argmax);
      if (sg_delta) j.add("predicted_min_w", prof.predicted_min_w(*sg_delta));
      if (!sg_profile_out.empty()) {
        write_file_atomic(sg_profile_out, profile_csv(prof));
        j.add("profile_csv", sg_profile_out);
      }
      if (!sg_branch_out.empty()) {
        const auto sweep = branch_sweep(p, pf_sing.alpha, eps_used, sg_branch_n);
        write_file_atomic(sg_branch_out, branch_csv(sweep));
        j.add("branches_csv", sg_branch_out);
      }
      emit(j);
      return 0;
    }

    if (cmd_hr->parsed()) {
      check_problem_flags(pf_hr);
      if (!(pf_hr.alpha > 0.5)) usage_fail("--alpha", "must be > 1/2");
      const WaveProblem p = build_problem(pf_hr);
      const HadelerRothe hr = hadeler_rothe(p, pf_hr.alpha);
      const double h = h_closed_form(p, pf_hr.alpha);
      JsonOut j;
      j.add("a_star", hr.a_star);
      j.add("value", hr.value);
      j.add("h_alpha", h);
      j.add("abs_diff", std::abs(hr.value - h));
      emit(j);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 1;
  }

  return 2;
}
