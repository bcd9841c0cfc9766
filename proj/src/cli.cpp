#include "nsbounds/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "nsbounds/cloning.hpp"
#include "nsbounds/map_prepare.hpp"
#include "nsbounds/metrology.hpp"
#include "nsbounds/numeric.hpp"
#include "nsbounds/replication.hpp"
#include "nsbounds/report.hpp"
#include "nsbounds/signaling.hpp"
#include "nsbounds/symmetric.hpp"

namespace nsb {

namespace {

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
  double tol = 1e-9;
  unsigned long long seed = 0;
};

void add_common(CLI::App* sub, CommonOpts* opts) {
  sub->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", opts->out_path, "Write output to a file instead of stdout");
  sub->add_option("--tol", opts->tol, "Tolerance for verification subcommands")
      ->capture_default_str();
  sub->add_option("--seed", opts->seed, "Seed for randomized verification modes")
      ->capture_default_str();
}

struct RealGrid {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  std::vector<double> points() const {
    std::vector<double> out;
    out.reserve(count);
    if (count == 1) {
      out.push_back(start);
      return out;
    }
    for (int i = 0; i < count; ++i) {
      out.push_back(start + (stop - start) * i / (count - 1));
    }
    return out;
  }
};

// start:stop:count with inclusive endpoints.
RealGrid parse_grid(const std::string& text) {
  RealGrid grid;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &grid.start, &grid.stop, &grid.count, &extra) != 3 ||
      grid.count < 1) {
    throw CLI::ValidationError("grid", "expected start:stop:count with count >= 1");
  }
  return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("list", "expected a comma-separated list of integers");
  return out;
}

CircularDistribution parse_distribution(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "uniform") return CircularDistribution::uniform();
  if (kind == "step") return CircularDistribution::step(std::stoi(arg));
  if (kind == "diffusion") return CircularDistribution::diffusion(std::stod(arg));
  if (kind == "cosine") return CircularDistribution::raised_cosine(std::stoi(arg));
  if (kind == "truncated-step") {
    const int n = std::stoi(arg);
    const CircularDistribution full = CircularDistribution::step(n);
    std::vector<double> coeffs(n);
    for (int k = 1; k <= n; ++k) coeffs[k - 1] = full.fourier(k);
    return CircularDistribution::from_fourier(std::move(coeffs));
  }
  throw CLI::ValidationError(
      "dist", "expected uniform | step:N | diffusion:t | cosine:K | truncated-step:N");
}

int emit(const std::vector<BoundReport>& reports, const CommonOpts& opts, std::ostream& out,
         std::ostream& err) {
  const std::string text = opts.format == "json"
                               ? (reports.size() == 1 ? to_json(reports.front()) : to_json(reports))
                               : to_csv(reports);
  if (opts.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file " << opts.out_path << "\n";
    return 1;
  }
  file << text;
  return 0;
}

BoundReport clone_bound_report(const char* task, int n, int m, bool with_erf) {
  const CloneBound bound = clone_bound(n, m);
  BoundReport r;
  r.task = task;
  r.provenance = "central-binomial-window-sum";
  r.with_param("n", bound.n_inputs).with_param("m", bound.m_outputs);
  r.with_value("value", bound.value);
  if (with_erf) {
    const CloneBound approx = clone_bound(n, m, CloneBound::Method::erf_approx);
    r.with_value("erf_value", approx.value);
    r.with_value("erf_gap", std::abs(approx.value - bound.value));
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"No-signaling bounds for phase-covariant cloning, unitary replication, "
               "and Bayesian phase estimation"};
  app.require_subcommand(1);

  CommonOpts opts;

  // clone-bound
  int cb_n = 0, cb_m = 0;
  bool cb_erf = false;
  auto* clone_bound_cmd = app.add_subcommand("clone-bound", "N->M cloning fidelity bound");
  clone_bound_cmd->add_option("--n", cb_n, "Input copies N")->required();
  clone_bound_cmd->add_option("--m", cb_m, "Output copies M")->required();
  clone_bound_cmd->add_flag("--erf", cb_erf, "Also report the Gaussian-tail approximation");
  add_common(clone_bound_cmd, &opts);

  // clone-verify
  int cv_n = 0, cv_m = 0, cv_grid = 64;
  bool cv_random = false;
  auto* clone_verify_cmd =
      app.add_subcommand("clone-verify", "Check the constructive protocol attains the bound");
  clone_verify_cmd->add_option("--n", cv_n, "Input copies N")->required();
  clone_verify_cmd->add_option("--m", cv_m, "Output copies M")->required();
  clone_verify_cmd->add_option("--grid", cv_grid, "Number of phase samples")->capture_default_str();
  clone_verify_cmd->add_flag("--random", cv_random, "Sample phases randomly (uses --seed)");
  add_common(clone_verify_cmd, &opts);

  // replicate-bound
  int rb_n = 0, rb_m = 0;
  auto* replicate_cmd = app.add_subcommand("replicate-bound", "Unitary replication bound");
  replicate_cmd->add_option("--n", rb_n, "Black-box uses N")->required();
  replicate_cmd->add_option("--m", rb_m, "Replicas M")->required();
  add_common(replicate_cmd, &opts);

  // ml
  int ml_n = 0;
  auto* ml_cmd = app.add_subcommand("ml", "Maximum-likelihood ratio of the flat probe");
  ml_cmd->add_option("--n", ml_n, "Probe excitation cutoff N")->required();
  add_common(ml_cmd, &opts);

  // align
  int al_n = 0;
  bool al_quantum = false;
  auto* align_cmd = app.add_subcommand("align", "Alignment fidelity of the sharp-window rule");
  align_cmd->add_option("--n", al_n, "Probe excitation cutoff N")->required();
  align_cmd->add_flag("--quantum", al_quantum, "Also report the optimal quantum probe value");
  add_common(align_cmd, &opts);

  // diffuse
  int df_n = 0;
  std::string df_grid;
  auto* diffuse_cmd = app.add_subcommand("diffuse", "Diffused-prior bound sweep over t");
  diffuse_cmd->add_option("--n", df_n, "Probe excitation cutoff N")->required();
  diffuse_cmd->add_option("--t-grid", df_grid, "Diffusion times start:stop:count")->required();
  add_common(diffuse_cmd, &opts);

  // mp
  int mp_n = 0, mp_m = 0;
  double mp_sigma = 0.0;
  auto* mp_cmd = app.add_subcommand("mp", "Measure-and-prepare fidelity of a Gaussian output");
  mp_cmd->add_option("--n", mp_n, "Input copies N")->required();
  mp_cmd->add_option("--m", mp_m, "Output copies M")->required();
  mp_cmd->add_option("--sigma", mp_sigma, "Gaussian width (defaults to M^(1/3))");
  add_common(mp_cmd, &opts);

  // signal-test
  std::string st_dist;
  int st_n = 0;
  auto* signal_cmd = app.add_subcommand("signal-test", "Fourier nullity test of an outcome rule");
  signal_cmd->add_option("--dist", st_dist,
                         "Rule: uniform | step:N | diffusion:t | cosine:K | truncated-step:N")
      ->required();
  signal_cmd->add_option("--n", st_n, "Probe excitation cutoff N")->required();
  add_common(signal_cmd, &opts);

  // sweep
  std::string sw_task;
  std::string sw_n_list, sw_m_list, sw_t_grid, sw_sigma_list;
  auto* sweep_cmd = app.add_subcommand("sweep", "Cartesian parameter sweep of a task");
  sweep_cmd->add_option("--task", sw_task, "Task to sweep")
      ->check(CLI::IsMember({"clone-bound", "replicate-bound", "ml", "align", "diffuse", "mp"}))
      ->required();
  sweep_cmd->add_option("--n", sw_n_list, "Comma-separated N values");
  sweep_cmd->add_option("--m", sw_m_list, "Comma-separated M values");
  sweep_cmd->add_option("--t-grid", sw_t_grid, "Diffusion times start:stop:count");
  sweep_cmd->add_option("--sigma", sw_sigma_list, "Comma-separated Gaussian widths");
  add_common(sweep_cmd, &opts);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nsb");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (clone_bound_cmd->parsed()) {
      return emit({clone_bound_report("clone-bound", cb_n, cb_m, cb_erf)}, opts, out, err);
    }

    if (clone_verify_cmd->parsed()) {
      if (cv_grid < 1) {
        err << "error: --grid must be positive\n";
        return 1;
      }
      const double bound = ns_global_bound(cv_n, cv_m);
      const PhaseAmplitudes input = optimal_input_state(cv_n, cv_m);
      std::mt19937_64 rng(opts.seed);
      std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
      double max_deviation = 0.0;
      for (int i = 0; i < cv_grid; ++i) {
        const double theta = cv_random ? uniform(rng) : kTwoPi * i / cv_grid;
        const PhaseAmplitudes output = clone_map(apply_phase(input, theta), cv_n, cv_m);
        max_deviation = std::max(max_deviation,
                                 std::abs(global_clone_fidelity(output, theta) - bound));
      }
      const double mixture_distance = verify_ns_mixture(cv_n, cv_m, 0.0, 0.37);
      BoundReport r;
      r.task = "clone-verify";
      r.provenance = "window-embedding-protocol";
      r.with_param("n", cv_n).with_param("m", cv_m).with_param("grid", cv_grid);
      r.with_value("bound", bound)
          .with_value("max_deviation", max_deviation)
          .with_value("mixture_distance", mixture_distance);
      const int emit_rc = emit({r}, opts, out, err);
      if (emit_rc != 0) return emit_rc;
      return (max_deviation <= opts.tol && mixture_distance <= opts.tol) ? 0 : 2;
    }

    if (replicate_cmd->parsed()) {
      BoundReport r;
      r.task = "replicate-bound";
      r.provenance = "central-binomial-window-sum";
      r.with_param("n", rb_n).with_param("m", rb_m);
      r.with_value("value", ns_replication_bound(rb_n, rb_m));
      return emit({r}, opts, out, err);
    }

    if (ml_cmd->parsed()) {
      BoundReport r;
      r.task = "ml";
      r.provenance = "coherent-peak-likelihood";
      r.with_param("n", ml_n);
      r.with_value("value", max_likelihood_ratio(ml_state(ml_n)))
          .with_value("bound", ml_n + 1.0);
      return emit({r}, opts, out, err);
    }

    if (align_cmd->parsed()) {
      BoundReport r;
      r.task = "align";
      r.provenance = "sharp-window-alignment";
      r.with_param("n", al_n);
      r.with_value("value", ns_alignment_fidelity_exact(al_n));
      if (al_quantum) {
        const double quantum = quantum_alignment_fidelity(berry_wiseman_state(al_n));
        r.with_value("quantum", quantum);
        r.with_value("gap", ns_alignment_fidelity_exact(al_n) - quantum);
      }
      return emit({r}, opts, out, err);
    }

    if (diffuse_cmd->parsed()) {
      if (df_n < 1) {
        err << "error: --n must be positive\n";
        return 1;
      }
      std::vector<BoundReport> rows;
      for (const double t : parse_grid(df_grid).points()) {
        const double theta4 = jacobi_theta4(t);
        BoundReport r;
        r.task = "diffuse";
        r.provenance = "theta4-diffused-window";
        r.with_param("n", df_n).with_param("t", t);
        r.with_value("theta4", theta4)
            .with_value("bound_error", kPi * kPi / (12.0 * df_n * df_n) * theta4)
            .with_value("prior_error", prior_error(t));
        rows.push_back(std::move(r));
      }
      return emit(rows, opts, out, err);
    }

    if (mp_cmd->parsed()) {
      const double sigma = mp_cmd->count("--sigma") > 0 ? mp_sigma : std::cbrt(mp_m);
      if (mp_m < 10 * mp_n * mp_n) {
        err << "warning: det_asymptotic is an M -> infinity expansion; "
            << "M < 10 N^2 lies outside its regime\n";
      }
      const double bound = ns_global_bound(mp_n, mp_m);
      const double fidelity = mp_fidelity(gaussian_state(mp_m, sigma), mp_operator(mp_n, mp_m));
      BoundReport r;
      r.task = "mp";
      r.provenance = "triangular-kernel-quadratic-form";
      r.with_param("n", mp_n).with_param("m", mp_m).with_param("sigma", sigma);
      r.with_value("fidelity", fidelity)
          .with_value("bound", bound)
          .with_value("ratio", fidelity / bound)
          .with_value("naive", naive_mp_fidelity(mp_n, mp_m))
          .with_value("asymptotic", mp_asymptotic(mp_n, mp_m))
          .with_value("det_asymptotic", det_NtoM_asymptotic(mp_n, mp_m));
      return emit({r}, opts, out, err);
    }

    if (signal_cmd->parsed()) {
      const CircularDistribution dist = parse_distribution(st_dist);
      const double tol = opts.tol > 0.0 ? opts.tol : 1e-10;
      const SignalVerdict verdict = ns_compatible(dist, st_n, tol);
      BoundReport r;
      r.task = "signal-test";
      r.provenance = "fourier-nullity-scan";
      r.with_param("dist", st_dist).with_param("n", st_n).with_param("tol", tol);
      r.with_value("compatible", verdict.compatible ? 1.0 : 0.0)
          .with_value("worst_k", verdict.worst_k)
          .with_value("worst_component", verdict.worst_component)
          .with_value("magnitude", verdict.magnitude);
      const int emit_rc = emit({r}, opts, out, err);
      if (emit_rc != 0) return emit_rc;
      return verdict.compatible ? 0 : 2;
    }

    if (sweep_cmd->parsed()) {
      std::vector<int> ns = sw_n_list.empty() ? std::vector<int>{} : parse_int_list(sw_n_list);
      std::vector<int> ms = sw_m_list.empty() ? std::vector<int>{} : parse_int_list(sw_m_list);
      std::vector<BoundReport> rows;

      if (sw_task == "clone-bound" || sw_task == "replicate-bound") {
        if (ns.empty() || ms.empty()) {
          err << "error: sweep --task " << sw_task << " needs --n and --m lists\n";
          return 1;
        }
        for (const int n : ns) {
          for (const int m : ms) {
            if (m < n) continue;
            rows.push_back(clone_bound_report(sw_task.c_str(), n, m, false));
          }
        }
      } else if (sw_task == "ml" || sw_task == "align") {
        if (ns.empty()) {
          err << "error: sweep --task " << sw_task << " needs an --n list\n";
          return 1;
        }
        for (const int n : ns) {
          BoundReport r;
          r.task = sw_task;
          r.with_param("n", n);
          if (sw_task == "ml") {
            r.provenance = "coherent-peak-likelihood";
            r.with_value("value", max_likelihood_ratio(ml_state(n))).with_value("bound", n + 1.0);
          } else {
            r.provenance = "sharp-window-alignment";
            r.with_value("value", ns_alignment_fidelity_exact(n))
                .with_value("quantum", quantum_alignment_fidelity(berry_wiseman_state(n)));
          }
          rows.push_back(std::move(r));
        }
      } else if (sw_task == "diffuse") {
        if (ns.empty() || sw_t_grid.empty()) {
          err << "error: sweep --task diffuse needs --n and --t-grid\n";
          return 1;
        }
        for (const int n : ns) {
          for (const double t : parse_grid(sw_t_grid).points()) {
            const double theta4 = jacobi_theta4(t);
            BoundReport r;
            r.task = "diffuse";
            r.provenance = "theta4-diffused-window";
            r.with_param("n", n).with_param("t", t);
            r.with_value("theta4", theta4)
                .with_value("bound_error", kPi * kPi / (12.0 * n * n) * theta4)
                .with_value("prior_error", prior_error(t));
            rows.push_back(std::move(r));
          }
        }
      } else if (sw_task == "mp") {
        if (ns.empty() || ms.empty()) {
          err << "error: sweep --task mp needs --n and --m lists\n";
          return 1;
        }
        std::vector<double> sigmas;
        if (!sw_sigma_list.empty()) {
          for (const int s : parse_int_list(sw_sigma_list)) sigmas.push_back(s);
        }
        for (const int n : ns) {
          for (const int m : ms) {
            const std::vector<double> row_sigmas =
                sigmas.empty() ? std::vector<double>{std::cbrt(m)} : sigmas;
            for (const double sigma : row_sigmas) {
              const double bound = ns_global_bound(n, m);
              const double fidelity = mp_fidelity(gaussian_state(m, sigma), mp_operator(n, m));
              BoundReport r;
              r.task = "mp";
              r.provenance = "triangular-kernel-quadratic-form";
              r.with_param("n", n).with_param("m", m).with_param("sigma", sigma);
              r.with_value("fidelity", fidelity)
                  .with_value("bound", bound)
                  .with_value("ratio", fidelity / bound);
              rows.push_back(std::move(r));
            }
          }
        }
      }
      if (rows.empty()) {
        err << "error: sweep produced no rows\n";
        return 1;
      }
      return emit(rows, opts, out, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "error: no subcommand\n";
  return 1;
}

}  // namespace nsb
