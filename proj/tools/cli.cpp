#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prsim/async_iter.hpp"
#include "prsim/consensus.hpp"
#include "prsim/dist_simul.hpp"
#include "prsim/dist_single.hpp"
#include "prsim/ergodicity.hpp"
#include "prsim/errors.hpp"
#include "prsim/monte_carlo.hpp"
#include "prsim/spectral.hpp"
#include "prsim/termination.hpp"
#include "prsim/trace.hpp"
#include "prsim/verify.hpp"
#include "prsim/web_graph.hpp"

namespace prsim::cli {

namespace {

struct CommonOpts {
  std::string graph_path;
  double m = 0.15;
  double alpha = 0.5;
  double delta = 0.01;
  std::uint64_t ns = 200;
  std::uint64_t steps = 10000;
  std::uint64_t seed = 0;
  std::uint64_t runs = 100;
  std::uint64_t sample_every = 100;
  double tol = 1e-10;
  std::string out_path;
  std::string format = "csv";
};

WebGraph load_patched(const std::string& path) {
  // The dangling patch is idempotent, so it is always applied on load.
  return patch_dangling(load_edge_list_file(path));
}

void write_or_print(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot open output file: " + out_path);
  out << content;
}

void emit_trace(const SimTrace& trace, const CommonOpts& o) {
  std::ostringstream body;
  if (o.format == "json")
    write_trace_json(body, trace);
  else
    write_trace_csv(body, trace);
  write_or_print(o.out_path, body.str());

  // Termination times go to a companion file when writing CSV to disk.
  if (trace.term_times && o.format == "csv" && !o.out_path.empty()) {
    const std::string term_path = o.out_path + ".term.csv";
    std::ofstream term_out(term_path);
    if (!term_out) throw ValidationError("cannot open output file: " + term_path);
    write_term_times_csv(term_out, *trace.term_times);
    std::cerr << "termination times written to " << term_path << "\n";
  }
}

void print_trace_summary(const SimTrace& t) {
  const TraceSample& last = t.samples.back();
  std::fprintf(stdout, "scheme=%s n=%zu steps=%llu final: err_l1=%.6g err_linf=%.6g sum_y=%.6g\n",
               t.meta.scheme.c_str(), t.meta.n,
               static_cast<unsigned long long>(t.steps_run), last.err_l1, last.err_linf,
               last.sum);
}

void add_graph_flag(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--graph", o.graph_path, "edge-list graph file")->required();
}

int cmd_solve(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  const LinkMatrix A = LinkMatrix::from_graph(g);
  const PowerResult r = power_method(A, o.m, o.tol);
  std::fprintf(stdout, "n=%zu iterations=%zu residual=%.3e\n", g.n, r.iterations, r.residual);
  const std::size_t show = std::min<std::size_t>(g.n, 20);
  for (std::size_t i = 0; i < show; ++i)
    std::fprintf(stdout, "x[%zu] = %.6f\n", i, r.x_star[i]);
  if (g.n > show) std::fprintf(stdout, "... (%zu more)\n", g.n - show);

  if (!o.out_path.empty() || o.format == "json") {
    std::ostringstream body;
    if (o.format == "json") {
      nlohmann::json doc{{"n", g.n},
                         {"m", o.m},
                         {"iterations", r.iterations},
                         {"residual", r.residual},
                         {"x_star", r.x_star}};
      body << doc.dump(2) << '\n';
    } else {
      body << "page,value\n";
      for (std::size_t i = 0; i < g.n; ++i) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, r.x_star[i]);
        body << buf;
      }
    }
    write_or_print(o.out_path, body.str());
  }
  return 0;
}

int cmd_sim_single(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  SchemeParams p{o.m, o.alpha, o.seed};
  const SimTrace t = simulate_single(g, p, o.steps, o.sample_every);
  print_trace_summary(t);
  if (!o.out_path.empty() || o.format == "json") emit_trace(t, o);
  return 0;
}

int cmd_sim_simul(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  SchemeParams p{o.m, o.alpha, o.seed};
  const SimTrace t = simulate_simul(g, p, o.steps, o.sample_every);
  print_trace_summary(t);
  if (!o.out_path.empty() || o.format == "json") emit_trace(t, o);
  return 0;
}

int cmd_sim_terminate(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  SchemeParams p{o.m, o.alpha, o.seed};
  TerminationParams tp{o.delta, o.ns};
  const SimTrace t = simulate_terminating(g, p, tp, o.steps, o.sample_every);
  print_trace_summary(t);
  std::size_t done = 0;
  for (std::int64_t tt : *t.term_times)
    if (tt >= 0) ++done;
  std::fprintf(stdout, "terminated pages: %zu/%zu\n", done, g.n);
  if (!o.out_path.empty() || o.format == "json") emit_trace(t, o);
  return 0;
}

int cmd_sim_async(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  SchemeParams p{o.m, o.alpha, o.seed};
  const SimTrace t = simulate_async(g, p, o.steps, o.tol);
  print_trace_summary(t);
  std::fprintf(stdout, "%s after %llu steps (tol %.3e)\n",
               t.reached_tol ? "converged" : "tolerance not reached",
               static_cast<unsigned long long>(t.steps_run), o.tol);
  if (!o.out_path.empty() || o.format == "json") emit_trace(t, o);
  return 0;
}

int cmd_consensus(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  RankVector x0(g.n, 0.0);
  x0[0] = 1.0;  // deterministic default start
  const SimTrace t = simulate_consensus(g, x0, o.seed, o.steps, o.tol, o.sample_every);
  print_trace_summary(t);
  std::fprintf(stdout, "%s after %llu steps, disagreement=%.3e, value=%.6f\n",
               t.reached_tol ? "consensus reached" : "consensus not reached",
               static_cast<unsigned long long>(t.steps_run), t.samples.back().err_linf,
               t.final_x[0]);
  if (!o.out_path.empty() || o.format == "json") emit_trace(t, o);
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  const WebGraph g = load_patched(o.graph_path);
  const auto results = run_verification(g, o.m, o.seed);
  bool all_ok = true;
  std::fprintf(stdout, "%-45s %-8s %s\n", "check", "status", "detail");
  for (const CheckResult& r : results) {
    const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    if (!r.skipped && !r.passed) all_ok = false;
    std::fprintf(stdout, "%-45s %-8s %s\n", r.name.c_str(), status, r.detail.c_str());
  }
  return all_ok ? 0 : 2;
}

int cmd_mc(const CommonOpts& o, const std::string& scheme_name) {
  const WebGraph g = load_patched(o.graph_path);
  SchemeParams p{o.m, o.alpha, o.seed};
  const Scheme scheme =
      scheme_name == "single" ? Scheme::single_update : Scheme::simultaneous;
  const MCSummary s = mc_mean_square(scheme, g, p, o.runs, o.steps, o.sample_every);
  std::fprintf(stdout, "scheme=%s runs=%zu final mean||y-x*||^2 = %.6e (bound %.6e)\n",
               scheme_name.c_str(), s.runs, s.mean_sq_err.back(),
               mean_square_error_bound(s.mhat, s.ks.back()));
  std::ostringstream body;
  body << "k,mean_sq_err,ms_bound\n";
  for (std::size_t i = 0; i < s.ks.size(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n",
                  static_cast<unsigned long long>(s.ks[i]), s.mean_sq_err[i],
                  mean_square_error_bound(s.mhat, s.ks[i]));
    body << buf;
  }
  if (!o.out_path.empty()) write_or_print(o.out_path, body.str());
  return 0;
}

int cmd_gen(std::size_t n, std::size_t hubs, std::size_t min_deg, std::size_t max_deg,
            std::uint64_t seed, const std::string& out_path) {
  const WebGraph g = random_web(n, seed, hubs, min_deg, max_deg);
  std::ostringstream body;
  body << "n " << g.n << "\n";
  for (std::uint32_t src = 0; src < g.n; ++src)
    for (std::uint32_t dst : g.out_links[src]) body << src << ' ' << dst << "\n";
  write_or_print(out_path, body.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("prsim");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Randomized distributed PageRank simulator"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string mc_scheme = "single";
  std::size_t gen_n = 1000, gen_hubs = 10, gen_min = 2, gen_max = 333;

  auto add_common = [&](CLI::App* cmd, bool with_graph = true) {
    if (with_graph) add_graph_flag(cmd, o);
    cmd->add_option("--m", o.m, "damping factor in (0,1)")->check(CLI::Range(1e-9, 1.0 - 1e-9));
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--out", o.out_path, "output file path");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    return cmd;
  };

  CLI::App* solve = add_common(app.add_subcommand("solve", "centralized power method"));
  solve->add_option("--tol", o.tol, "l1 stopping tolerance")->check(CLI::PositiveNumber);

  CLI::App* ssingle =
      add_common(app.add_subcommand("sim-single", "one random page updates per step"));
  ssingle->add_option("--steps", o.steps, "number of steps");
  ssingle->add_option("--sample-every", o.sample_every, "trace sampling stride");

  CLI::App* ssimul = add_common(
      app.add_subcommand("sim-simul", "pages update independently with probability alpha"));
  ssimul->add_option("--alpha", o.alpha, "update probability in (0,1]")
      ->check(CLI::Range(1e-12, 1.0));
  ssimul->add_option("--steps", o.steps, "number of steps");
  ssimul->add_option("--sample-every", o.sample_every, "trace sampling stride");

  CLI::App* sterm = add_common(
      app.add_subcommand("sim-terminate", "simultaneous updates with value freezing"));
  sterm->add_option("--alpha", o.alpha, "update probability in (0,1]")
      ->check(CLI::Range(1e-12, 1.0));
  sterm->add_option("--delta", o.delta, "relative stability level in (0,1)")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  sterm->add_option("--ns", o.ns, "stability window length");
  sterm->add_option("--steps", o.steps, "maximum number of steps");
  sterm->add_option("--sample-every", o.sample_every, "trace sampling stride");

  CLI::App* sasync =
      add_common(app.add_subcommand("sim-async", "randomized asynchronous power iteration"));
  sasync->add_option("--alpha", o.alpha, "update probability in (0,1]")
      ->check(CLI::Range(1e-12, 1.0));
  sasync->add_option("--steps", o.steps, "maximum number of steps");
  sasync->add_option("--tol", o.tol, "linf stopping tolerance")->check(CLI::PositiveNumber);

  CLI::App* cons =
      add_common(app.add_subcommand("consensus", "randomized averaging consensus baseline"));
  cons->add_option("--steps", o.steps, "maximum number of steps");
  cons->add_option("--tol", o.tol, "disagreement stopping tolerance")
      ->check(CLI::PositiveNumber);
  cons->add_option("--sample-every", o.sample_every, "trace sampling stride");

  CLI::App* verify = add_common(app.add_subcommand("verify", "matrix identity checks"));

  CLI::App* mc = add_common(app.add_subcommand("mc", "mean-square error over seeded runs"));
  mc->add_option("--scheme", mc_scheme, "single or simul")
      ->check(CLI::IsMember({"single", "simul"}));
  mc->add_option("--alpha", o.alpha, "update probability in (0,1]")
      ->check(CLI::Range(1e-12, 1.0));
  mc->add_option("--runs", o.runs, "number of runs (>= 2)");
  mc->add_option("--steps", o.steps, "steps per run");
  mc->add_option("--sample-every", o.sample_every, "sampling stride");

  CLI::App* gen = app.add_subcommand("gen", "write a random web as an edge list");
  gen->add_option("--n", gen_n, "page count")->required();
  gen->add_option("--hubs", gen_hubs, "hub page count");
  gen->add_option("--min-deg", gen_min, "minimum drawn out-degree");
  gen->add_option("--max-deg", gen_max, "maximum drawn out-degree");
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--out", o.out_path, "output file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (ssingle->parsed()) return cmd_sim_single(o);
    if (ssimul->parsed()) return cmd_sim_simul(o);
    if (sterm->parsed()) return cmd_sim_terminate(o);
    if (sasync->parsed()) return cmd_sim_async(o);
    if (cons->parsed()) return cmd_consensus(o);
    if (verify->parsed()) return cmd_verify(o);
    if (mc->parsed()) return cmd_mc(o, mc_scheme);
    if (gen->parsed()) return cmd_gen(gen_n, gen_hubs, gen_min, gen_max, o.seed, o.out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace prsim::cli
