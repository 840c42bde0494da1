#include "icover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "icover/approx.hpp"
#include "icover/errors.hpp"
#include "icover/exact_dp.hpp"
#include "icover/generators.hpp"
#include "icover/greedy.hpp"
#include "icover/io.hpp"
#include "icover/rational.hpp"
#include "icover/set_system.hpp"

namespace icover::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

int emit(const std::string& text, const std::string& path, std::ostream& out,
         std::ostream& err) {
  if (path == "-") {
    out << text;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot open '" + path + "' for writing\n";
    return 1;
  }
  f << text;
  return 0;
}

std::string join_ids(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ' ';
    s += names[i];
  }
  return s;
}

Rational parse_eps(const std::string& text) {
  Rational eps;
  try {
    eps = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("--eps: ") + e.what());
  }
  if (eps.num <= 0) throw std::invalid_argument("--eps must be positive");
  return eps;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"interval point-cover toolkit"};
  app.name("icover");
  app.require_subcommand(1);

  std::string input = "-", output = "-", format = "table";
  const auto add_io = [&](CLI::App* sub, bool with_format) {
    sub->add_option("-i,--input", input, "input file, '-' for stdin");
    sub->add_option("-o,--output", output, "output file, '-' for stdout");
    if (with_format)
      sub->add_option("--format", format, "table or csv")
          ->check(CLI::IsMember({"table", "csv"}));
  };

  std::int64_t s = 0;
  auto* c_tight = app.add_subcommand("gen-tight", "three-interval greedy worst case");
  c_tight->add_option("--s", s, "half the point count; even, >= 2")->required();
  add_io(c_tight, false);

  int n_points = 0, m_intervals = 0;
  std::int64_t range = 0, max_len = 0;
  std::uint64_t seed = 0;
  auto* c_rand = app.add_subcommand("gen-random", "seeded random instance");
  c_rand->add_option("--points", n_points, "number of points")->required();
  c_rand->add_option("--intervals", m_intervals, "number of intervals")->required();
  c_rand->add_option("--range", range, "coordinate range")->required();
  c_rand->add_option("--seed", seed, "RNG seed");
  c_rand->add_option("--max-len", max_len, "interval length cap, 0 = range/8");
  add_io(c_rand, false);

  std::string preset;
  int u = 0;
  std::string alpha_s, beta_s, gamma_s;
  auto* c_ctr = app.add_subcommand(
      "gen-counterexample", "set system whose best-k profits are not monotone");
  auto* o_preset = c_ctr->add_option("--preset", preset, "named preset: u2")
                       ->check(CLI::IsMember({"u2"}));
  auto* o_u = c_ctr->add_option("--u", u, "number of B-sets, >= 2");
  auto* o_alpha = c_ctr->add_option("--alpha", alpha_s, "B family mass (rational)");
  auto* o_beta = c_ctr->add_option("--beta", beta_s, "C family mass (rational)");
  auto* o_gamma = c_ctr->add_option("--gamma", gamma_s, "D family mass (rational)");
  o_preset->excludes(o_u)->excludes(o_alpha)->excludes(o_beta)->excludes(o_gamma);
  o_u->needs(o_alpha)->needs(o_beta)->needs(o_gamma);
  o_alpha->needs(o_u);
  o_beta->needs(o_u);
  o_gamma->needs(o_u);
  add_io(c_ctr, false);

  int k = 0;
  auto* c_exact = app.add_subcommand("solve-exact", "optimal cover of at most k intervals");
  c_exact->add_option("--k", k, "budget")->required();
  add_io(c_exact, true);

  int greedy_k = -1;
  auto* c_greedy = app.add_subcommand("solve-greedy", "greedy cover, step by step");
  c_greedy->add_option("--k", greedy_k, "steps to report; default all");
  add_io(c_greedy, true);

  std::string eps_s;
  auto* c_approx = app.add_subcommand(
      "solve-approx", "near-optimal cover of at most k + floor(eps*k) intervals");
  c_approx->add_option("--k", k, "budget")->required();
  c_approx->add_option("--eps", eps_s, "budget slack, rational > 0")->required();
  add_io(c_approx, true);

  int k_max = 0;
  auto* c_ratio = app.add_subcommand("ratio-report", "greedy prefix vs optimum per budget");
  c_ratio->add_option("--k-max", k_max, "largest budget; default m");
  add_io(c_ratio, true);

  auto* c_verify = app.add_subcommand(
      "verify-dr", "check that best-k marginal profits never increase");
  c_verify->add_option("--k-max", k_max, "largest budget; default all");
  add_io(c_verify, false);

  auto* c_brute = app.add_subcommand("brute", "exhaustive optimum (small inputs)");
  c_brute->add_option("--k", k, "budget")->required();
  add_io(c_brute, true);

  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? 0 : 1;
    }
  }

  std::ostringstream text;
  try {
    if (*c_tight) {
      if (s < 2 || s % 2 != 0)
        throw std::invalid_argument("--s must be even and at least 2");
      save_instance(text, gen_tight(s));
    } else if (*c_rand) {
      if (n_points < 0) throw std::invalid_argument("--points must be at least 0");
      if (m_intervals < 1) throw std::invalid_argument("--intervals must be at least 1");
      if (range < 1) throw std::invalid_argument("--range must be at least 1");
      if (max_len < 0) throw std::invalid_argument("--max-len must be at least 0");
      save_instance(text, gen_random(n_points, m_intervals, range, seed, 0, max_len));
    } else if (*c_ctr) {
      CounterexampleSpec spec = counterexample_preset_u2();
      if (*o_u) {
        spec.u = u;
        spec.alpha = parse_rational(alpha_s);
        spec.beta = parse_rational(beta_s);
        spec.gamma = parse_rational(gamma_s);
      }
      save_set_system(text, build_counterexample(spec));
    } else if (*c_exact) {
      if (k < 0) throw std::invalid_argument("--k must be at least 0");
      std::istringstream src(slurp(input, in));
      const Instance inst = load_instance(src);
      const Cover cover = solve_exact(inst, k);
      if (format == "csv") {
        text << "k,value,size,ids\n"
             << k << ',' << cover.value << ',' << cover.ids.size() << ','
             << join_ids(cover.ids) << '\n';
      } else {
        text << "k: " << k << "\nvalue: " << cover.value
             << "\nsize: " << cover.ids.size() << "\ncover: " << join_ids(cover.ids)
             << '\n';
      }
    } else if (*c_greedy) {
      std::istringstream src(slurp(input, in));
      const Instance inst = load_instance(src);
      const int m = inst.interval_count();
      if (*c_greedy->get_option("--k")) {
        if (greedy_k < 0) throw std::invalid_argument("--k must be at least 0");
        if (greedy_k > m)
          throw std::invalid_argument("--k exceeds the interval count " +
                                      std::to_string(m));
      } else {
        greedy_k = m;
      }
      const GreedyResult greedy = greedy_permutation(inst);
      if (format == "csv") {
        text << "step,id,lo,hi,gain,prefix_value\n";
        for (int i = 0; i < greedy_k; ++i) {
          const Interval& iv =
              inst.intervals()[inst.position_of(greedy.permutation[i])];
          text << i + 1 << ',' << iv.id << ',' << iv.lo << ',' << iv.hi << ','
               << greedy.gains[i] << ',' << greedy.prefix_values[i] << '\n';
        }
      } else {
        for (int i = 0; i < greedy_k; ++i) {
          const Interval& iv =
              inst.intervals()[inst.position_of(greedy.permutation[i])];
          text << "step " << i + 1 << ": id=" << iv.id << " [" << iv.lo << ','
               << iv.hi << "] gain=" << greedy.gains[i]
               << " prefix=" << greedy.prefix_values[i] << '\n';
        }
        text << "value: " << (greedy_k > 0 ? greedy.prefix_values[greedy_k - 1] : 0)
             << '\n';
      }
    } else if (*c_approx) {
      if (k < 1) throw std::invalid_argument("--k must be at least 1");
      const Rational eps = parse_eps(eps_s);
      std::istringstream src(slurp(input, in));
      const Instance inst = load_instance(src);
      const ApproxParams params(k, eps, inst.interval_count());
      const ApproxResult res = solve_approx(inst, params);
      const char* fb = res.exact_fallback ? "yes" : "no";
      if (format == "csv") {
        text << "k,eps,extra,stride,size,value,fallback,ids\n"
             << k << ',' << eps.str() << ',' << params.extra << ',' << params.stride
             << ',' << res.cover.ids.size() << ',' << res.cover.value << ',' << fb
             << ',' << join_ids(res.cover.ids) << '\n';
      } else {
        text << "k: " << k << "\neps: " << eps.str() << "\nextra: " << params.extra
             << "\nstride: " << params.stride << "\nfallback: " << fb
             << "\nsize: " << res.cover.ids.size() << "\nvalue: " << res.cover.value
             << "\ncover: " << join_ids(res.cover.ids) << '\n';
      }
    } else if (*c_ratio) {
      std::istringstream src(slurp(input, in));
      const Instance inst = load_instance(src);
      const int m = inst.interval_count();
      if (*c_ratio->get_option("--k-max")) {
        if (k_max < 1) throw std::invalid_argument("--k-max must be at least 1");
        if (k_max > m)
          throw std::invalid_argument("--k-max exceeds the interval count " +
                                      std::to_string(m));
      } else {
        k_max = m;
      }
      if (m == 0) throw std::invalid_argument("instance has no intervals");
      const RatioReport report = ratio_report(inst, k_max);
      if (format == "csv") {
        text << "k,greedy_value,opt_value,ratio\n";
        for (int i = 0; i < k_max; ++i)
          text << i + 1 << ',' << report.greedy_values[i] << ','
               << report.opt_values[i] << ',' << report.per_k[i].str() << '\n';
      } else {
        for (int i = 0; i < k_max; ++i)
          text << "k=" << i + 1 << " greedy=" << report.greedy_values[i]
               << " opt=" << report.opt_values[i]
               << " ratio=" << report.per_k[i].str() << '\n';
        text << "min ratio: " << report.min_ratio.str() << '\n';
      }
    } else if (*c_verify) {
      const std::string body = slurp(input, in);
      if (*c_verify->get_option("--k-max") && k_max < 1)
        throw std::invalid_argument("--k-max must be at least 1");
      std::vector<std::int64_t> profits;
      std::optional<std::size_t> violation;
      if (detect_kind(body) == InputKind::instance) {
        std::istringstream src(body);
        const Instance inst = load_instance(src);
        const int limit = *c_verify->get_option("--k-max")
                              ? std::min(k_max, inst.interval_count())
                              : inst.interval_count();
        if (limit > 0) profits = profit_sequence(inst, limit);
        // profit_sequence already throws internal_error on an increase.
      } else {
        std::istringstream src(body);
        const SetSystem sys = load_set_system(src);
        const int limit = *c_verify->get_option("--k-max")
                              ? std::min<std::int64_t>(k_max, sys.sets.size())
                              : static_cast<int>(sys.sets.size());
        std::int64_t prev = 0;
        for (int t = 1; t <= limit; ++t) {
          const std::int64_t v = brute_opt(sys, t).value;
          profits.push_back(v - prev);
          prev = v;
        }
        violation = check_diminishing_returns(profits);
      }
      text << "profits:";
      for (std::int64_t p : profits) text << ' ' << p;
      text << '\n';
      if (violation) {
        text << "violation at k=" << *violation + 2 << ": " << profits[*violation]
             << " < " << profits[*violation + 1] << '\n';
      } else {
        text << "no violation\n";
      }
    } else if (*c_brute) {
      if (k < 0) throw std::invalid_argument("--k must be at least 0");
      const std::string body = slurp(input, in);
      SetSystem sys;
      if (detect_kind(body) == InputKind::instance) {
        std::istringstream src(body);
        sys = set_system_from_instance(load_instance(src));
      } else {
        std::istringstream src(body);
        sys = load_set_system(src);
      }
      const BruteResult res = brute_opt(sys, k);
      if (format == "csv") {
        text << "k,value,witness\n"
             << k << ',' << res.value << ',' << join_names(res.witness) << '\n';
      } else {
        text << "k: " << k << "\nvalue: " << res.value
             << "\nwitness: " << join_names(res.witness) << '\n';
      }
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return emit(text.str(), output, out, err);
}

}  // namespace icover::cli
