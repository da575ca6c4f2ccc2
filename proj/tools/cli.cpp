#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chronos/approx_count.hpp"
#include "chronos/betweenness_approx.hpp"
#include "chronos/chordal.hpp"
#include "chronos/dispatch.hpp"
#include "chronos/error.hpp"
#include "chronos/generate.hpp"
#include "chronos/io.hpp"
#include "chronos/reductions.hpp"
#include "chronos/sampler.hpp"
#include "chronos/star.hpp"
#include "chronos/tfvs.hpp"

namespace chronos {
namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitStatistical = 4;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::no_feasible_algorithm:
    case ErrorCode::explosion:
    case ErrorCode::budget_exceeded:
      return kExitInfeasible;
    case ErrorCode::invalid_parameter:
      return kExitStatistical;
    case ErrorCode::counter_failure:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::malformed_input, "cannot open " + path);
  return read_all(f);
}

std::string decimal(const ExactRatio& q, int digits = 6) {
  std::ostringstream out;
  out << std::setprecision(digits) << q.get_d();
  return out.str();
}

std::string ratio_string(const ExactRatio& q) { return q.get_str(); }

unsigned threads_from_env() {
  if (const char* v = std::getenv("CHRONOS_THREADS")) {
    char* end = nullptr;
    const unsigned long t = std::strtoul(v, &end, 10);
    if (end != v && *end == '\0' && t > 0) return static_cast<unsigned>(t);
  }
  return 1;
}

struct Common {
  std::string input = "-";
  std::string format = "text";
  unsigned threads = 0;  // 0: environment, then 1
  std::string algo = "auto";
  DispatchCaps caps;

  unsigned thread_count() const { return threads > 0 ? threads : threads_from_env(); }
};

void add_input(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "Edge list or JSON file ('-' for stdin)");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--threads", c.threads, "Worker threads (default: CHRONOS_THREADS or 1)");
}

void add_algo(CLI::App* sub, Common& c) {
  sub->add_option("--algo", c.algo, "Counting algorithm")
      ->check(CLI::IsMember({"auto", "oracle", "forest", "vimw", "tfvs", "fen"}));
  sub->add_option("--cap-vimw", c.caps.vimw, "Largest vimw routed to the vimw counter");
  sub->add_option("--cap-fen", c.caps.fen, "Largest feedback edge number routed to the fen counter");
  sub->add_option("--cap-tfvs", c.caps.tfvs, "Largest timed FVS routed to the tfvs counter");
  sub->add_option("--oracle-limit", c.caps.oracle, "Partial paths the oracle may explore under auto");
  sub->add_option("--tfvs-budget", c.caps.tfvs_node_limit, "Branching nodes for the timed FVS search");
}

Algo algo_of(const Common& c) { return *parse_algo(c.algo); }

Star star_of(const std::string& s) { return *parse_star(s); }

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  TemporalGraph load(const Common& c) {
    return parse_any(c.input == "-" ? read_all(in_) : read_file(c.input));
  }

  void emit(const Common& c, const json& j, const std::string& text) {
    if (c.format == "json") {
      out_ << j.dump() << '\n';
    } else {
      out_ << text;
    }
  }

  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting, sampling and betweenness for temporal paths", "chronos"};
  app.require_subcommand(1);
  Runner runner(in, out);
  Common common;

  Vertex s = 0, z = 0;
  std::string star = "foremost";
  double epsilon = 0.25, delta = 0.1;
  std::uint64_t seed = 0;

  auto star_option = [&](CLI::App* sub) {
    sub->add_option("--star", star, "Optimality notion")->check(CLI::IsMember({"foremost", "fastest"}));
  };

  // count
  auto* count = app.add_subcommand("count", "Number of temporal (s,z)-paths");
  add_input(count, common);
  add_algo(count, common);
  count->add_option("-s,--source", s)->required();
  count->add_option("-z,--target", z)->required();
  std::string tfvs_file;
  count->add_option("--tfvs-file", tfvs_file, "Timed FVS to use with --algo tfvs (\"v t\" pairs)");
  bool approx = false;
  std::optional<std::uint32_t> k_exact, k_max;
  count->add_flag("--approx", approx, "Estimate by colour coding instead of counting exactly");
  count->add_option("--epsilon", epsilon, "Relative error of the estimate");
  count->add_option("--delta", delta, "Failure probability of the estimate");
  count->add_option("--seed", seed);
  count->add_option("--k", k_exact, "Only paths with exactly k edges");
  count->add_option("--k-max", k_max, "Longest path length summed over (default n-1)");

  // count-optimal
  auto* count_opt = app.add_subcommand("count-optimal", "Number of foremost or fastest (s,z)-paths");
  add_input(count_opt, common);
  add_algo(count_opt, common);
  count_opt->add_option("-s,--source", s)->required();
  count_opt->add_option("-z,--target", z)->required();
  star_option(count_opt);

  // betweenness
  auto* betw = app.add_subcommand("betweenness", "Exact foremost or fastest betweenness");
  add_input(betw, common);
  add_algo(betw, common);
  std::optional<Vertex> vertex;
  betw->add_option("-v,--vertex", vertex, "Single vertex (default: all)");
  star_option(betw);

  // betweenness-approx
  auto* betw_apx = app.add_subcommand("betweenness-approx", "Estimate of the maximum betweenness");
  add_input(betw_apx, common);
  add_algo(betw_apx, common);
  star_option(betw_apx);
  betw_apx->add_option("--epsilon", epsilon);
  betw_apx->add_option("--delta", delta);
  betw_apx->add_option("--seed", seed);
  std::optional<std::uint64_t> ell_cap = 10000, ell, runs;
  betw_apx->add_option("--ell-cap", ell_cap, "Upper bound on samples per pair")->capture_default_str();
  betw_apx->add_option("--ell", ell, "Samples per pair, replacing the formula");
  betw_apx->add_option("--runs", runs, "Independent runs (default from delta)");

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform temporal (s,z)-paths");
  add_input(sample, common);
  add_algo(sample, common);
  sample->add_option("-s,--source", s)->required();
  sample->add_option("-z,--target", z)->required();
  std::uint64_t sample_count = 1;
  std::string optimal = "none";
  bool approx_counter = false;
  sample->add_option("--count", sample_count, "Number of paths");
  sample->add_option("--optimal", optimal)->check(CLI::IsMember({"none", "foremost", "fastest"}));
  sample->add_option("--seed", seed);
  sample->add_flag("--approx-counter", approx_counter, "Drive the sampler with the colour coding estimator");
  sample->add_option("--delta", delta, "Sampling tolerance with --approx-counter");

  // params
  auto* params = app.add_subcommand("params", "Structural parameters of the instance");
  add_input(params, common);
  std::optional<Vertex> ps, pz;
  params->add_option("-s,--source", ps, "Source for the fen link count");
  params->add_option("-z,--target", pz, "Target for the fen link count");
  params->add_option("--tfvs-budget", common.caps.tfvs_node_limit, "Branching nodes for the timed FVS search");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  std::string kind;
  std::size_t n = 10, m = 20, l = 3, k = 3, length = 2;
  Time lifetime = 5;
  std::vector<Time> labels{1};
  gen_cmd->add_option("kind", kind)->required()->check(
      CLI::IsMember({"random", "forest", "diamond", "theta", "path", "strip"}));
  gen_cmd->add_option("--n", n, "Vertices (random, forest, path)");
  gen_cmd->add_option("--m", m, "Time-edges (random)");
  gen_cmd->add_option("--T", lifetime, "Lifetime");
  gen_cmd->add_option("--l", l, "Diamonds (diamond) or strip length (strip)");
  gen_cmd->add_option("--labels", labels, "Diamond labels, one or one per diamond")->delimiter(',');
  gen_cmd->add_option("--k", k, "Branches (theta)");
  gen_cmd->add_option("--length", length, "Branch length (theta)");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

  // Debug entry point for the chordal counter: JSON instance on the input.
  auto* chordal = app.add_subcommand("chordal", "");
  chordal->group("");
  add_input(chordal, common);

  try {
    // CLI11 consumes the arguments from the back.
    std::vector<std::string> rest;
    if (!args.empty()) rest.assign(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (count->parsed()) {
      const auto g = runner.load(common);
      json j{{"source", s}, {"target", z}};
      std::string text;
      if (approx) {
        ApproxOptions options;
        options.threads = common.thread_count();
        const Estimate est = k_exact ? estimate_short(g, s, z, *k_exact, epsilon, delta, seed, options)
                                     : estimate_total(g, s, z, epsilon, delta, k_max, seed, options);
        j["estimate"] = ratio_string(est.value);
        j["approx"] = est.value.get_d();
        j["trials"] = est.trials;
        text = decimal(est.value, 10) + "\n";
      } else {
        Route route;
        BigCount c;
        if (!tfvs_file.empty()) {
          if (algo_of(common) != Algo::tfvs) throw Error(ErrorCode::invalid_parameter, "--tfvs-file needs --algo tfvs");
          c = count_tfvs(g, s, z, parse_timed_fvs(read_file(tfvs_file), g));
          route = {Algo::tfvs, "supplied timed FVS"};
        } else {
          c = dispatch_count(g, s, z, algo_of(common), common.caps, &route);
        }
        j["algo"] = algo_name(route.algo);
        j["reason"] = route.reason;
        j["count"] = c.get_str();
        text = c.get_str() + "\n";
      }
      runner.emit(common, j, text);
    } else if (count_opt->parsed()) {
      const auto g = runner.load(common);
      const auto c = count_optimal(g, s, z, star_of(star), make_counter(algo_of(common), common.caps));
      runner.emit(common, json{{"source", s}, {"target", z}, {"star", star}, {"count", c.get_str()}},
                  c.get_str() + "\n");
    } else if (betw->parsed()) {
      const auto g = runner.load(common);
      const auto counter = make_counter(algo_of(common), common.caps);
      std::vector<Vertex> targets;
      if (vertex) {
        targets.push_back(*vertex);
      } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v) targets.push_back(v);
      }
      json values = json::array();
      std::string text;
      for (Vertex v : targets) {
        const auto b = betweenness_exact(g, v, star_of(star), counter);
        values.push_back({{"vertex", v}, {"value", ratio_string(b)}, {"approx", b.get_d()}});
        text += std::to_string(v) + " " + ratio_string(b) + "\n";
      }
      runner.emit(common, json{{"star", star}, {"betweenness", values}}, text);
    } else if (betw_apx->parsed()) {
      const auto g = runner.load(common);
      BetweennessOptions options;
      options.counter = make_counter(algo_of(common), common.caps);
      options.ell = ell;
      options.ell_cap = ell_cap;
      options.runs = runs;
      options.seed = seed;
      options.threads = common.thread_count();
      const auto est = estimate_max_betweenness(g, star_of(star), epsilon, delta, options);
      json j{{"value", ratio_string(est.value)}, {"approx", est.value.get_d()}, {"argmax", est.argmax},
             {"ell", est.ell}, {"trials", est.trials}};
      std::ostringstream text;
      text << "value " << ratio_string(est.value) << " (" << decimal(est.value) << ")\n"
           << "argmax " << est.argmax << "\nell " << est.ell << "\ntrials " << est.trials << "\n";
      runner.emit(common, j, text.str());
    } else if (sample->parsed()) {
      const auto g = runner.load(common);
      if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorCode::invalid_parameter, "delta must lie in [0, 1]");
      Counter counter = make_counter(algo_of(common), common.caps);
      if (approx_counter) {
        const double eps = per_call_epsilon(delta, g.vertex_count());
        counter = approximate_counter(eps, std::min(0.5, eps), SplitMix64(seed).split(0xc0ffee)(),
                                      common.thread_count());
      }
      const SplitMix64 root(seed);
      json paths = json::array();
      std::string text;
      auto record = [&](const TemporalPath& p) {
        const auto line = format_path(p, &g);
        paths.push_back(line);
        text += line + "\n";
      };
      if (optimal == "none") {
        PathSampler sampler(g, s, z, counter);
        for (std::uint64_t i = 0; i < sample_count; ++i) {
          SplitMix64 rng = root.split(i);
          record(sampler.sample(rng));
        }
      } else if (s == z) {
        for (std::uint64_t i = 0; i < sample_count; ++i) record(TemporalPath{s, {}});
      } else {
        OptimalSampler sampler(g, s, z, star_of(optimal), counter);
        for (std::uint64_t i = 0; i < sample_count; ++i) {
          SplitMix64 rng = root.split(i);
          record(sampler.sample(rng));
        }
      }
      runner.emit(common, json{{"source", s}, {"target", z}, {"paths", paths}}, text);
    } else if (params->parsed()) {
      const auto g = runner.load(common);
      std::optional<std::pair<Vertex, Vertex>> terminals;
      if (ps && pz) terminals.emplace(*ps, *pz);
      const auto p = measure_parameters(g, std::nullopt, common.caps.tfvs_node_limit, terminals);
      json j{{"n", p.n},       {"time_edges", p.time_edges}, {"T", p.lifetime},
             {"forest", p.forest}, {"vimw", p.vimw},         {"vim_histogram", p.vim_histogram},
             {"fen", p.fen}};
      std::ostringstream text;
      text << "n " << p.n << "\ntime_edges " << p.time_edges << "\nT " << p.lifetime << "\nforest "
           << (p.forest ? "yes" : "no") << "\nvimw " << p.vimw << "\nvim_histogram";
      for (std::size_t i = 0; i < p.vim_histogram.size(); ++i) {
        if (p.vim_histogram[i]) text << ' ' << i << ':' << p.vim_histogram[i];
      }
      text << "\nfen " << p.fen << '\n';
      if (terminals) {
        j["fen_path_links"] = p.fen_path_links;
        text << "fen_path_links " << p.fen_path_links << '\n';
      }
      if (p.tfvs) {
        j["tfvs"] = p.tfvs->size();
        text << "tfvs " << p.tfvs->size() << '\n';
      } else {
        const auto upper = greedy_timed_fvs(g).size();
        j["tfvs"] = nullptr;
        j["tfvs_upper_bound"] = upper;
        text << "tfvs budget exceeded (greedy upper bound " << upper << ")\n";
      }
      j["tfvs_budget"] = common.caps.tfvs_node_limit;
      runner.emit(common, j, text.str());
    } else if (gen_cmd->parsed()) {
      TemporalGraph g;
      if (kind == "random") {
        g = gen::random_graph(n, m, lifetime, seed);
      } else if (kind == "forest") {
        g = gen::random_forest(n, lifetime, seed);
      } else if (kind == "diamond") {
        g = gen::diamond_chain(l, labels);
      } else if (kind == "theta") {
        g = gen::theta_graph(k, length, labels.front());
      } else if (kind == "path") {
        g = gen::temporal_path(n, lifetime, seed);
      } else {
        g = gen::triangle_strip(l, seed);
      }
      out << (common.format == "json" ? serialize_json(g) + "\n" : serialize_edge_list(g));
    } else if (chordal->parsed()) {
      const auto j = json::parse(common.input == "-" ? read_all(in) : read_file(common.input));
      const std::size_t vn = j.at("n").get<std::size_t>();
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
      ChordalInstance inst{StaticGraph(vn, edges), j.at("colour").get<std::vector<std::uint32_t>>(), {}};
      for (const auto& w : j.at("weight")) inst.weight.emplace_back(w.get<std::uint64_t>());
      MulticolourStats stats;
      const auto c = count_weighted_mc_is(inst, j.at("k").get<std::uint32_t>(), &stats);
      runner.emit(common,
                  json{{"count", c.get_str()}, {"bags", stats.bags}, {"max_bag", stats.max_bag},
                       {"entries", stats.entries}},
                  c.get_str() + "\n");
    }
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error (malformed_input): " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace chronos
