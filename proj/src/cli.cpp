#include "metrize/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metrize/completion.hpp"
#include "metrize/io.hpp"
#include "metrize/metrization.hpp"
#include "metrize/multipartite.hpp"
#include "metrize/oracle.hpp"
#include "metrize/shortest_path.hpp"

namespace metrize::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;
  bool use_stdin = false;
  std::string format = "edge-list";
  std::optional<double> eps;
  bool tsv = false;
  std::uint64_t seed = 0;
  bool force = false;
};

// Graph-level precondition that the contract reports as a negative verdict.
struct NegativeVerdict {
  std::string reason;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Runner {
 public:
  Runner(RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(cfg), in_(in), out_(out), err_(err) {}

  double eps() const {
    if (cfg_.eps) return *cfg_.eps;
    if (const char* env = std::getenv("METRIZE_EPS"); env && *env) return parse_number(env);
    return kDefaultEps;
  }

  oracle::Limits limits() const { return {oracle::kDefaultSafetyBound, cfg_.force}; }

  const WeightedGraph& graph() {
    if (!graph_) {
      if (!cfg_.input.empty() && cfg_.use_stdin) throw Error("give either --input or --stdin, not both");
      std::string text;
      if (!cfg_.input.empty()) {
        text = read_file(cfg_.input);
      } else {
        std::ostringstream ss;
        ss << in_.rdbuf();
        text = ss.str();
      }
      if (cfg_.format == "json") {
        graph_ = parse_graph_json(text);
      } else if (cfg_.format == "edge-list") {
        graph_ = parse_edge_list(text);
      } else {
        throw Error("unknown format '" + cfg_.format + "'");
      }
    }
    return *graph_;
  }

  DistanceMatrix read_matrix(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_matrix_json(text);
    return parse_tsv(text);
  }

  void emit(const json& j) { out_ << j.dump() << "\n"; }
  void emit(const DistanceMatrix& m) {
    if (cfg_.tsv) {
      out_ << to_tsv(m);
    } else {
      out_ << to_matrix_json(m) << "\n";
    }
  }

  int negative(const std::string& reason) {
    emit(json{{"ok", false}, {"reason", reason}});
    return kNegative;
  }

  void require_metrizable() {
    if (!check_metrizable(graph(), eps()).metrizable) throw NegativeVerdict{"not metrizable"};
  }

  // Structural preconditions of the least-element operations.
  void require_multipartite(bool small_parts) {
    require_metrizable();
    auto p = detect_partition(graph());
    if (!p) throw NegativeVerdict{"least element does not exist for some metrizable weight on this graph "
                                  "(not complete multipartite)"};
    if (p->k() < 2) throw NegativeVerdict{"graph is edgeless (1-partite); no least element"};
    if (small_parts) {
      for (const auto& part : p->parts) {
        if (part.size() > 2) throw NegativeVerdict{"a part has more than 2 vertices; sandwich bounds do not apply"};
      }
    }
  }

  json labels_of(std::span<const VertexId> vs) {
    json a = json::array();
    for (auto v : vs) a.push_back(graph().label(v));
    return a;
  }

  json report_json(const MetrizabilityReport& r) {
    json witness = nullptr;
    if (r.witness) {
      const auto& w = *r.witness;
      witness = {{"cycle", labels_of(w.cycle)},
                 {"max_edge", {graph().label(w.max_edge.u), graph().label(w.max_edge.v)}},
                 {"lhs", w.lhs},
                 {"rhs", w.rhs}};
    }
    return {{"metrizable", r.metrizable},
            {"witness", witness},
            {"worst_slack", r.worst_slack},
            {"checked_edges", r.checked_edges}};
  }

  int check() {
    auto r = check_metrizable(graph(), eps());
    emit(report_json(r));
    return r.metrizable ? kAffirmative : kNegative;
  }

  int matrix(bool dense) {
    emit(all_pairs_distance(graph(), dense ? ApspMethod::kDense : ApspMethod::kDijkstra));
    return kAffirmative;
  }

  int least() {
    require_multipartite(false);
    emit(least_pseudometric(graph(), eps()));
    return kAffirmative;
  }

  int interval(const std::string& u, const std::string& v) {
    VertexId a = graph().id(u);
    VertexId b = graph().id(v);
    if (a == b || graph().adjacent(a, b)) throw Error("interval needs distinct nonadjacent vertices");
    require_multipartite(false);
    auto iv = greatest_vs_least_interval(graph(), a, b, eps());
    emit(json{{"u", u}, {"v", v}, {"lower", iv.lower}, {"upper", iv.upper}});
    return kAffirmative;
  }

  int partition() {
    auto p = detect_partition(graph());
    if (!p) {
      emit(json(nullptr));
      return kNegative;
    }
    json parts = json::array();
    for (const auto& part : p->parts) parts.push_back(labels_of(part));
    emit(json{{"k", p->k()}, {"parts", parts}});
    return kAffirmative;
  }

  int bridge_list() {
    json list = json::array();
    for (const auto& e : bridges(graph())) list.push_back({graph().label(e.u), graph().label(e.v)});
    emit(json{{"bridges", list}});
    return kAffirmative;
  }

  int verdict(const char* key, bool value) {
    emit(json{{key, value}});
    return value ? kAffirmative : kNegative;
  }

  int metric() {
    auto r = metric_exists(graph(), eps());
    emit(json{{"metric_exists", r.exists}, {"explanation", r.explanation}});
    return r.exists ? kAffirmative : kNegative;
  }

  int validate(const std::string& path) {
    auto m = read_matrix(path);
    auto v = validate_membership(graph(), m, eps());
    emit(json{{"ok", v.ok}, {"violation", v.ok ? json(nullptr) : json(v.violation)}});
    return v.ok ? kAffirmative : kNegative;
  }

  int sample() {
    require_multipartite(true);
    emit(sandwich_sample(graph(), cfg_.seed, eps()));
    return kAffirmative;
  }

  int sandwich(const std::string& path) {
    auto f = read_matrix(path);
    require_multipartite(true);
    auto r = sandwich_validate(graph(), f, eps());
    static constexpr const char* names[] = {"member", "outside_sandwich", "theorem_violation"};
    emit(json{{"ok", r.ok()}, {"status", names[static_cast<int>(r.status)]}, {"detail", r.detail}});
    if (r.status == SandwichStatus::kTheoremViolation) err_ << "internal error: " << r.detail << "\n";
    return r.ok() ? kAffirmative : kNegative;
  }

  int complete(const std::string& spec_path) {
    const auto& g = graph();
    CompletionSpec spec =
        spec_path.empty() ? default_completion_spec(g) : parse_completion_spec(g, read_file(spec_path));
    require_metrizable();
    emit(complete_disconnected(g, spec, eps()));
    return kAffirmative;
  }

  int quad(const std::vector<double>& w) {
    auto r = analyze_quadrilateral(w[0], w[1], w[2], w[3]);
    emit(json{{"a", r.a},
              {"b", r.b},
              {"c", r.c},
              {"k", r.k},
              {"metrizable", r.metrizable},
              {"intervals", {{"v1v3", {r.v1v3.lower, r.v1v3.upper}}, {"v2v4", {r.v2v4.lower, r.v2v4.upper}}}}});
    return r.metrizable ? kAffirmative : kNegative;
  }

  int oracle_cycles() {
    json list = json::array();
    for (const auto& c : oracle::enumerate_cycles(graph(), 0, limits())) list.push_back(labels_of(c));
    emit(json{{"cycles", list}});
    return kAffirmative;
  }

  int oracle_check() {
    auto r = oracle::cycle_condition_holds(graph(), eps(), limits());
    emit(json{{"holds", r.holds}, {"cycle", r.violation ? labels_of(*r.violation) : json(nullptr)}});
    return r.holds ? kAffirmative : kNegative;
  }

  int oracle_rho0(const std::string& u, const std::string& v) {
    double x = oracle::rho0_path_sup(graph(), graph().id(u), graph().id(v), limits());
    emit(json{{"u", u}, {"v", v}, {"rho0", x}});
    return kAffirmative;
  }

  int oracle_matrix() {
    emit(oracle::exhaustive_all_pairs(graph(), limits()));
    return kAffirmative;
  }

  int generate(oracle::InstanceGenerator spec, const std::string& cls, const std::string& parts) {
    if (cls == "arbitrary") {
      spec.graph_class = oracle::GraphClass::kArbitrary;
    } else if (cls == "connected") {
      spec.graph_class = oracle::GraphClass::kConnected;
    } else if (cls == "forest") {
      spec.graph_class = oracle::GraphClass::kForest;
    } else if (cls == "multipartite") {
      spec.graph_class = oracle::GraphClass::kMultipartite;
    } else {
      throw Error("unknown graph class '" + cls + "'");
    }
    if (!parts.empty()) {
      std::stringstream ss(parts);
      std::string item;
      while (std::getline(ss, item, ',')) {
        double size = parse_number(item);
        if (size < 1 || size != static_cast<double>(static_cast<std::size_t>(size))) {
          throw Error("part sizes must be positive integers");
        }
        spec.part_sizes.push_back(static_cast<std::size_t>(size));
      }
    }
    spec.seed = cfg_.seed;
    auto g = oracle::generate(spec);
    if (cfg_.format == "json") {
      out_ << to_graph_json(g) << "\n";
    } else {
      out_ << to_edge_list(g);
    }
    return kAffirmative;
  }

 private:
  RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<WeightedGraph> graph_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Metrizability of edge weights on finite graphs", "metrize"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", cfg.input, "Graph file (default: stdin)");
  app.add_flag("--stdin", cfg.use_stdin, "Read the graph from stdin");
  app.add_option("--format", cfg.format, "Graph format")->check(CLI::IsMember({"edge-list", "json"}));
  app.add_option("--eps", cfg.eps, "Comparison tolerance (default 1e-9 or $METRIZE_EPS)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--tsv", cfg.tsv, "Write matrices as TSV");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_flag("--force", cfg.force, "Lift the vertex bound on exhaustive oracles");

  Runner r(cfg, in, out, err);
  std::function<int()> action;

  app.add_subcommand("check", "Metrizability report with a violating cycle")->callback([&] {
    action = [&] { return r.check(); };
  });
  bool dense = false;
  auto* matrix = app.add_subcommand("matrix", "Shortest-path pseudometric");
  matrix->add_flag("--dense", dense, "Use triple-loop relaxation");
  matrix->callback([&] { action = [&] { return r.matrix(dense); }; });
  app.add_subcommand("least", "Least pseudometric (complete multipartite graphs)")->callback([&] {
    action = [&] { return r.least(); };
  });
  std::string u, v;
  auto* interval = app.add_subcommand("interval", "[least, greatest] for a nonadjacent pair");
  interval->add_option("u", u)->required();
  interval->add_option("v", v)->required();
  interval->callback([&] { action = [&] { return r.interval(u, v); }; });
  app.add_subcommand("partition", "Complete multipartite decomposition")->callback([&] {
    action = [&] { return r.partition(); };
  });
  app.add_subcommand("bridges", "Edges on no cycle")->callback([&] {
    action = [&] { return r.bridge_list(); };
  });
  app.add_subcommand("forest", "Is the graph acyclic")->callback([&] {
    action = [&] { return r.verdict("forest", is_forest(r.graph())); };
  });
  app.add_subcommand("star", "Is the graph a star K_{1,n}")->callback([&] {
    action = [&] { return r.verdict("star", is_star(r.graph())); };
  });
  app.add_subcommand("metric-exists", "Does some metric extend the weight")->callback([&] {
    action = [&] { return r.metric(); };
  });
  std::string matrix_path;
  auto* validate = app.add_subcommand("validate", "Check a matrix against the extension set");
  validate->add_option("matrix-file", matrix_path)->required();
  validate->callback([&] { action = [&] { return r.validate(matrix_path); }; });
  app.add_subcommand("sandwich-sample", "Random member between least and greatest")->callback([&] {
    action = [&] { return r.sample(); };
  });
  auto* sandwich = app.add_subcommand("sandwich-validate", "Check a matrix against the sandwich bounds");
  sandwich->add_option("matrix-file", matrix_path)->required();
  sandwich->callback([&] { action = [&] { return r.sandwich(matrix_path); }; });
  std::string spec_path;
  auto* complete = app.add_subcommand("complete", "Extend across components");
  complete->add_option("--spec", spec_path, "Completion spec JSON");
  complete->callback([&] { action = [&] { return r.complete(spec_path); }; });
  std::vector<double> quad_weights;
  auto* quad = app.add_subcommand("quad", "Quadrilateral closed forms");
  quad->add_option("weights", quad_weights, "a b c k")->expected(4)->required();
  quad->callback([&] { action = [&] { return r.quad(quad_weights); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference computations");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->add_subcommand("cycles", "Enumerate simple cycles")->callback([&] {
    action = [&] { return r.oracle_cycles(); };
  });
  oracle_cmd->add_subcommand("check", "Cycle condition on every cycle")->callback([&] {
    action = [&] { return r.oracle_check(); };
  });
  auto* rho0 = oracle_cmd->add_subcommand("rho0", "Path-supremum least distance");
  rho0->add_option("u", u)->required();
  rho0->add_option("v", v)->required();
  rho0->callback([&] { action = [&] { return r.oracle_rho0(u, v); }; });
  oracle_cmd->add_subcommand("matrix", "Path-enumeration distances")->callback([&] {
    action = [&] { return r.oracle_matrix(); };
  });

  oracle::InstanceGenerator gen;
  std::string gen_class, gen_parts;
  auto* generate = app.add_subcommand("generate", "Random graph");
  generate->add_option("class", gen_class, "arbitrary|connected|forest|multipartite")->required();
  generate->add_option("--vertices", gen.max_vertices, "Maximum vertex count");
  generate->add_option("--min-vertices", gen.min_vertices, "Minimum vertex count");
  generate->add_option("--parts", gen_parts, "Part sizes for multipartite, e.g. 2,2");
  generate->add_option("--max-weight", gen.max_weight);
  generate->add_option("--zero-prob", gen.zero_probability);
  generate->add_option("--edge-prob", gen.edge_probability);
  generate->add_flag("--metrizable", gen.metrizable, "Weights from points on a line");
  generate->callback([&] { action = [&] { return r.generate(gen, gen_class, gen_parts); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "metrize: " << e.what() << "\n";
    return kUsage;
  }
  try {
    if (!action) throw Error("no subcommand");
    return action();
  } catch (const NegativeVerdict& n) {
    return r.negative(n.reason);
  } catch (const std::exception& e) {
    err << "metrize: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace metrize::cli
