#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "elimtree/algorithm_r.hpp"
#include "elimtree/analysis.hpp"
#include "elimtree/encoders.hpp"
#include "elimtree/families.hpp"
#include "elimtree/generate.hpp"
#include "elimtree/insertion.hpp"
#include "elimtree/verification.hpp"

namespace elimtree::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<Vertex>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

/// A chordal input together with the labelling the generators work in.
struct Working {
  Graph original;
  PeoGraph pg;
  std::optional<ShapeTag> shape;  // set when working in a shape's canonical labels
};

Working working_labelling(const Graph& g, bool want_shape) {
  if (want_shape) {
    ShapeTag tag = detect_shape(g);
    if (tag.shape != Shape::generic) {
      const auto n = static_cast<std::size_t>(g.size());
      std::vector<Vertex> order(n);
      for (Vertex v = 1; v <= g.size(); ++v) order[static_cast<std::size_t>(tag.to_canonical[static_cast<std::size_t>(v)] - 1)] = v;
      return {g, relabel_to_peo(g, order), std::move(tag)};
    }
  }
  return {g, certify(g), std::nullopt};
}

std::vector<Vertex> original_parents(const PeoGraph& pg, const ElimForest& f) {
  std::vector<Vertex> out(static_cast<std::size_t>(f.size()), 0);
  for (Vertex v = 1; v <= f.size(); ++v) {
    const Vertex p = f.parent(v);
    out[static_cast<std::size_t>(pg.original_label(v) - 1)] = p == 0 ? 0 : pg.original_label(p);
  }
  return out;
}

std::vector<Vertex> original_sigma(const PeoGraph& pg, const ElimForest& f) {
  auto perm = sigma_encode(pg, f);
  for (auto& v : perm) v = pg.original_label(v);
  return perm;
}

/// Forest in working labels from a parent array given in original labels.
ElimForest forest_from_original(const PeoGraph& pg, const std::string& key) {
  const ElimForest given = forest_from_key(key);
  if (given.size() != pg.size()) throw ForestError("forest has " + std::to_string(given.size()) + " vertices, graph has " + std::to_string(pg.size()));
  std::vector<Vertex> parent(static_cast<std::size_t>(pg.size()) + 1, 0);
  for (Vertex v = 1; v <= given.size(); ++v) {
    const Vertex p = given.parent(v);
    parent[static_cast<std::size_t>(pg.peo_label(v))] = p == 0 ? 0 : pg.peo_label(p);
  }
  return ElimForest::from_parents(parent);
}

int cyclic_exit(bool cyclic) { return cyclic ? exit_cyclic : exit_acyclic; }

struct Options {
  std::string file;
  std::string format = "parents";
  bool annotate = false;
  std::size_t limit = 0;
  std::uint64_t seed = 1;
  bool reference = false;
  bool choose = false;
  std::string forest;
  std::string start;
  std::string sequence;
  std::string dot_out;
  std::string family;
  std::vector<int> sizes;
  std::string engine = "auto";
};

int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.file);
  const auto peo = chordal_peo(g);
  out << "chordal: " << (peo ? "yes" : "no") << "\n";
  if (peo) {
    const PeoGraph pg = certify(g);
    std::vector<Vertex> order;
    for (Vertex v = 1; v <= pg.size(); ++v) order.push_back(pg.original_label(v));
    out << "peo: " << join(order) << "\n";
  }
  const auto sigma = max_star_sigma(g);
  out << "sigma: " << sigma.value << (sigma.exact ? "" : " (upper bound)") << "\n";
  out << "components: " << connected_components(g).size() << "\n";
  out << "filled: " << (is_filled(g) ? "yes" : "no") << "\n";
  return 0;
}

void print_forest(std::ostream& out, const Options& o, const Working& w, const ElimForest& f, const Step* step,
                  std::uint64_t index) {
  if (o.format == "json") {
    json line{{"index", index}, {"parents", original_parents(w.pg, f)}, {"sigma", original_sigma(w.pg, f)}};
    if (w.shape) line["object"] = encode(*w.shape, f);
    if (step) line["step"] = format_step(*step);
    out << line.dump() << "\n";
    return;
  }
  if (o.format == "sigma") out << join(original_sigma(w.pg, f), "");
  else if (o.format == "object") out << encode(*w.shape, f);
  else out << join(original_parents(w.pg, f));
  if (o.annotate && step) out << "\t" << format_step(*step);
  out << "\n";
}

Engine parse_engine(const std::string& name) {
  if (name == "history-free") return Engine::history_free;
  if (name == "loopless") return Engine::loopless;
  return Engine::automatic;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(o.file);
  if (!is_chordal(g)) {
    err << "error: graph is not chordal; use `elimtree verify --reference` to run the greedy reference algorithm\n";
    return exit_not_chordal;
  }
  Working w = working_labelling(g, o.format == "object" || o.format == "json");
  if (o.format == "object" && !w.shape) {
    err << "error: --format=object needs a complete graph, path, star, matching or matching plus clique\n";
    return exit_error;
  }
  std::uint64_t index = 0;
  const auto stats = generate_all(w.pg, [&](const ElimForest& f, const Step* step) {
    print_forest(out, o, w, f, step, index++);
    return o.limit == 0 || index < o.limit;
  }, parse_engine(o.engine));
  // A truncated run stops cleanly; cyclicity is only reported for complete ones.
  if (!stats.complete || w.pg.size() > kMaxCountVertices) return exit_cyclic;
  return cyclic_exit(predict_cyclic(w.pg).cyclic);
}

int cmd_count(const Options& o, std::ostream& out) {
  const Graph g = read_graph_file(o.file);
  out << count_forests(g) << "\n";
  return 0;
}

int cmd_cyclicity(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(o.file);
  if (!is_chordal(g)) {
    err << "error: graph is not chordal\n";
    return exit_not_chordal;
  }
  const PeoGraph pg = certify(g);
  const auto verdict = predict_cyclic(pg);
  json parities = json::array();
  for (const auto& p : verdict.parities)
    parities.push_back({{"nu", p.nu}, {"count", p.count.str()}, {"even", p.even}});
  json report{{"count", count_forests(pg.graph()).str()},
              {"parities", parities},
              {"predicted", verdict.cyclic ? "cyclic" : "acyclic"},
              {"reasons", verdict.reasons}};
  std::vector<Vertex> order;
  for (Vertex v = 1; v <= pg.size(); ++v) order.push_back(pg.original_label(v));
  report["peo"] = order;
  if (o.choose) {
    if (const auto found = choose_cyclic_peo(g)) report["cyclic_peo"] = {{"order", found->order}, {"rule", found->rule}};
    else report["cyclic_peo"] = nullptr;
  }
  out << report.dump(2) << "\n";
  return cyclic_exit(verdict.cyclic);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(o.file);
  const auto total = count_forests(g);
  if (total > kOracleGuard) {
    err << "error: " << total << " forests exceed the oracle guard of " << kOracleGuard << "\n";
    return exit_guard;
  }
  if (o.reference) {
    ElimForest f0;
    if (!o.start.empty()) {
      f0 = forest_from_key(o.start);
    } else {
      std::vector<Vertex> identity(static_cast<std::size_t>(g.size()));
      for (Vertex v = 1; v <= g.size(); ++v) identity[static_cast<std::size_t>(v - 1)] = v;
      f0 = forest_from_ordering(g, identity);
    }
    const auto report = run_algorithm_r(g, f0, {DownRotationPolicy::all_smaller_children, o.limit});
    out << termination_name(report.termination) << " after " << report.visited.size() << " of " << total << "\n";
    return 0;
  }
  GrayCodeReport report;
  if (!o.sequence.empty()) {
    // Parent arrays in original labels, one per line, as printed by generate.
    std::ifstream in(o.sequence);
    if (!in) throw std::runtime_error("cannot read " + o.sequence);
    std::vector<ElimForest> seq;
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) seq.push_back(forest_from_key(line.substr(0, line.find('\t'))));
    report = verify_gray_code(g, seq);
  } else {
    if (!is_chordal(g)) {
      err << "error: graph is not chordal; use --reference\n";
      return exit_not_chordal;
    }
    const PeoGraph pg = certify(g);
    report = verify_gray_code(pg.graph(), generate_list(pg));
  }
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  out << "valid: " << mark(report.all_valid) << "\n";
  out << "distinct: " << mark(report.distinct) << "\n";
  out << "adjacent: " << mark(report.consecutive_adjacent) << "\n";
  out << "complete: " << mark(report.complete) << " (" << report.length << " of " << report.expected << ")\n";
  out << "cyclic: " << (report.cyclic ? "true" : "false") << "\n";
  if (!report.passed()) return exit_error;
  return cyclic_exit(report.cyclic);
}

int cmd_encode(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(o.file);
  const ShapeTag tag = detect_shape(g);
  out << "shape: " << shape_name(tag.shape) << "\n";
  if (tag.shape == Shape::generic) return 0;
  Working w = working_labelling(g, true);
  if (!o.forest.empty()) {
    const ElimForest f = forest_from_original(w.pg, o.forest);
    if (!validate(w.pg.graph(), f)) {
      err << "error: not an elimination forest of the graph\n";
      return exit_error;
    }
    out << encode(tag, f) << "\n";
    return 0;
  }
  std::uint64_t index = 0;
  generate_all(w.pg, [&](const ElimForest& f, const Step*) {
    out << encode(tag, f) << "\n";
    return o.limit == 0 || ++index < o.limit;
  });
  return 0;
}

int cmd_export_dot(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(o.file);
  const FlipGraph fg = build_flip_graph(g);
  std::vector<std::string> labels, path;
  if (is_chordal(g)) {
    Working w = working_labelling(g, o.format == "object");
    generate_all(w.pg, [&](const ElimForest& f, const Step*) {
      path.push_back(join(original_parents(w.pg, f)));
      return true;
    });
    if (o.format == "object" && w.shape) {
      labels.resize(fg.size());
      for (std::size_t v = 0; v < fg.size(); ++v)
        labels[v] = encode(*w.shape, forest_from_original(w.pg, fg.keys[v]));
    }
  }
  const std::string dot = flip_graph_dot(fg, labels, path);
  if (o.dot_out.empty()) {
    out << dot;
  } else {
    std::ofstream file(o.dot_out);
    if (!file) {
      err << "error: cannot write " << o.dot_out << "\n";
      return exit_error;
    }
    file << dot;
  }
  return 0;
}

struct BenchRow {
  std::string name;
  int n = 0;
  GenerationStats stats;
  double ns_per_forest = 0;
};

BenchRow bench_one(const std::string& name, const Graph& g, std::size_t limit, Engine engine) {
  const PeoGraph pg = certify(g);
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t seen = 0;
  const auto stats = generate_all(pg, [&](const ElimForest&, const Step*) { return limit == 0 || ++seen < limit; }, engine);
  const auto elapsed = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - start).count();
  return {name, g.size(), stats, elapsed / static_cast<double>(stats.forests)};
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows;
  const std::size_t limit = o.limit == 0 ? 200000 : o.limit;
  const Engine engine = parse_engine(o.engine);
  if (!o.file.empty()) {
    const Graph g = read_graph_file(o.file);
    if (!is_chordal(g)) {
      err << "error: graph is not chordal\n";
      return exit_not_chordal;
    }
    rows.push_back(bench_one(o.file, g, limit, engine));
  } else {
    const std::string family = o.family.empty() ? "random-tree" : o.family;
    std::vector<int> sizes = o.sizes;
    if (sizes.empty()) {
      if (family == "random-tree" || family == "random-chordal") sizes = {10, 100, 1000};
      else if (family == "path") sizes = {4, 6, 8, 10, 12};
      else sizes = {4, 5, 6, 7, 8, 9};
    }
    for (int n : sizes) {
      Graph g;
      if (family == "complete") g = complete_graph(n);
      else if (family == "path") g = path_graph(n);
      else if (family == "star") g = star_graph(n);
      else if (family == "random-tree") g = random_tree(n, o.seed);
      else if (family == "random-chordal") g = random_chordal(n, 3, o.seed);
      else {
        err << "error: unknown family " << family << "\n";
        return exit_error;
      }
      rows.push_back(bench_one(family, g, limit, engine));
    }
  }
  out << "graph\tn\tforests\ttotal_ops\tmax_step_ops\tmean_step_ops\tns_per_forest\n";
  for (const auto& r : rows) {
    const double steps = r.stats.forests > 1 ? static_cast<double>(r.stats.forests - 1) : 1.0;
    std::ostringstream mean;
    mean.setf(std::ios::fixed);
    mean.precision(2);
    mean << static_cast<double>(r.stats.total_ops) / steps;
    std::ostringstream ns;
    ns.setf(std::ios::fixed);
    ns.precision(1);
    ns << r.ns_per_forest;
    out << r.name << "\t" << r.n << "\t" << r.stats.forests << "\t" << r.stats.total_ops << "\t" << r.stats.max_step_ops
        << "\t" << mean.str() << "\t" << ns.str() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gray codes for elimination forests of chordal graphs"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"parents", "sigma", "object", "json"};

  auto* check = app.add_subcommand("check", "Chordality, a PEO, sigma, components and the filled test");
  check->add_option("graph", o.file, "Graph file")->required();

  auto* generate = app.add_subcommand("generate", "Stream all elimination forests by rotations");
  generate->add_option("graph", o.file, "Graph file")->required();
  generate->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  generate->add_flag("--annotate", o.annotate, "Append the rotation that produced each forest");
  generate->add_option("--limit", o.limit, "Stop after this many forests");
  generate->add_option("--engine", o.engine, "auto, history-free or loopless")
      ->check(CLI::IsMember({"auto", "history-free", "loopless"}));

  auto* count = app.add_subcommand("count", "Number of elimination forests");
  count->add_option("graph", o.file, "Graph file")->required();

  auto* cyclicity = app.add_subcommand("cyclicity", "Parity-based cyclicity report as JSON");
  cyclicity->add_option("graph", o.file, "Graph file")->required();
  cyclicity->add_flag("--choose", o.choose, "Also search for a PEO that makes the Gray code cyclic");

  auto* verify = app.add_subcommand("verify", "Check the generated Gray code against brute force");
  verify->add_option("graph", o.file, "Graph file")->required();
  verify->add_flag("--reference", o.reference, "Run the history-based greedy algorithm instead (any graph)");
  verify->add_option("--start", o.start, "Initial forest for --reference as a parent array, e.g. \"0 1 2 3\"");
  verify->add_option("--limit", o.limit, "Stop the reference run after this many forests");
  verify->add_option("--sequence", o.sequence, "Check this file of parent arrays (generate output) instead");

  auto* encode_cmd = app.add_subcommand("encode", "Detect the graph shape and print combinatorial objects");
  encode_cmd->add_option("graph", o.file, "Graph file")->required();
  encode_cmd->add_option("--forest", o.forest, "Encode only this forest (parent array, original labels)");
  encode_cmd->add_option("--limit", o.limit, "Stop after this many objects");

  auto* dot = app.add_subcommand("export-dot", "Flip graph in Graphviz format, Gray code in bold");
  dot->add_option("graph", o.file, "Graph file")->required();
  dot->add_option("--dot-out", o.dot_out, "Write to this file instead of stdout");
  dot->add_option("--format", o.format, "Node labels: parents or object")->check(CLI::IsMember({"parents", "object"}));

  auto* bench = app.add_subcommand("bench", "Operation counts and timing per forest");
  bench->add_option("graph", o.file, "Graph file (otherwise a family sweep)");
  bench->add_option("--family", o.family, "complete, path, star, random-tree or random-chordal");
  bench->add_option("--sizes", o.sizes, "Vertex counts of the sweep")->delimiter(',');
  bench->add_option("--seed", o.seed, "Seed of the random families");
  bench->add_option("--limit", o.limit, "Forests per graph (default 200000)");
  bench->add_option("--engine", o.engine, "auto, history-free or loopless")
      ->check(CLI::IsMember({"auto", "history-free", "loopless"}));

  std::vector<std::string> argv_storage{"elimtree"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*generate) return cmd_generate(o, out, err);
    if (*count) return cmd_count(o, out);
    if (*cyclicity) return cmd_cyclicity(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*encode_cmd) return cmd_encode(o, out, err);
    if (*dot) return cmd_export_dot(o, out, err);
    if (*bench) return cmd_bench(o, out, err);
  } catch (const NotPeoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_not_chordal;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_guard;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return exit_guard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

}  // namespace elimtree::cli
