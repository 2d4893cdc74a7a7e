#include "geodkit/cli.hpp"

#include <atomic>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "geodkit/construct.hpp"
#include "geodkit/enumerate.hpp"
#include "geodkit/families.hpp"
#include "geodkit/io.hpp"
#include "geodkit/oracle.hpp"
#include "geodkit/paths.hpp"
#include "geodkit/recognition.hpp"
#include "geodkit/report.hpp"
#include "geodkit/structure.hpp"
#include "geodkit/weighted.hpp"

namespace geodkit {

namespace {

struct Options {
  std::string file = "-";
  std::string family;
  bool json = false;
  bool weighted = false;
  bool oracle = false;
  bool antipodal = false;
  bool cycle = false;
  int root = 0;
  int q = 2;
  int k = 2;
  std::uint64_t budget = kDefaultHamiltonianBudget;
  int max_n = 5;
  std::uint64_t seed = kDefaultSeed;
};

Graph load(const std::string& path, std::istream& in) {
  if (path == "-") {
    return parse_graph(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
  }
  return parse_graph(read_text(path));
}

std::string emit(const Json& doc, bool json) { return json ? doc.dump(2) + "\n" : render_text(doc); }

CommandResult check(const Options& o, std::istream& in, bool brute_force) {
  const Graph g = load(o.file, in);
  require_connected(g, "check");
  Verdict geo;
  Verdict anti;
  if (brute_force) {
    geo = oracle_is_geodetic(g);
    anti = oracle_is_antipodal(g);
  } else if (o.weighted || g.is_weighted()) {
    auto r = check_weighted(g);
    geo = std::move(r.geodetic);
    anti = std::move(r.antipodal);
  } else {
    auto r = recognize(g);
    geo = std::move(r.geodetic);
    anti = std::move(r.antipodal);
  }
  const bool ok = geo.holds && (!o.antipodal || anti.holds);
  return {ok ? 0 : 1, emit(check_document(g, geo, anti), o.json), {}};
}

std::string with_cycle(const Construction& c, bool cycle) {
  std::string out = serialize_graph(c.graph);
  if (cycle && c.hamiltonian_cycle) {
    out += "\n# cycle:";
    for (Vertex v : *c.hamiltonian_cycle) {
      out += ' ' + std::to_string(v);
    }
  }
  return out + "\n";
}

CommandResult selftest(const Options& o) {
  if (o.max_n < 1 || o.max_n > kMaxEnumerationOrder) {
    throw InputError("selftest: --max-n must be between 1 and " + std::to_string(kMaxEnumerationOrder));
  }
  Json doc;
  std::uint64_t total = 0;
  std::atomic<std::uint64_t> bad{0};
  for (int n = 1; n <= o.max_n; ++n) {
    total += enumerate_connected_graphs_parallel(n, [&](std::uint64_t, const Graph& g) {
      const auto r = recognize_serial(g);
      const bool geo = oracle_is_geodetic(g).holds;
      if (r.geodetic.holds != geo || r.antipodal.holds != oracle_is_antipodal(g).holds ||
          geodetic_via_blocks(g).holds != geo) {
        ++bad;
      }
    });
  }
  doc["max_n"] = o.max_n;
  doc["exhaustive_graphs"] = total;
  doc["exhaustive_disagreements"] = bad.load();

  Rng rng(o.seed);
  std::uint64_t random_bad = 0;
  constexpr int kRandomGraphs = 200;
  for (int i = 0; i < kRandomGraphs; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
    const Graph g = random_connected_graph(n, p, rng);
    const auto r = recognize(g);
    if (r.geodetic.holds != oracle_is_geodetic(g).holds || r.antipodal.holds != oracle_is_antipodal(g).holds) {
      ++random_bad;
    }
  }
  doc["seed"] = o.seed;
  doc["random_graphs"] = kRandomGraphs;
  doc["random_disagreements"] = random_bad;
  const bool ok = bad.load() == 0 && random_bad == 0;
  doc["ok"] = ok;
  return {ok ? 0 : 1, emit(doc, o.json), {}};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Options o;
  CLI::App app{"geodetic and antipodal graph toolkit", "geodkit"};
  app.require_subcommand(1);

  const auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "edge-list file, - for stdin"); };

  auto* check_cmd = app.add_subcommand("check", "recognize geodetic / antipodal graphs");
  file_arg(check_cmd);
  check_cmd->add_flag("--json", o.json, "JSON output");
  check_cmd->add_flag("--weighted", o.weighted, "use the weighted checker");
  check_cmd->add_flag("--oracle", o.oracle, "use the brute-force checkers");
  check_cmd->add_flag("--antipodal", o.antipodal, "antipodality also decides the exit code");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force geodetic / antipodal check");
  file_arg(oracle_cmd);
  oracle_cmd->add_flag("--json", o.json, "JSON output");
  oracle_cmd->add_flag("--antipodal", o.antipodal, "antipodality also decides the exit code");

  auto* analyze_cmd = app.add_subcommand("analyze", "blocks, class memberships, transversality");
  file_arg(analyze_cmd);
  analyze_cmd->add_option("--root", o.root, "bearing-tree root");
  analyze_cmd->add_flag("--json", o.json, "JSON output");

  auto* gen_cmd = app.add_subcommand("gen", "generate graphs");
  gen_cmd->require_subcommand(1);
  for (const char* fam : {"levi", "diam4", "diam2"}) {
    auto* sub = gen_cmd->add_subcommand(fam);
    sub->add_option("--q", o.q, "plane order (2, 3, 4, 5, 7, 8, 9)");
    sub->add_flag("--cycle", o.cycle, "print the Hamiltonian cycle as a comment line");
    sub->add_option("--budget", o.budget, "Hamiltonian search budget");
  }
  auto* sub_cmd = gen_cmd->add_subcommand("subdivide", "put k vertices on every edge");
  sub_cmd->add_option("--k", o.k, "even number of new vertices per edge");
  file_arg(sub_cmd);
  auto* ext_cmd = gen_cmd->add_subcommand("extend-antipodal", "antipodal supergraph");
  file_arg(ext_cmd);

  auto* weights_cmd = app.add_subcommand("weights", "weight assignment");
  weights_cmd->require_subcommand(1);
  auto* assign_cmd = weights_cmd->add_subcommand("assign", "make a graph geodetic and antipodal by weights");
  file_arg(assign_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "weighted geodetic supergraph");
  file_arg(embed_cmd);

  auto* self_cmd = app.add_subcommand("selftest", "exhaustive fast-vs-oracle sweeps");
  self_cmd->add_option("--max-n", o.max_n, "largest order swept exhaustively (1..7)");
  self_cmd->add_option("--seed", o.seed, "seed of the random corpus");
  self_cmd->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return {2, {}, std::string(e.what()) + "\nRun with --help for usage.\n"};
  }

  try {
    if (check_cmd->parsed()) {
      return check(o, in, o.oracle);
    }
    if (oracle_cmd->parsed()) {
      return check(o, in, true);
    }
    if (analyze_cmd->parsed()) {
      const Graph g = load(o.file, in);
      return {0, emit(analyze_document(g, o.root), o.json), {}};
    }
    if (gen_cmd->parsed()) {
      if (gen_cmd->got_subcommand("levi")) {
        return {0, with_cycle(build_levi(o.q, o.budget), o.cycle), {}};
      }
      if (gen_cmd->got_subcommand("diam4")) {
        return {0, with_cycle(build_diameter4(o.q, o.budget), o.cycle), {}};
      }
      if (gen_cmd->got_subcommand("diam2")) {
        return {0, with_cycle(build_diameter2(o.q, o.budget), o.cycle), {}};
      }
      if (sub_cmd->parsed()) {
        return {0, serialize_graph(subdivide(load(o.file, in), o.k)) + "\n", {}};
      }
      return {0, serialize_graph(extend_to_antipodal(load(o.file, in))) + "\n", {}};
    }
    if (assign_cmd->parsed()) {
      return {0, serialize_graph(assign_weights(load(o.file, in))) + "\n", {}};
    }
    if (embed_cmd->parsed()) {
      return {0, serialize_graph(embed_weighted_geodetic(load(o.file, in))) + "\n", {}};
    }
    return selftest(o);
  } catch (const InputError& e) {
    return {2, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {2, {}, std::string("internal error: ") + e.what() + "\n"};
  }
}

CommandResult run(const std::vector<std::string>& args) { return run(args, std::cin); }

}  // namespace geodkit
