#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "median/generators.hpp"
#include "median/heuristics.hpp"
#include "median/oracle.hpp"
#include "median/phi.hpp"
#include "median/pipeline.hpp"

namespace median::cli {

namespace {

// Exit code 1: the input is well-formed on the command line but fails a check.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  Vertex v0 = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string csv;
  std::size_t budget = kDefaultBudget;
};

std::string format_pof(PofView pof) {
  std::string s = "{";
  for (std::size_t i = 0; i < pof.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pof[i]);
  }
  return s + "}";
}

// CSV goes to the file when one is given, to out otherwise.
class CsvSink {
 public:
  CsvSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ValidationFailure("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Vertex checked_v0(const Graph& g, Vertex v0) {
  if (v0 >= g.num_vertices()) throw ValidationFailure("--v0 " + std::to_string(v0) + " out of range");
  return v0;
}

Graph grid_of_size(std::size_t n) {
  const auto p = static_cast<std::size_t>(std::max(1.0, std::round(std::sqrt(static_cast<double>(n)))));
  return gen_grid(p, (n + p - 1) / p);
}

int cmd_check(const Graph& g, const Flags& flags, std::ostream& out) {
  const auto bip = check_bipartite(g);
  out << "bipartite " << (bip.bipartite ? "yes" : "no") << '\n';
  MedianCheckOptions opts;
  opts.seed = flags.seed;
  opts.budget = flags.budget;
  const auto verdict = is_median(g, opts);
  out << "median " << (verdict.median ? "yes" : "no") << (verdict.exhaustive ? " (all triples)" : " (sampled)");
  if (!verdict.median) {
    out << " triple " << verdict.triple[0] << ' ' << verdict.triple[1] << ' ' << verdict.triple[2] << " has "
        << verdict.medians << " medians";
  }
  out << '\n';
  if (!verdict.median) return 1;
  const auto theta = compute_theta(g, checked_v0(g, flags.v0));
  const long long euler = 2LL * static_cast<long long>(g.num_vertices()) -
                          static_cast<long long>(g.num_edges()) - static_cast<long long>(theta.num_classes());
  out << "euler 2n-m-q " << euler << (euler <= 2 ? " ok" : " FAILED") << '\n';
  return euler <= 2 ? 0 : 1;
}

int cmd_theta(const Graph& g, const Flags& flags, std::ostream& out) {
  const auto theta = compute_theta(g, checked_v0(g, flags.v0));
  const long long euler = 2LL * static_cast<long long>(g.num_vertices()) -
                          static_cast<long long>(g.num_edges()) - static_cast<long long>(theta.num_classes());
  out << "n " << g.num_vertices() << " m " << g.num_edges() << " q " << theta.num_classes() << '\n';
  for (ClassId c = 0; c < theta.num_classes(); ++c) out << "class " << c << " size " << theta.class_edges(c).size() << '\n';
  out << "euler 2n-m-q " << euler << (euler <= 2 ? " ok" : " FAILED") << '\n';
  return euler <= 2 ? 0 : 1;
}

int cmd_cubes(const Graph& g, const Flags& flags, std::ostream& out) {
  const auto theta = compute_theta(g, checked_v0(g, flags.v0));
  const auto index = enumerate_cubes(g, theta);
  const auto counts = count_cubes(index);
  const std::size_t n = g.num_vertices();
  const std::size_t bound = n << index.dimension();
  out << "d " << index.dimension() << '\n' << "records " << counts.records << '\n' << "beta";
  for (const auto b : counts.beta) out << ' ' << b;
  out << '\n';
  const bool pofs_ok = counts.distinct_pofs == n;
  const bool sum_ok = counts.weighted_beta_sum == counts.records;
  const bool bound_ok = counts.records <= bound;
  out << "distinct pofs " << counts.distinct_pofs << " n " << n << (pofs_ok ? " ok" : " FAILED") << '\n';
  out << "sum 2^i beta_i " << counts.weighted_beta_sum << (sum_ok ? " ok" : " FAILED") << '\n';
  out << "records <= 2^d n " << bound << (bound_ok ? " ok" : " FAILED") << '\n';
  return pofs_ok && sum_ok && bound_ok ? 0 : 1;
}

int cmd_phi(const Graph& g, const Flags& flags, bool dump, std::ostream& out) {
  const auto theta = compute_theta(g, checked_v0(g, flags.v0));
  auto index = enumerate_cubes(g, theta);
  compute_phi(index, theta);
  if (dump) {
    out << "basis pof phi mu\n";
    for (CubeId id = 0; id < index.size(); ++id)
      out << index[id].basis << ' ' << format_pof(index.pof(id)) << ' ' << index[id].phi << ' ' << index[id].mu
          << '\n';
    return 0;
  }
  Hops top = 0;
  for (const auto& r : index.records()) top = std::max(top, r.phi);
  out << "records " << index.size() << " max phi " << top << '\n';
  return 0;
}

int cmd_diam(const Graph& g, const Flags& flags, std::ostream& out) {
  const auto theta = compute_theta(g, checked_v0(g, flags.v0));
  auto index = enumerate_cubes(g, theta);
  compute_phi(index, theta);
  compute_opposites(index, flags.threads);
  const auto d = diameter_via_upsilon(index);
  out << "diameter " << d.diameter << " pair " << d.a << ' ' << d.b << " through " << d.through << '\n';
  return 0;
}

int cmd_ecc(const Graph& g, const Flags& flags, std::ostream& out) {
  const auto a = analyze(g, {checked_v0(g, flags.v0), flags.threads, true});
  const auto& r = a.report;
  out << "diameter " << r.diameter << " radius " << r.radius << '\n';
  out << "center " << r.center_vertex << '\n';
  out << "pair " << r.diametral_pair.first << ' ' << r.diametral_pair.second << '\n';
  if (!flags.csv.empty()) {
    CsvSink sink(flags.csv, out);
    sink.get() << "vertex,ecc,witness\n";
    for (Vertex u = 0; u < r.ecc.size(); ++u) sink.get() << u << ',' << r.ecc[u] << ',' << r.witness[u] << '\n';
  }
  return 0;
}

int cmd_sweep(const Graph& g, unsigned k, Vertex start, std::ostream& out) {
  if (start >= g.num_vertices()) throw ValidationFailure("--start " + std::to_string(start) + " out of range");
  const auto s = k == 2 ? sweep2(g, start) : sweep4(g, start);
  out << "sweep" << k << ' ' << s.hops << " pair " << s.a << ' ' << s.b << '\n';
  return 0;
}

Graph generate(const std::string& kind, const Flags& flags, std::size_t n, std::size_t p, std::size_t q,
               unsigned k, std::size_t steps, const std::string& name) {
  if (kind == "tree") return gen_tree(n, flags.seed);
  if (kind == "grid") return gen_grid(p, q);
  if (kind == "cube") return gen_hypercube(k);
  if (kind == "product") return cartesian_product(gen_tree(p, flags.seed), gen_tree(q, flags.seed + 1));
  if (kind == "expand") return peripheral_expansion(gen_tree(1, flags.seed), flags.seed, steps, flags.budget);
  if (kind == "fixture") return fixture(name);
  throw std::invalid_argument("unknown kind " + kind);
}

int cmd_bench(const std::string& kind, const std::string& sizes, unsigned repeat, const Flags& flags,
              std::ostream& out) {
  CsvSink sink(flags.csv, out);
  auto& csv = sink.get();
  csv << "size,d,time_theta,time_cubes,time_phi,time_opposites,time_psi,total\n";
  for (const std::size_t size : parse_sizes(sizes)) {
    Graph g;
    if (kind == "grid") {
      g = grid_of_size(size);
    } else if (kind == "tree") {
      g = gen_tree(size, flags.seed);
    } else if (kind == "cube") {
      g = gen_hypercube(static_cast<unsigned>(std::lround(std::log2(static_cast<double>(std::max<std::size_t>(size, 1))))));
    } else {
      throw std::invalid_argument("bench kind must be grid, tree or cube");
    }
    StageTimes best;
    std::size_t d = 0;
    for (unsigned r = 0; r < std::max(1u, repeat); ++r) {
      const auto a = analyze(g, {0, flags.threads, true});
      if (r == 0 || a.times.total < best.total) best = a.times;
      d = a.cubes.dimension();
    }
    csv << g.num_vertices() << ',' << d << ',' << best.relabel + best.theta << ',' << best.cubes << ',' << best.phi << ','
        << best.opposites << ',' << best.psi << ',' << best.total << '\n';
  }
  return 0;
}

}  // namespace

std::vector<std::size_t> parse_sizes(const std::string& text) {
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || v < 1 || v > 1e9 || v != std::floor(v)) throw std::invalid_argument("bad size '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  std::vector<std::size_t> sizes;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = number(text.substr(0, dots));
    const std::size_t hi = number(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty size range " + text);
    for (std::size_t s = lo; s <= hi; s *= 2) sizes.push_back(s);
    return sizes;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) sizes.push_back(number(item));
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter, radius and eccentricities of median graphs"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--v0", flags.v0, "Basepoint vertex");
  app.add_option("--seed", flags.seed, "Random seed");
  app.add_option("--threads", flags.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--csv", flags.csv, "CSV output path");
  app.add_option("--budget", flags.budget, "Vertex budget for brute-force checks and expansions");

  std::string file;
  auto add_file_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    cmd->add_option("file", file, "Edge-list file")->required();
    return cmd;
  };

  std::string kind;
  std::string out_path;
  std::string fixture_name;
  std::size_t n = 16;
  std::size_t p = 4;
  std::size_t q = 4;
  unsigned k = 3;
  std::size_t steps = 10;
  auto* gen = app.add_subcommand("gen", "Generate a median graph");
  gen->fallthrough();
  gen->add_option("--kind", kind, "tree|grid|cube|product|expand|fixture")
      ->required()
      ->check(CLI::IsMember({"tree", "grid", "cube", "product", "expand", "fixture"}));
  gen->add_option("--out", out_path, "Output file (stdout when omitted)");
  gen->add_option("--n", n, "Tree size");
  gen->add_option("--p", p, "Grid rows / first product factor size");
  gen->add_option("--q", q, "Grid columns / second product factor size");
  gen->add_option("--k", k, "Hypercube dimension");
  gen->add_option("--steps", steps, "Expansion steps");
  gen->add_option("--name", fixture_name, "Fixture name");

  auto* check = add_file_cmd("check", "Median, bipartite and Euler checks");
  auto* theta = add_file_cmd("theta", "Theta-classes");
  auto* cubes = add_file_cmd("cubes", "Hypercube counts and identities");
  auto* phi = add_file_cmd("phi", "Upward distance labels");
  bool dump = false;
  phi->add_flag("--dump", dump, "One line per cube");
  auto* diam = add_file_cmd("diam", "Diameter and a diametral pair");
  auto* ecc = add_file_cmd("ecc", "All eccentricities");
  auto* sweep = add_file_cmd("sweep", "2-sweep / 4-sweep lower bound");
  unsigned sweep_k = 2;
  Vertex start = 0;
  sweep->add_option("--k", sweep_k, "2 or 4")->check(CLI::IsMember({2u, 4u}));
  sweep->add_option("--start", start, "Start vertex");

  auto* bench = app.add_subcommand("bench", "Time the pipeline on a generated family");
  bench->fallthrough();
  std::string sizes;
  unsigned repeat = 1;
  bench->add_option("--kind", kind, "grid|tree|cube")->required()->check(CLI::IsMember({"grid", "tree", "cube"}));
  bench->add_option("--sizes", sizes, "a..b (doubling) or a,b,c")->required();
  bench->add_option("--repeat", repeat, "Runs per size; the fastest is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const Graph g = generate(kind, flags, n, p, q, k, steps, fixture_name);
      if (out_path.empty()) {
        save_graph(out, g);
      } else {
        save_graph_file(out_path, g);
      }
      return 0;
    }
    if (*bench) return cmd_bench(kind, sizes, repeat, flags, out);

    const Graph g = load_graph_file(file);
    if (*check) return cmd_check(g, flags, out);
    if (*theta) return cmd_theta(g, flags, out);
    if (*cubes) return cmd_cubes(g, flags, out);
    if (*phi) return cmd_phi(g, flags, dump, out);
    if (*diam) return cmd_diam(g, flags, out);
    if (*ecc) return cmd_ecc(g, flags, out);
    if (*sweep) return cmd_sweep(g, sweep_k, start, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace median::cli
