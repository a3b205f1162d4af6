#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "median/generators.hpp"
#include "median/oracle.hpp"
#include "support.hpp"

namespace median {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "median");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("median_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Graph& g) {
    const auto path = (dir_ / name).string();
    save_graph_file(path, g);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, EccOnSquareWithPendant) {
  const auto file = write("gstar.txt", fixture("gstar"));
  const auto r = run({"ecc", file});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("diameter 3 radius 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("center 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, EccCsvRows) {
  const auto file = write("grid.txt", gen_grid(3, 4));
  const auto csv = path("ecc.csv");
  ASSERT_EQ(run({"ecc", file, "--csv", csv, "--threads", "2"}).code, 0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "vertex,ecc,witness");
  const auto brute = brute_eccentricities(gen_grid(3, 4));
  Vertex u = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string a, b;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    EXPECT_EQ(std::stoul(a), u);
    EXPECT_EQ(std::stoul(b), brute.ecc[u]);
    ++u;
  }
  EXPECT_EQ(u, 12u);
}

TEST_F(CliTest, SweepAndDiam) {
  const auto gstar = write("gstar.txt", fixture("gstar"));
  const auto r = run({"sweep", gstar, "--k", "2", "--start", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sweep2 2 pair 2 1\n");
  const auto hstar = write("hstar.txt", fixture("hstar"));
  const auto s = run({"sweep", hstar, "--k", "4", "--start", "0"});
  EXPECT_EQ(s.out.rfind("sweep4 5 ", 0), 0u) << s.out;
  const auto d = run({"diam", hstar});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out.rfind("diameter 6 ", 0), 0u) << d.out;
}

TEST_F(CliTest, CheckCubesThetaPhi) {
  const auto q3 = write("q3.txt", gen_hypercube(3));
  const auto c = run({"check", q3});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("median yes (all triples)"), std::string::npos);
  const auto cu = run({"cubes", q3});
  EXPECT_EQ(cu.code, 0);
  EXPECT_NE(cu.out.find("records 27"), std::string::npos);
  EXPECT_NE(cu.out.find("beta 1 3 3 1"), std::string::npos);
  const auto t = run({"theta", q3});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("q 3"), std::string::npos);
  const auto p = run({"phi", q3, "--dump"});
  EXPECT_EQ(p.code, 0);
  // Header plus one line per record.
  EXPECT_EQ(std::count(p.out.begin(), p.out.end(), '\n'), 28);
}

TEST_F(CliTest, CheckRejectsNonMedian) {
  const auto c6 = write("c6.txt", testing::cycle_graph(6));
  const auto r = run({"check", c6});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("median no"), std::string::npos);
  const auto k23 = write("k23.txt", testing::complete_bipartite(2, 3));
  EXPECT_EQ(run({"ecc", k23}).code, 1);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ecc"}).code, 2);
  EXPECT_EQ(run({"ecc", path("missing.txt")}).code, 1);
  EXPECT_EQ(run({"--threads", "0", "ecc", write("g.txt", fixture("gstar"))}).code, 2);
  EXPECT_EQ(run({"sweep", write("g2.txt", fixture("gstar")), "--k", "3"}).code, 2);
  EXPECT_EQ(run({"ecc", write("g3.txt", fixture("gstar")), "--v0", "99"}).code, 1);
  EXPECT_EQ(run({"gen", "--kind", "fixture", "--name", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  {
    std::ofstream bad(path("bad.txt"));
    bad << "3 2\n0 1\n1 1\n";
  }
  const auto r = run({"ecc", path("bad.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenRoundTrip) {
  const auto out = path("tree.txt");
  ASSERT_EQ(run({"--seed", "7", "gen", "--kind", "tree", "--n", "50", "--out", out}).code, 0);
  const Graph g = load_graph_file(out);
  EXPECT_EQ(g.num_vertices(), 50u);
  EXPECT_EQ(g.num_edges(), 49u);
  const Graph same = gen_tree(50, 7);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(g.edge(e).u, same.edge(e).u);
    EXPECT_EQ(g.edge(e).v, same.edge(e).v);
  }
  const auto stdout_gen = run({"gen", "--kind", "grid", "--p", "2", "--q", "3"});
  EXPECT_EQ(stdout_gen.out.rfind("6 7\n", 0), 0u) << stdout_gen.out;
  for (const auto& kind : {"cube", "product", "expand", "fixture"}) {
    const auto file = path(std::string(kind) + ".txt");
    ASSERT_EQ(run({"gen", "--kind", kind, "--name", "milestones", "--out", file}).code, 0) << kind;
    EXPECT_EQ(run({"check", file}).code, 0) << kind;
  }
}

TEST_F(CliTest, BenchCsv) {
  const auto r = run({"bench", "--kind", "grid", "--sizes", "100..400", "--repeat", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::stringstream ss(r.out);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "size,d,time_theta,time_cubes,time_phi,time_opposites,time_psi,total");
  std::vector<std::size_t> sizes;
  while (std::getline(ss, line)) {
    sizes.push_back(std::stoul(line.substr(0, line.find(','))));
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
  }
  // Grids are the nearest p x q shape, at least the requested size.
  ASSERT_EQ(sizes.size(), 3u);
  EXPECT_GE(sizes[0], 100u);
  EXPECT_GE(sizes[1], 200u);
  EXPECT_GE(sizes[2], 400u);
  EXPECT_LT(sizes[0], sizes[1]);
  EXPECT_LT(sizes[1], sizes[2]);
  const auto cube = run({"bench", "--kind", "cube", "--sizes", "8,16"});
  EXPECT_NE(cube.out.find("\n8,3,"), std::string::npos) << cube.out;
  EXPECT_NE(cube.out.find("\n16,4,"), std::string::npos) << cube.out;
}

TEST(ParseSizes, Forms) {
  EXPECT_EQ(cli::parse_sizes("1e4..8e4"), (std::vector<std::size_t>{10000, 20000, 40000, 80000}));
  EXPECT_EQ(cli::parse_sizes("5"), (std::vector<std::size_t>{5}));
  EXPECT_EQ(cli::parse_sizes("3,1000,2e3"), (std::vector<std::size_t>{3, 1000, 2000}));
  EXPECT_EQ(cli::parse_sizes("3..5"), (std::vector<std::size_t>{3}));
  EXPECT_THROW(cli::parse_sizes("9..3"), std::invalid_argument);
  EXPECT_THROW(cli::parse_sizes("abc"), std::invalid_argument);
  EXPECT_THROW(cli::parse_sizes("0"), std::invalid_argument);
  EXPECT_THROW(cli::parse_sizes("1.5"), std::invalid_argument);
}

}  // namespace
}  // namespace median
