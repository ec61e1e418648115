#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../../tools/cli.hpp"
#include "tiso/version.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tiso::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TISO_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) {
  return slurp(fs::path(TISO_GOLDEN_DIR) / name);
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("tiso_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("version") {
  auto r = run({"--version"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("version.txt"));
  CHECK(r.out.find(tiso::kLibraryVersion) != std::string::npos);
}

TEST_CASE("transform") {
  auto dot = run({"transform", data("repeated_motif.csv"), "--repr", "compressed", "--delta", "2",
                  "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out == golden("repeated_motif_compressed.dot"));
  CHECK(dot.err.find("4 event nodes, 1 class ×2") != std::string::npos);
  CHECK(dot.err.find("9 nodes, 11 edges, total weight 14") != std::string::npos);

  auto concat = run({"transform", data("g1.csv"), "--repr", "concatenated", "--format", "json"});
  CHECK(concat.code == 0);
  CHECK(concat.out == golden("g1_concatenated.json"));

  auto agg =
      run({"transform", data("repeated_motif.csv"), "--repr", "aggregated", "--format", "csv"});
  CHECK(agg.code == 0);
  CHECK(agg.out.find("a,b,2\n") != std::string::npos);

  TempDir dir;
  const auto file = (dir.path / "aug.json").string();
  auto written = run({"transform", data("g1.csv"), "--repr", "augmented", "--delta", "2",
                      "--format", "json", "--out", file});
  CHECK(written.code == 0);
  CHECK(written.out.find("9 nodes (5 original, 4 event), 11 edges") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(file));
  CHECK(j["nodes"].size() == 9);

  CHECK(run({"transform", data("g1.csv"), "--repr", "augmented"}).code == 2);
  CHECK(run({"transform", data("g1.csv"), "--repr", "bogus", "--delta", "1"}).code == 2);
  auto missing = run({"transform", data("nope.csv"), "--repr", "event", "--delta", "1"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: ", 0) == 0);
}

TEST_CASE("paths and reach") {
  auto p = run({"paths", data("g1.csv"), "--delta", "2"});
  CHECK(p.code == 0);
  CHECK(p.out == golden("paths_g1.txt"));
  auto capped = run({"paths", data("g1.csv"), "--delta", "2", "--max-paths", "3"});
  CHECK(capped.code == 2);
  auto short_paths = run({"paths", data("g1.csv"), "--delta", "2", "--max-len", "1"});
  CHECK(short_paths.out == "a->b@1\nb->d@2\nc->d@3\nd->e@4\n");

  auto r = run({"reach", data("g4.csv"), "--delta", "2", "--source", "b"});
  CHECK(r.code == 0);
  CHECK(r.out == "b\nd\n");
  CHECK(run({"reach", data("g4.csv"), "--delta", "2", "--source", "zz"}).code == 2);
}

TEST_CASE("iso verdicts and exit codes") {
  auto yes = run({"iso", data("g1.csv"), data("g3.csv"), "--mode", "consistent", "--delta", "2"});
  CHECK(yes.code == 0);
  CHECK(yes.out == golden("iso_g1_g3.json"));

  struct Row {
    const char* mode;
    const char* other;
    int code;
  };
  const Row rows[] = {
      {"concatenated", "g2.csv", 0}, {"concatenated", "g3.csv", 1},
      {"concatenated", "g4.csv", 1}, {"concatenated", "g5.csv", 1},
      {"consistent", "g2.csv", 0},   {"consistent", "g4.csv", 1},
      {"consistent", "g5.csv", 1},   {"aggregated", "g4.csv", 0},
      {"aggregated", "g5.csv", 1},   {"timewise", "g2.csv", 0},
      {"timewise", "g3.csv", 1},     {"trp-oracle", "g3.csv", 0},
      {"trp-oracle", "g4.csv", 1},
  };
  for (const auto& row : rows) {
    CAPTURE(row.mode);
    CAPTURE(row.other);
    auto r = run({"iso", data("g1.csv"), data(row.other), "--mode", row.mode, "--delta", "2"});
    CHECK(r.code == row.code);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == (row.code == 0 ? "Isomorphic" : "NotIsomorphic"));
    CHECK(j.contains("node_map") == (row.code == 0));
  }

  auto missing = run({"iso", data("g1.csv"), data("g3.csv"), "--mode", "consistent"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--delta") != std::string::npos);
  const auto motif = data("repeated_motif.csv");
  auto budget = run({"iso", motif, motif, "--mode", "consistent", "--delta", "2", "--budget", "1"});
  CHECK(budget.code == 2);
  CHECK(nlohmann::json::parse(budget.out)["verdict"] == "BudgetExceeded");
}

TEST_CASE("wl-compare") {
  auto diff = run({"wl-compare", data("g1.csv"), data("g4.csv"), "--repr", "augmented",
                   "--delta", "2"});
  CHECK(diff.code == 1);
  CHECK(diff.out.find("distinguished at iteration") != std::string::npos);

  auto same = run({"wl-compare", data("g1.csv"), data("g3.csv"), "--repr", "compressed",
                   "--delta", "2", "-K", "4"});
  CHECK(same.code == 0);
  CHECK(same.out.find("indistinguishable after 4") != std::string::npos);

  auto fp = run({"wl-compare", data("g1.csv"), data("g3.csv"), "--repr", "augmented", "--delta",
                 "2", "--fingerprints"});
  CHECK(fp.code == 0);
  CHECK(fp.out.find("\"features\"") != std::string::npos);
}

TEST_CASE("generate writes graphs and a manifest") {
  TempDir dir;
  auto r = run({"generate", "--model", "shuffle", "--alpha", "0.5", "--graphs-per-class", "2",
                "--walks", "10", "--seed", "4", "--out", dir.path.string()});
  REQUIRE(r.code == 0);
  auto m = nlohmann::json::parse(slurp(dir.path / "manifest.json"));
  REQUIRE(m["files"].size() == 4);
  CHECK(m["labels"] == nlohmann::json::array({0, 0, 1, 1}));
  for (const auto& f : m["files"]) {
    auto g = run({"paths", (dir.path / f.get<std::string>()).string(), "--delta", "1",
                  "--max-len", "1"});
    CHECK(g.code == 0);
    CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 20);
  }
  CHECK(r.out.find("seed") == std::string::npos);

  CHECK(run({"generate", "--model", "community", "--sigma1", "1.5", "--out",
             dir.path.string()})
            .code == 2);
}

TEST_CASE("experiment") {
  TempDir dir;
  const auto config = dir.path / "config.json";
  std::ofstream(config) << R"({"experiment":"shuffle","alphas":[0,1],"graphs_per_class":5,
                               "walks_per_graph":20,"runs":2,"seed":3})";
  const auto out = dir.path / "results";
  auto r = run({"experiment", "--config", config.string(), "--out", out.string(), "--jobs", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("param1,param2,mean_acc,std_acc,runs,seconds\n", 0) == 0);
  CHECK(fs::exists(out / "results.csv"));
  CHECK(fs::exists(out / "cell_000.json"));
  CHECK(fs::exists(out / "cell_001.json"));

  std::ofstream(dir.path / "bad.json") << R"({"experiment":"shuffle","alphas":[2]})";
  auto bad = run({"experiment", "--config", (dir.path / "bad.json").string(), "--out",
                  (dir.path / "bad").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("field 'alphas[0]'") != std::string::npos);
}

TEST_CASE("export") {
  auto nd = run({"export", data("g1.csv"), "--format", "ndjson"});
  CHECK(nd.code == 0);
  CHECK(nd.out.rfind("{\"dst\":\"b\",\"src\":\"a\",\"t\":1}\n", 0) == 0);
  auto csv = run({"export", data("g1.csv"), "--format", "csv"});
  CHECK(csv.out == "src,dst,t\na,b,1\nb,d,2\nc,d,3\nd,e,4\n");
  CHECK(run({"export", data("g1.csv"), "--format", "dot"}).out.find("digraph") !=
        std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
