#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bary/canonical.hpp"
#include "bary/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result bary_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bary");
  std::ostringstream out;
  std::ostringstream err;
  const int code = bary::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(BARY_FIXTURE_DIR) + "/" + name; }

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "bary_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("reconstruct hexagon", "[cli]") {
  const Result r = bary_cli({"reconstruct", fixture("hexagon.json")});
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == R"({"ground_set":3,"facets":[[1,2],[1,3],[2,3]]})");
}

TEST_CASE("iso with itself gives the identity", "[cli]") {
  const Result r = bary_cli({"iso", fixture("mixed.json"), fixture("mixed.json")});
  CHECK(r.code == 0);
  CHECK(trimmed(r.out) == R"({"isomorphic":true,"map":[1,2,3,4,5]})");
  const Result no = bary_cli({"iso", fixture("triangle_boundary.json"), fixture("two_edges.json")});
  CHECK(no.code == 1);
  CHECK(trimmed(no.out) == R"({"isomorphic":false,"map":null})");
}

TEST_CASE("check-comparability", "[cli]") {
  const Result c5 = bary_cli({"check-comparability", fixture("c5.json")});
  CHECK(c5.code == 1);
  CHECK(c5.out.find(R"("status":"not_orientable")") != std::string::npos);
  CHECK(bary_cli({"check-comparability", fixture("c4.json")}).out.find("not_face_poset") != std::string::npos);
  CHECK(bary_cli({"check-comparability", fixture("hexagon.json")}).code == 0);
}

TEST_CASE("complex commands", "[cli]") {
  const std::string tri = fixture("triangle_boundary.json");
  CHECK(trimmed(bary_cli({"dual", tri}).out) == R"({"ground_set":3,"facets":[[]]})");
  CHECK(trimmed(bary_cli({"complement", tri}).out) == R"({"ground_set":3,"facets":[[1],[2],[3]]})");
  CHECK(trimmed(bary_cli({"nonfaces", tri}).out) == R"({"generators":[[1,2,3]]})");
  CHECK(trimmed(bary_cli({"sr-gens", tri}).out) == R"({"generators":[[1,2,3]]})");
  CHECK(trimmed(bary_cli({"facet-gens", tri}).out) == R"({"generators":[[1,2],[1,3],[2,3]]})");
  CHECK(trimmed(bary_cli({"euler", tri}).out) == R"({"euler_characteristic":0})");
  CHECK(trimmed(bary_cli({"skeleton", tri, "-i", "0"}).out) == R"({"ground_set":3,"facets":[[1],[2],[3]]})");
  CHECK(trimmed(bary_cli({"subdivide", tri}).out) ==
        R"({"ground_set":6,"facets":[[1,4],[1,5],[2,4],[2,6],[3,5],[3,6]]})");
  const auto twice = bary::io::complex_from_json(bary_cli({"subdivide", "-k", "2", tri}).out);
  CHECK(twice.facet_count() == 12);
  const auto graph = bary::io::graph_from_json(bary_cli({"comp-graph", tri}).out);
  CHECK(graph.vertex_count() == 6);
  CHECK(graph.edge_count() == 6);
}

TEST_CASE("output files and labels", "[cli]") {
  const fs::path dir = scratch();
  const std::string out = (dir / "sub.json").string();
  const std::string labels = (dir / "labels.json").string();
  const Result r = bary_cli({"subdivide", fixture("two_edges.json"), "-o", out, "--labels", labels});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(trimmed(slurp(labels)) == R"({"vertices":[[1],[2],[3],[4],[1,2],[3,4]]})");
  CHECK(bary::io::complex_from_json(slurp(out)).facet_count() == 4);
}

TEST_CASE("round trip through files for every fixture complex", "[cli]") {
  const fs::path dir = scratch();
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(BARY_FIXTURE_DIR)) {
    const std::string text = slurp(entry.path());
    if (text.rfind("{\"ground_set\"", 0) != 0) continue;
    const auto original = bary::io::complex_from_json(text);
    if (original.is_void() || original.is_empty()) continue;
    const std::string sub = (dir / ("sub_" + entry.path().filename().string())).string();
    REQUIRE(bary_cli({"subdivide", entry.path().string(), "-o", sub}).code == 0);
    const Result back = bary_cli({"reconstruct-sub", sub});
    REQUIRE(back.code == 0);
    CHECK(bary::are_isomorphic(bary::io::complex_from_json(back.out), original));
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("reconstruct reports", "[cli]") {
  const Result full = bary_cli({"reconstruct", fixture("hexagon.json"), "--report"});
  CHECK(full.code == 0);
  CHECK(full.out.find(R"("status":"ok")") != std::string::npos);
  CHECK(full.out.find(R"("both_admissible":true)") != std::string::npos);
  const Result c3 = bary_cli({"reconstruct", fixture("c3.json")});
  CHECK(c3.code == 1);
  CHECK(c3.out.find("not_face_poset") != std::string::npos);
  const Result not_flag = bary_cli({"reconstruct-sub", fixture("triangle_boundary.json")});
  CHECK(not_flag.code == 1);
  CHECK(not_flag.out.find("not_flag") != std::string::npos);
}

TEST_CASE("verify", "[cli]") {
  const Result r = bary_cli({"verify", "--max-vertices", "3", "--theorem", "2.2"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("failures":[])") != std::string::npos);
  CHECK(bary_cli({"verify", "--max-vertices", "3"}).code == 0);
  CHECK(bary_cli({"verify", "--max-vertices", "3", "--theorem", "2.3"}).code == 0);
  CHECK(bary_cli({"verify", "--max-vertices", "6"}).code == 2);
  CHECK(bary_cli({"verify", "--max-vertices", "3", "--theorem", "9"}).code == 2);
}

TEST_CASE("errors use exit code 2 and one diagnostic line", "[cli]") {
  const Result missing = bary_cli({"dual", fixture("does_not_exist.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: MalformedInput: ", 0) == 0);
  CHECK(missing.err.find('\n') == missing.err.size() - 1);

  const Result range = bary_cli({"skeleton", fixture("tetrahedron.json"), "-i", "9"});
  CHECK(range.code == 2);
  CHECK(range.err.rfind("error: SkeletonIndexOutOfRange: ", 0) == 0);

  const Result empty = bary_cli({"subdivide", fixture("empty.json")});
  CHECK(empty.code == 2);
  CHECK(empty.err.rfind("error: EmptyInput: ", 0) == 0);

  CHECK(bary_cli({}).code == 2);
  CHECK(bary_cli({"frobnicate"}).code == 2);
  CHECK(bary_cli({"iso", fixture("mixed.json")}).code == 2);
  CHECK(bary_cli({"--version"}).code == 0);
  CHECK(trimmed(bary_cli({"--version"}).out) == "bary 1.0.0");
  CHECK(bary_cli({"--help"}).code == 0);
}
