#include <doctest.h>

#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "tsc/cli.hpp"
#include "tsc/oracle.hpp"
#include "tsc/semantics.hpp"

using namespace tsc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

using Edge = std::pair<std::size_t, std::size_t>;

// Minimal reader for the DOT subset we emit. Fails the test on anything else.
struct Dot {
  std::vector<Point> nodes;
  std::map<std::size_t, std::set<Edge>> edges;
};

Dot read_dot(const std::string& text) {
  static const std::regex node(R"re(  p(\d+) \[label="(\[[^"]*\])"\];)re");
  static const std::regex edge(R"re(  p(\d+) -> p(\d+) \[style=(dashed|solid|dotted|bold), comment="R(\d+)"\];)re");
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0] == "digraph fragment {");
  CHECK(lines[1] == "  rankdir=BT;");
  CHECK(lines[2] == "  node [shape=plaintext];");
  CHECK(lines.back() == "}");

  Dot dot;
  std::smatch m;
  for (std::size_t i = 3; i + 1 < lines.size(); ++i) {
    CAPTURE(lines[i]);
    if (std::regex_match(lines[i], m, node)) {
      CHECK(std::stoul(m[1]) == dot.nodes.size());
      dot.nodes.push_back(parse_point(m[2].str()));
    } else if (std::regex_match(lines[i], m, edge)) {
      std::size_t from = std::stoul(m[1]), to = std::stoul(m[2]);
      CHECK(from < dot.nodes.size());
      CHECK(to < dot.nodes.size());
      dot.edges[std::stoul(m[4])].insert({from, to});
    } else {
      FAIL("unexpected DOT line");
    }
  }
  return dot;
}

std::set<Edge> closure(std::set<Edge> edges, std::size_t size) {
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (edges.count({i, k}) && edges.count({k, j})) edges.insert({i, j});
  return edges;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"decide", "<1^1>T |- <0^w>T"});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "derivable\n");

  r = run({"decide", "<0^w>T |- <1^1>T"});
  CHECK(r.code == cli::kExitNo);
  CHECK(r.out == "not derivable; countermodel=[w]\n");

  r = run({"normalize", "<0^1><1^1>T"});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "<0^(w*2)>T & <1^1>T ; point=[w*2, 1]\n");
  CHECK(r.err.empty());
}

TEST_CASE("check") {
  auto r = run({"check", "[w*2, 1]", "<0^1><1^1>T"});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "true\n");
  r = run({"check", "[w]", "<1^1>T"});
  CHECK(r.code == cli::kExitNo);
  CHECK(r.out == "false\n");
  r = run({"--machine", "check", "[0]", "T"});
  CHECK(r.code == cli::kExitYes);
  CHECK(r.out == "forces=true\n");
}

TEST_CASE("machine mode") {
  auto r = run({"--machine", "decide", "<0^w>T |- <1^1>T"});
  CHECK(r.code == cli::kExitNo);
  CHECK(r.out == "derivable=false; countermodel=[w]\n");
  CHECK(run({"decide", "--machine", "<0^w>T |- <1^1>T"}).out == r.out);

  r = run({"--machine", "normalize", "<0^1><1^1>T"});
  CHECK(r.out == "mnf=<0^(w*2)>T & <1^1>T; point=[w*2, 1]\n");
  CHECK(run({"--machine", "decide", "<1^1>T |- <0^w>T"}).out == "derivable=true\n");

  // identical output across repeated runs
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--machine", "normalize", "<2^1>T & <0^(w^2)><1^3>T"},
           {"--machine", "decide", "<0^(w*3)>T & <1^2>T |- <1^1><0^w>T"},
           {"--machine", "frame-dot"}}) {
    auto first = run(args);
    for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
  }
}

TEST_CASE("errors exit with the usage code") {
  auto r = run({"normalize", "<0^w>"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("parse error at position 5") != std::string::npos);

  r = run({"decide", "<0^1>T"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("parse error at position") != std::string::npos);

  r = run({"check", "[1, 1]", "T"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.rfind("error: ", 0) == 0);

  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"normalize"}).code == cli::kExitUsage);
  CHECK(run({"frame-dot", "--coeff", "x"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitYes);
}

TEST_CASE("frame-dot edges follow the single-step relations") {
  const std::vector<std::string> fragment = {"frame-dot", "--max", "w*3 + 3", "--coeff", "3", "--support", "3",
                                             "--bases", "0,1,2"};
  auto full_args = fragment;
  full_args.push_back("--full");
  auto full = run(full_args);
  auto reduced = run(fragment);
  REQUIRE(full.code == cli::kExitYes);
  REQUIRE(reduced.code == cli::kExitYes);

  Dot f = read_dot(full.out), r = read_dot(reduced.out);
  auto expected_nodes = enumerate_points({enumerate_ordinals(parse_ordinal("w*3 + 3"), 3), 3, {}});
  CHECK(f.nodes == expected_nodes);
  CHECK(r.nodes == expected_nodes);

  const std::size_t size = expected_nodes.size();
  for (std::size_t n = 0; n <= 2; ++n) {
    CAPTURE(n);
    std::set<Edge> rel;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (r_n(expected_nodes[i], expected_nodes[j], n)) rel.insert({i, j});
    CHECK(f.edges[n] == rel);

    // covering edges: no shortcut through a third point, same closure
    const auto& cover = r.edges[n];
    for (const auto& [i, j] : cover) {
      CHECK(rel.count({i, j}));
      for (std::size_t k = 0; k < size; ++k) CHECK_FALSE((rel.count({i, k}) && rel.count({k, j})));
    }
    CHECK(closure(cover, size) == rel);
  }
  CHECK(f.edges[1].size() > 0);
  CHECK(f.edges[2].empty());
}

TEST_CASE("frame-dot defaults") {
  auto r = run({"frame-dot"});
  REQUIRE(r.code == cli::kExitYes);
  Dot dot = read_dot(r.out);
  CHECK(dot.nodes == enumerate_points({enumerate_ordinals(parse_ordinal("w*2"), 2), 2, {}}));
  CHECK(dot.edges.count(0));
  for (const auto& [n, edges] : dot.edges) CHECK(n <= 1);
}
