#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "vnum/cli.hpp"
#include "vnum/formats.hpp"

namespace fs = std::filesystem;
using vnum::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("vnum-cli-test-" + std::to_string(std::rand()) + "-" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string column(const std::string& header, const std::string& row, const std::string& name) {
  const auto h = split(header, '\t');
  const auto r = split(row, '\t');
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] == name) return i < r.size() ? r[i] : "";
  return "<missing column>";
}

}  // namespace

TEST_CASE("report") {
  TempDir dir;
  const auto k2 = dir.write("k2.txt", "graph 2\n1 2\n");
  auto r = call({"report", k2, "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["name"] == "k2.txt");
  CHECK(j["v"] == 1);
  CHECK(j["dim"] == 1);
  CHECK(j["fields"]["Q"]["reg"] == 1);
  CHECK_FALSE(j["fields"].contains("GF2"));

  r = call({"report", k2, "--tsv", "--field", "both"});
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 2);
  CHECK(column(lines[0], lines[1], "reg_GF2") == "1");
  CHECK(column(lines[0], lines[1], "w2") == "true");

  r = call({"report", dir.write("p3.g6", "BW\n")});
  CHECK(r.code == 0);
  CHECK(r.out.find("v-number: 1") != std::string::npos);

  CHECK(call({"report", dir.write("bad.txt", "graph 3\n1 1\n")}).code == 1);
  CHECK(call({"report", dir.write("empty.txt", "graph 3\n")}).code == 1);
  CHECK(call({"report", (fs::temp_directory_path() / "vnum-no-such-file").string()}).code == 1);
  CHECK(call({"report", k2, "--json", "--tsv"}).code == 1);
  CHECK(call({"report", k2, "--field", "r"}).code == 1);
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"report", "--help"}).code == 0);

  // Same input, same bytes.
  const auto a = call({"report", k2, "--json", "--field", "both"});
  const auto b = call({"report", k2, "--json", "--field", "both"});
  CHECK(a.out == b.out);
}

TEST_CASE("symbolic-power") {
  TempDir dir;
  auto r = call({"symbolic-power", dir.write("k2", "graph 2\n1 2\n"), "-k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "t1^2 t2^2\n");
  r = call({"symbolic-power", dir.write("p3", "graph 3\n1 2\n2 3\n"), "-k", "2"});
  CHECK(r.out == "t1^2 t2^2\nt1 t2^2 t3\nt2^2 t3^2\n");
  r = call({"symbolic-power", dir.write("k3", "graph 3\n1 2\n1 3\n2 3\n"), "--power", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "t1 t2 t3\nt1^2 t2^2\nt1^2 t3^2\nt2^2 t3^2\n");
  r = call({"symbolic-power", dir.write("k2b", "graph 2\n1 2\n")});
  CHECK(r.out == "t1^2 t2^2\n");
  CHECK(call({"symbolic-power", dir.write("k2c", "graph 2\n1 2\n"), "-k", "0"}).code == 1);
  CHECK(call({"symbolic-power", dir.write("none", "graph 2\n"), "-k", "2"}).code == 1);
}

TEST_CASE("batch") {
  TempDir dir;
  const std::string k2 = vnum::to_graph6(corpus::complete(2));
  const std::string k3 = vnum::to_graph6(corpus::complete(3));
  const std::string c4 = vnum::to_graph6(corpus::cycle(4));
  const auto list = dir.write("list", k2 + "\n" + k3 + "\n" + c4 + "\n");
  auto r = call({"batch", list});
  REQUIRE(r.code == 0);
  auto lines = split(r.out, '\n');
  REQUIRE(lines.size() == 4);
  const std::vector<std::string> names{k2, k3, c4};
  const std::vector<std::string> w2{"true", "true", "false"};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(column(lines[0], lines[i + 1], "name") == names[i]);
    CHECK(column(lines[0], lines[i + 1], "v") == "1");
    CHECK(column(lines[0], lines[i + 1], "w2") == w2[i]);
    CHECK(column(lines[0], lines[i + 1], "error") == "");
  }

  const auto broken = dir.write("broken", k2 + "\nnot!a!graph\n" + c4 + "\n");
  r = call({"batch", broken});
  REQUIRE(r.code == 0);
  lines = split(r.out, '\n');
  REQUIRE(lines.size() == 4);
  CHECK(column(lines[0], lines[1], "error") == "");
  CHECK(column(lines[0], lines[2], "error") != "");
  CHECK(column(lines[0], lines[3], "error") == "");
  CHECK(column(lines[0], lines[3], "v") == "1");

  r = call({"batch", broken, "--json"});
  lines = split(r.out, '\n');
  REQUIRE(lines.size() == 3);
  CHECK(nlohmann::ordered_json::parse(lines[0])["v"] == 1);
  CHECK(nlohmann::ordered_json::parse(lines[1]).contains("error"));

  // Files listed by relative path are resolved next to the list.
  dir.write("c5.txt", "graph 5\n1 2\n2 3\n3 4\n4 5\n1 5\n");
  r = call({"batch", dir.write("files", "# inputs\nc5.txt\n" + k3 + "\n"), "--field", "both"});
  lines = split(r.out, '\n');
  REQUIRE(lines.size() == 3);
  CHECK(column(lines[0], lines[1], "v") == "2");
  CHECK(column(lines[0], lines[1], "reg_GF2") == "2");

  std::string many;
  for (const auto& g : corpus::connected_graphs(5)) many += vnum::to_graph6(g) + "\n";
  many += "?\n";
  const auto big = dir.write("many", many);
  const auto one = call({"batch", big, "--parallel", "1", "--field", "both"});
  const auto four = call({"batch", big, "--parallel", "4", "--field", "both"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(split(one.out, '\n').size() == corpus::connected_graphs(5).size() + 2);
  const auto one_json = call({"batch", big, "--parallel", "1", "--json"});
  const auto four_json = call({"batch", big, "--parallel", "4", "--json"});
  CHECK(one_json.out == four_json.out);
}

TEST_CASE("edge-critical catalog scan") {
  TempDir dir;
  std::string text;
  std::map<int, int> expected;
  int total = 0;
  for (const auto& g : corpus::connected_graphs(6)) {
    text += vnum::to_graph6(g) + "\n";
    if (oracle::edge_critical(g)) {
      ++expected[g.vertex_count()];
      if (g.vertex_count() >= 2) ++total;
    }
  }
  text += vnum::to_graph6(vnum::Graph(3, {{0, 1}})) + "\n";
  const auto r = call({"catalog-verify", "--edge-critical", dir.write("cat.g6", text), "--parallel", "3"});
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  CHECK(lines.front() == "vertices\tconnected_graphs\tedge_critical");
  for (const auto& line : lines) {
    const auto cells = split(line, '\t');
    if (cells.size() == 3 && cells[0] != "vertices") CHECK(std::stoi(cells[2]) == expected[std::stoi(cells[0])]);
  }
  CHECK(r.out.find("edge_critical_total_at_least_2_vertices\t" + std::to_string(total) + "\n") != std::string::npos);
  CHECK(r.out.find("skipped_disconnected\t1\n") != std::string::npos);

  const auto empty = call({"catalog-verify", "--edge-critical", dir.write("empty.g6", "")});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("edge_critical_total_at_least_2_vertices\t0\n") != std::string::npos);

  CHECK(call({"catalog-verify", "--edge-critical", dir.write("junk.g6", "A_\n!!\n")}).code == 1);
  CHECK(call({"catalog-verify"}).code == 1);
  CHECK(call({"catalog-verify", "--table", "other"}).code == 1);
}

TEST_CASE("thread count") {
  ::unsetenv("VNUM_THREADS");
  CHECK(vnum::cli::effective_threads(3) == 3);
  CHECK(vnum::cli::effective_threads(0) == 1);
  ::setenv("VNUM_THREADS", "5", 1);
  CHECK(vnum::cli::effective_threads(3) == 5);
  ::setenv("VNUM_THREADS", "zero", 1);
  CHECK(vnum::cli::effective_threads(2) == 2);
  ::unsetenv("VNUM_THREADS");
  CHECK(vnum::cli::parse_fields("both").size() == 2);
}
