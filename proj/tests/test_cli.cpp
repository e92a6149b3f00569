#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "twistnf/cli.hpp"

using namespace twistnf;

namespace {

std::string fixture(const std::string& name) { return std::string(TWISTNF_FIXTURES) + "/" + name; }

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "twistnf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("twistnf_test_" + name)).string();
}

}  // namespace

TEST_CASE("bounds") {
  auto r = cli({"bounds", "--tetrahedra", "1", "--symbolic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("elementary_moves 2^134\n") != std::string::npos);
  CHECK(r.out.find("disc_count_total 2^130\n") != std::string::npos);
  CHECK(r.err.empty());
  auto one = cli({"bounds", "--crossings", "1"});
  CHECK(one.code == 0);
  CHECK(one.out.find("status exception at n = 1") != std::string::npos);
  auto two = cli({"bounds", "--crossings", "2", "--bit-cap", "0"});
  CHECK(two.code == 0);
  CHECK(two.out.find("chain_closes 1") != std::string::npos);
  CHECK(cli({"bounds"}).code == 1);
  CHECK(cli({"bounds", "--tetrahedra", "0"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"tables", "--bogus"}).code == 1);
  CHECK(cli({"tables", "--format", "xml"}).code == 1);
  auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("glue <i> <f> <j> <g> <a> <b> <c>") != std::string::npos);
}

TEST_CASE("tables") {
  auto r = cli({"tables"});
  CHECK(r.out.find("Twisted normal disc types") != std::string::npos);
  CHECK(r.out.find("Normal disc types in truncated tetrahedra") != std::string::npos);
  CHECK(r.out.find("note: two marked edges") != std::string::npos);
  auto csv = cli({"tables", "--format", "csv"});
  CHECK(csv.out.rfind("type,ours,ref,status\n", 0) == 0);
  CHECK(csv.out.find("four marked vertices,59,59,PASS") != std::string::npos);
}

TEST_CASE("enumerate") {
  auto r = cli({"enumerate", "--type", "unmarked", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("index,encoding,family,sides,truncated\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
  auto q = cli({"enumerate", "--type", "unmarked", "--family", "quad"});
  CHECK(std::count(q.out.begin(), q.out.end(), '\n') == 4);
  auto two = cli({"enumerate", "--type", "two-edges"});
  CHECK(two.code == 0);
  CHECK(two.err.find("note: two marked edges") != std::string::npos);
  CHECK(cli({"enumerate", "--type", "five-vertices"}).code == 1);
  CHECK(cli({"enumerate", "--type", "unmarked", "--family", "blob"}).code == 1);
}

TEST_CASE("matching then hilbert") {
  auto m = cli({"matching", fixture("two_unmarked.tri")});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("vars 14\n", 0) == 0);
  auto sys = temp_path("two.sys");
  std::ofstream(sys) << m.out;
  CHECK(cli({"hilbert", sys}).code == 1);  // 'var' lines need the triangulation
  auto h = cli({"hilbert", sys, "--triangulation", fixture("two_unmarked.tri"), "--serial"});
  CHECK(h.code == 0);
  CHECK(!h.out.empty());
  std::remove(sys.c_str());

  auto bad = cli({"matching", fixture("bad_two_edges.tri")});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("two marked edges in face 012") != std::string::npos);
  CHECK(cli({"matching", fixture("missing.tri")}).code == 1);
}

TEST_CASE("hilbert") {
  auto r = cli({"hilbert", fixture("small.sys")});
  CHECK(r.code == 0);
  CHECK(r.out == "2 0 1\n1 1 1\n0 2 1\n");
  auto capped = cli({"hilbert", fixture("small.sys"), "--max-candidates", "1"});
  CHECK(capped.code == 2);
  CHECK(capped.out.empty());
}

TEST_CASE("search") {
  auto vec = temp_path("winner.vec");
  auto r = cli({"search", fixture("square_unknot.tri"), "--emit-vector", vec});
  CHECK(r.code == 0);
  CHECK(r.out.find("candidate 0 weight 1 euler 1 compatible 1 boundary_restricted 1 spans 1 "
                   "fundamental 1 within_bound 1") != std::string::npos);
  std::ifstream in(vec);
  std::string line;
  std::getline(in, line);
  std::istringstream ls(line);
  int n = 0, ones = 0;
  for (int x; ls >> x; ++n) ones += x == 1;
  CHECK(n == 48);
  CHECK(ones == 4);
  std::remove(vec.c_str());
  CHECK(cli({"search", fixture("two_unmarked.tri")}).code == 1);
}

TEST_CASE("collapse and validate") {
  auto r = cli({"collapse", fixture("fan5.disc")});
  CHECK(r.code == 0);
  CHECK(r.out.find("final 0 5 6") != std::string::npos);
  auto cert = temp_path("fan5.cert");
  std::ofstream(cert) << r.out;
  auto ok = cli({"collapse", fixture("fan5.disc"), "--validate", cert});
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");
  std::ofstream(cert) << "initial 0 1 2 3 4 5 6\nslide 0 1 2\nfinal 0 5 6\n";
  auto bad = cli({"collapse", fixture("fan5.disc"), "--validate", cert});
  CHECK(bad.code == 1);
  CHECK(!bad.err.empty());
  std::remove(cert.c_str());
}
