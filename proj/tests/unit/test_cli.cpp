#include <catch2/catch_amalgamated.hpp>

#include "relbgg/cli.hpp"
#include "support.hpp"

#include <cstdlib>
#include <sys/wait.h>

using namespace relbgg;
using test::W;
using test::algebra;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("relative-hasse text rows", "[cli]") {
  const auto r = run({"relative-hasse", "-a", "A3", "--p", "1", "--q", "1,2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls == std::vector<std::string>{"# A3  p: x-o-o  q: x-x-o", "e | 0", "s2 | 1", "s2 s3 | 2"});
}

TEST_CASE("homology table", "[cli]") {
  const auto r = run({"homology", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,0,0"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[3] == "1 | s2 | (1,-2,1) | 0");
  CHECK(ls[4] == "2 | s2 s3 | (2,-3,0) | 0");
}

TEST_CASE("homology JSON round trip", "[cli]") {
  const auto rs = algebra("B3");
  const auto r = run({"homology", "-a", "B3", "--p", "1", "--q", "1,3", "-l", "-3,1,2", "-f", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema"] == "relbgg.homology.v1");
  const auto want = relative_homology(W({-3, 1, 2}), test::pair("1", "1,3", rs), rs);
  REQUIRE(j["entries"].size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto e = cli::homology_entry_from_json(j["entries"][i], rs);
    CHECK(e.degree == want[i].degree);
    CHECK(e.word == want[i].word);
    CHECK(e.nu == want[i].nu);
    CHECK(cli::to_json(e) == j["entries"][i]);
  }
}

TEST_CASE("rational JSON encoding", "[cli]") {
  CHECK(cli::to_json(Rational(3)) == json(3));
  CHECK(cli::to_json(Rational(-1, 2)) == json("-1/2"));
  CHECK(cli::rational_from_json(json("-1/2")) == Rational(-1, 2));
  CHECK(cli::rational_from_json(json(4)) == 4);
}

TEST_CASE("factorized JSON round trip", "[cli]") {
  const auto rs = algebra("A3");
  const auto r = run({"factorized", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "1,0,0", "-f", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["matches_absolute"] == true);
  std::size_t n = 0;
  for (const auto& e : j["cells"]) {
    const auto fe = cli::factorized_entry_from_json(e, rs);
    CHECK(cli::to_json(fe) == e);
    CHECK(affine_action(multiply(fe.w1, fe.w2, rs), W({1, 0, 0}), delta(rs), rs) == fe.nu);
    ++n;
  }
  CHECK(n == 12);
}

TEST_CASE("output is deterministic", "[cli]") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"hasse", "-a", "B3", "--q", "1,3", "-f", "json"},
        std::vector<std::string>{"factorized", "-a", "A3", "--p", "2", "--q", "1,2", "-l", "1,1,0"},
        std::vector<std::string>{"dot", "-a", "A3", "--q", "1,2"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("DOT output", "[cli]") {
  const auto r = run({"hasse", "-a", "A3", "--q", "1,2", "-f", "dot"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  std::size_t labels = 0, edges = 0;
  for (const auto& l : lines(r.out)) {
    labels += l.find("[label=") != std::string::npos;
    edges += l.find("->") != std::string::npos;
  }
  CHECK(labels == 12);
  const auto rs = algebra("A3");
  CHECK(edges == bruhat_covers(hasse(test::nodes("1,2", rs), rs), rs).size());
}

TEST_CASE("crossed Dynkin diagrams", "[cli]") {
  CHECK(cli::crossed_dynkin(algebra("A3"), NodeSet::of({1, 2})) == "x-x-o");
  CHECK(cli::crossed_dynkin(algebra("B2"), NodeSet::of({2})) == "o--x");
  CHECK(cli::crossed_dynkin(algebra("G2"), NodeSet()) == "o---o");
  CHECK(cli::crossed_dynkin(algebra("D4"), NodeSet::of({1})) == "x-o-o o ; 2-4");
}

TEST_CASE("factorize and singular", "[cli]") {
  const auto f = run({"factorize", "-a", "A3", "--p", "1", "--q", "1,2", "-w", "s2 s1", "-f", "json"});
  REQUIRE(f.code == 0);
  const auto j = json::parse(f.out);
  CHECK(j["w1"] == "s2");
  CHECK(j["w2"] == "s1");
  CHECK(j["lengths"] == json::array({2, 1, 1}));
  const auto s = run({"singular", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "-1,2,3", "-f", "json"});
  REQUIRE(s.code == 0);
  CHECK(json::parse(s.out)["walls"].size() == 1);
}

TEST_CASE("verification commands", "[cli]") {
  CHECK(run({"verify-mult-one", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,0,0"}).code == cli::kOk);
  const auto ok = run({"verify-complex", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "1,0,0", "-f", "json"});
  CHECK(ok.code == cli::kOk);
  const auto j = json::parse(ok.out);
  for (const auto& c : j["checks"]) {
    INFO(c.dump());
    CHECK(c["status"] == "pass");
    CHECK(cli::to_json(cli::check_from_json(c)) == c);
  }
  // the Laplacian sign mismatch is reported, not hidden
  const auto bad = run({"verify-complex", "-a", "A2", "--p", "1", "--q", "1,2", "-l", "1,1"});
  CHECK(bad.code == cli::kVerificationFailed);
  CHECK(bad.out.find("FAIL laplacian_isotypic") != std::string::npos);
}

TEST_CASE("usage errors", "[cli]") {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"nosuch", "-a", "A3"},
      {"hasse"},
      {"hasse", "-a", "A3x", "--q", "1"},
      {"hasse", "-a", "A3", "--q", "5"},
      {"relative-hasse", "-a", "A3", "--p", "1,2", "--q", "1"},
      {"homology", "-a", "A3", "--p", "1", "--q", "1,2"},
      {"homology", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,-1,0"},
      {"homology", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,1/2,0"},
      {"homology", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,0"},
      {"factorize", "-a", "A3", "--p", "1", "--q", "1,2", "-w", "s3"},
      {"homology", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,0,0", "-f", "dot"},
      {"roots", "-a", "A3", "-f", "yaml"},
      {"verify-complex", "-a", "A4", "--p", "", "--q", "1,2,3,4", "-l", "0,6,6,6"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    INFO(r.err);
    CHECK(r.code == cli::kUsage);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("installed binary exit codes", "[cli]") {
  const std::string bin = RELBGG_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status("roots -a A2") == 0);
  CHECK(status("hasse -a A2") == 2);
  CHECK(status("verify-complex -a A2 --p 1 --q 1,2 -l 1,1") == 1);
}
