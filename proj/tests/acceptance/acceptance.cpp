// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "relbgg/absolute.hpp"
#include "relbgg/cli.hpp"
#include "relbgg/complex.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace relbgg;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

Weight W(std::initializer_list<long> xs) {
  Weight w(xs.size());
  std::size_t i = 0;
  for (long x : xs) w[i++] = Rational(x);
  return w;
}

RootSystem algebra(const std::string& s) { return RootSystem(parse_algebra(s)); }

ParabolicPair pair_of(const std::string& p, const std::string& q, const RootSystem& rs) {
  return ParabolicPair(parse_nodes(p, rs.rank()), parse_nodes(q, rs.rank()));
}

std::vector<std::string> words(const std::vector<WeylElement>& els) {
  std::vector<std::string> out;
  for (const auto& w : els) out.push_back(w.str());
  return out;
}

std::vector<Weight> nus(const std::vector<HomologyEntry>& es) {
  std::vector<Weight> out;
  for (const auto& e : es) out.push_back(e.nu);
  return out;
}

std::mt19937_64 rng(20261015);

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// criterion 1: relative orbit for A3, p={1}, q={1,2}
Outcome relative_example() {
  Outcome o;
  const auto rs = algebra("A3");
  const auto pair = pair_of("1", "1,2", rs);
  const auto wqp = relative_hasse(pair, rs);
  if (words(wqp) != std::vector<std::string>{"e", "s2", "s2 s3"}) o.fail("W^q_p has " + std::to_string(wqp.size()) + " elements");

  std::set<Weight> orb;
  for (const auto& pt : orbit(W({0, 1, 0}), {1, 2}, rs)) orb.insert(pt.weight);
  if (orb != std::set<Weight>{W({0, 1, 0}), W({1, -1, 1}), W({1, 0, -1})}) o.fail("W_p-orbit of (0,1,0)");

  for (int n = 0; n < 100; ++n) {
    const long a = uniform(-20, 20), b = uniform(0, 20), c = uniform(0, 20);
    const std::vector<Weight> want{W({a, b, c}), W({a + b + 1, -b - 2, b + c + 1}), W({a + b + c + 2, -b - c - 3, b})};
    if (nus(relative_homology(W({a, b, c}), pair, rs, wqp)) != want) o.fail("orbit of " + W({a, b, c}).str());
  }
  return o;
}

// criterion 2: W^p, |W^q|, absolute orbit and the singular patterns
Outcome absolute_example() {
  Outcome o;
  const auto rs = algebra("A3");
  const auto pair = pair_of("1", "1,2", rs);
  const auto wp = hasse(pair.sigma_p, rs);
  if (words(wp) != std::vector<std::string>{"e", "s1", "s1 s2", "s1 s2 s3"}) o.fail("W^p");
  if (hasse(pair.sigma_q, rs).size() != 12) o.fail("|W^q| != 12");

  for (int n = 0; n < 100; ++n) {
    const long a = uniform(0, 20), b = uniform(0, 20), c = uniform(0, 20);
    const std::vector<Weight> want{W({a, b, c}), W({-a - 2, a + b + 1, c}), W({-a - b - 3, a, b + c + 1}),
                                   W({-a - b - c - 4, a, b})};
    if (nus(absolute_homology(W({a, b, c}), pair.sigma_p, rs)) != want) o.fail("W^p-orbit of " + W({a, b, c}).str());
  }

  const auto wqp = relative_hasse(pair, rs);
  for (int n = 0; n < 100; ++n) {
    const long a = uniform(0, 20), b = uniform(0, 20);
    const std::vector<std::vector<Weight>> patterns{
        {W({-1, a, b}), W({a, -a - 2, a + b + 1}), W({a + b + 1, -a - b - 3, a})},
        {W({-a - 2, a, b}), W({-1, -a - 2, a + b + 1}), W({b, -a - b - 3, a})},
        {W({-a - b - 3, a, b}), W({-b - 2, -a - 2, a + b + 1}), W({-1, -a - b - 3, a})},
    };
    for (const auto& want : patterns) {
      const auto rep = singular_patterns(want[0], pair, rs);
      if (nus(rep.entries) != want) o.fail("singular pattern from " + want[0].str());
      if (rep.walls.empty()) o.fail(want[0].str() + " is not singular");
    }
  }
  return o;
}

// criterion 3: W^q_p x W^p -> W^q for every nested pair in rank <= 4
Outcome product_decomposition(std::size_t& pairs) {
  Outcome o;
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"}) {
    const auto rs = algebra(name);
    const std::uint64_t full = (1ull << rs.rank()) - 1;
    for (std::uint64_t q = 0; q <= full; ++q) {
      const NodeSet sq(q);
      const auto wq = hasse(sq, rs);
      std::set<Weight> target;
      for (const auto& w : wq) target.insert(w.delta_image());
      for (std::uint64_t p = q;; p = (p - 1) & q) {
        const ParabolicPair pair(NodeSet(p), sq);
        ++pairs;
        const auto wqp = relative_hasse(pair, rs);
        const auto wp = hasse(pair.sigma_p, rs);
        std::set<Weight> hit;
        for (const auto& w1 : wqp)
          for (const auto& w2 : wp) {
            const auto w = multiply(w1, w2, rs);
            if (w.length() != w1.length() + w2.length())
              o.fail(std::string(name) + ": length not additive for " + w1.str() + " * " + w2.str());
            hit.insert(w.delta_image());
          }
        if (wqp.size() * wp.size() != wq.size() || hit != target)
          o.fail(std::string(name) + " p=" + pair.sigma_p.str() + " q=" + sq.str() + ": not a bijection");
        if (p == 0) break;
      }
    }
  }
  return o;
}

struct PairCase {
  std::string algebra, p, q;
};

const std::vector<PairCase> kPairs{{"A3", "1", "1,2"}, {"A3", "2", "1,2"}, {"B2", "1", "1,2"}};

// criterion 4: factorized table versus Kostant for q
Outcome factorized_equals_absolute() {
  Outcome o;
  for (const auto& pc : kPairs) {
    const auto rs = algebra(pc.algebra);
    const auto pair = pair_of(pc.p, pc.q, rs);
    for (int n = 0; n < 10; ++n) {
      Weight lambda(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i) lambda[i] = Rational(uniform(0, 6));
      if (factorized_homology(lambda, pair, rs).flatten() != flatten(absolute_homology(lambda, pair.sigma_q, rs)))
        o.fail(pc.algebra + " lambda=" + lambda.str());
    }
  }
  return o;
}

// criterion 5: each w.lambda occurs once in Lambda^l(w)(q+/p+) (x) V, counted by Freudenthal
Outcome multiplicity_one() {
  Outcome o;
  for (const auto& pc : kPairs) {
    const auto rs = algebra(pc.algebra);
    const auto pair = pair_of(pc.p, pc.q, rs);
    const Weight dp = delta_p(pair, rs);
    const auto wqp = relative_hasse(pair, rs);
    for (int n = 0; n < 10; ++n) {
      Weight lambda(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i)
        lambda[i] = Rational(pair.sigma_p.contains(i) ? uniform(-5, 5) : uniform(0, 3));
      for (const auto& w : wqp) {
        const Weight nu = affine_action(w, lambda, dp, rs);
        const long long m = chain_multiplicity(nu, w.length(), lambda, pair, rs);
        if (m != 1)
          o.fail(pc.algebra + " lambda=" + lambda.str() + " w=" + w.str() + " multiplicity " + std::to_string(m));
      }
    }
  }
  return o;
}

// criterion 6: explicit relative complexes
Outcome explicit_complex() {
  Outcome o;
  const std::vector<std::pair<std::string, Weight>> cases{
      {"A2", W({0, 0})}, {"A2", W({1, 0})}, {"A2", W({1, 1})}, {"A3", W({0, 0, 0})}, {"A3", W({1, 0, 0})}};
  for (const auto& [name, lambda] : cases) {
    const auto rs = algebra(name);
    const ChevalleyBasis cb(rs);
    const RelativeComplex rc(cb, lambda, pair_of("1", "1,2", rs));
    const auto rep = verify_complex(rc);
    std::cout << "  " << name << " " << rep.instance << ":";
    for (const auto& c : rep.checks) std::cout << " " << c.name << "=" << (c.ok ? "ok" : "FAIL");
    std::cout << "\n";
    for (const auto& c : rep.checks)
      if (!c.ok) {
        std::cout << "    " << c.name << ": " << c.details << "\n";
        o.fail(name + " " + rep.instance + " " + c.name);
      }
  }
  return o;
}

// criterion 7: filtration, bigrading and the projections Pi
Outcome absolute_complex() {
  Outcome o;
  const auto rs = algebra("A3");
  const ChevalleyBasis cb(rs);
  const auto pair = pair_of("1", "1,2", rs);
  for (const auto& lambda : {W({0, 0, 0}), W({1, 0, 0})}) {
    const AbsoluteComplex ac(cb, lambda, pair);
    if (ac.pplus_count() != 3) o.fail("r = " + std::to_string(ac.pplus_count()));
    for (std::size_t k = 0; k <= ac.top(); ++k)
      if (!filtration(ac, ac.pplus_count() + 1, k).is_zero()) o.fail("F^{r+1} != 0");
    const auto rep = verify_absolute(ac);
    std::vector<ProjectionCell> cells;
    const auto proj = check_projection(ac, &cells);
    std::map<std::pair<std::size_t, std::size_t>, int> signs;
    for (const auto& c : cells)
      if (c.sign != 0) signs[{c.k - c.l, c.l}] = c.sign;
    std::cout << "  " << rep.instance << ":";
    for (const auto& c : rep.checks) std::cout << " " << c.name << "=" << (c.ok ? "ok" : "FAIL");
    std::cout << " signs";
    for (const auto& [jl, s] : signs) std::cout << " (" << jl.first << "," << jl.second << "):" << (s > 0 ? "+" : "-");
    std::cout << "\n";
    for (const auto& c : rep.checks)
      if (!c.ok) o.fail(rep.instance + " " + c.name + ": " + c.details);
    if (!proj.ok) o.fail(proj.details);
  }
  return o;
}

std::string run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (rc != 0) throw std::runtime_error(args[0] + " exited " + std::to_string(rc) + ": " + err.str());
  return out.str();
}

// criterion 8: the worked example again, end to end through the CLI
Outcome example_via_cli() {
  Outcome o;
  auto rel = nlohmann::json::parse(
      run_cli({"relative-hasse", "-a", "A3", "--p", "1", "--q", "1,2", "-f", "json"}));
  std::vector<std::string> ws;
  for (const auto& e : rel["elements"]) ws.push_back(e["word"]);
  if (ws != std::vector<std::string>{"e", "s2", "s2 s3"}) o.fail("relative-hasse");

  auto hom = nlohmann::json::parse(
      run_cli({"homology", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "0,0,0", "-f", "json"}));
  std::vector<Weight> got;
  for (const auto& e : hom["entries"]) got.push_back(cli::weight_from_json(e["nu"]));
  if (got != std::vector<Weight>{W({0, 0, 0}), W({1, -2, 1}), W({2, -3, 0})}) o.fail("homology");

  if (nlohmann::json::parse(run_cli({"hasse", "-a", "A3", "--q", "1,2", "-f", "json"}))["elements"].size() != 12)
    o.fail("hasse size");
  if (nlohmann::json::parse(run_cli({"hasse", "-a", "A3", "--q", "2", "-f", "json"}))["elements"].size() != 6)
    o.fail("W^p~ size");
  if (words(relative_hasse(pair_of("2", "1,2", algebra("A3")), algebra("A3"))) !=
      std::vector<std::string>{"e", "s1"})
    o.fail("W^q_p~");

  auto fac = nlohmann::json::parse(
      run_cli({"factorized", "-a", "A3", "--p", "1", "--q", "1,2", "-l", "1,0,0", "-f", "json"}));
  if (fac.value("matches_absolute", false) != true) o.fail("factorized");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::size_t pairs = 0;
  std::vector<Criterion> crits{
      {1, "relative orbit example", 1, relative_example},
      {2, "absolute orbit and singular patterns", 1, absolute_example},
      {3, "product decomposition, rank <= 4", 30, [&] { return product_decomposition(pairs); }},
      {4, "factorized equals absolute homology", 10, factorized_equals_absolute},
      {5, "multiplicity one", 60, multiplicity_one},
      {6, "explicit relative complex", 120, explicit_complex},
      {7, "absolute complex and projections", 300, absolute_complex},
      {8, "worked example through the CLI", 10, example_via_cli},
  };
  bool all = true;
  for (const auto& c : crits) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.what << ") " << std::fixed
              << std::setprecision(3) << s << "s";
    if (c.id == 3) std::cout << " pairs=" << pairs;
    if (!o.ok) std::cout << " : " << o.note;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
