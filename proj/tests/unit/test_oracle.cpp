#include <catch2/catch_amalgamated.hpp>

#include "relbgg/hwmodule.hpp"
#include "relbgg/oracle.hpp"
#include "support.hpp"

using namespace relbgg;
using test::W;
using test::algebra;

TEST_CASE("Weyl dimensions", "[oracle]") {
  const auto a2 = algebra("A2");
  CHECK(weyl_dimension(W({1, 1}), NodeSet(), a2) == 8);
  CHECK(weyl_dimension(W({3, 0}), NodeSet(), a2) == 10);
  CHECK(weyl_dimension(W({2, 1}), NodeSet(), a2) == 15);
  const auto g2 = algebra("G2");
  std::set<long long> fund{weyl_dimension(W({1, 0}), NodeSet(), g2), weyl_dimension(W({0, 1}), NodeSet(), g2)};
  CHECK(fund == std::set<long long>{7, 14});
  const auto b2 = algebra("B2");
  std::set<long long> fb{weyl_dimension(W({1, 0}), NodeSet(), b2), weyl_dimension(W({0, 1}), NodeSet(), b2)};
  CHECK(fb == std::set<long long>{4, 5});
  CHECK(weyl_dimension(W({0, 1, 0, 0}), NodeSet(), algebra("D4")) == 28);
  // Levi of A3 with node 1 crossed is gl1 x sl3
  CHECK(weyl_dimension(W({-5, 1, 0}), test::nodes("1", algebra("A3")), algebra("A3")) == 3);
}

TEST_CASE("Freudenthal agrees with the Weyl dimension", "[oracle]") {
  const std::vector<std::pair<const char*, Weight>> cases{
      {"A2", W({2, 1})}, {"B2", W({1, 1})}, {"C3", W({1, 0, 1})}, {"G2", W({1, 1})}, {"D4", W({1, 0, 0, 1})}, {"A3", W({1, 2, 0})}};
  for (const auto& [alg, lam] : cases) {
    const auto rs = algebra(alg);
    const auto m = freudenthal(lam, NodeSet(), rs);
    CHECK(total_multiplicity(m) == weyl_dimension(lam, NodeSet(), rs));
    // multiplicities are Weyl invariant
    for (const auto& [mu, k] : m)
      for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(m.at(rs.reflect(i, mu)) == k);
  }
}

TEST_CASE("adjoint of sl3 has zero weight of multiplicity two", "[oracle]") {
  const auto m = freudenthal(W({1, 1}), NodeSet(), algebra("A2"));
  CHECK(m.at(W({0, 0})) == 2);
  CHECK(m.size() == 7);
}

TEST_CASE("Freudenthal agrees with the explicit module", "[oracle]") {
  const std::vector<std::tuple<const char*, const char*, Weight>> cases{
      {"A2", "", W({1, 1})}, {"B2", "", W({1, 1})}, {"G2", "", W({1, 0})}, {"A3", "1", W({-2, 1, 1})},
      {"B3", "3", W({1, 1, 4})}, {"C3", "", W({0, 1, 0})}};
  for (const auto& [alg, sig, lam] : cases) {
    const auto rs = algebra(alg);
    const auto sigma = test::nodes(sig, rs);
    const auto mod = build_highest_weight_module(lam, sigma, rs);
    std::map<Weight, long long> counted;
    for (const auto& w : mod.weights) ++counted[w];
    CHECK(counted == freudenthal(lam, sigma, rs));
    // [E_i, F_j] = delta_ij H_i on the explicit module
    for (auto i : sigma.complement(rs.rank()))
      for (auto j : sigma.complement(rs.rank())) {
        const Matrix br = mod.E[i] * mod.F[j] - mod.F[j] * mod.E[i];
        CHECK(br == (i == j ? mod.H(i) : Matrix(mod.dim(), mod.dim())));
      }
  }
}

TEST_CASE("chain weights count dimensions", "[oracle]") {
  const auto rs = algebra("A3");
  const auto pr = test::pair("1", "1,2", rs);
  const Weight lam = W({0, 1, 1});
  const long long dv = weyl_dimension(lam, pr.sigma_p, rs);
  const std::size_t mid = partition(pr, rs).mid.size();
  const long long binom[] = {1, 2, 1};
  for (std::size_t k = 0; k <= mid; ++k) CHECK(total_multiplicity(chain_weights(k, lam, pr, rs)) == binom[k] * dv);
}

TEST_CASE("module size guard", "[oracle]") {
  CHECK_THROWS_AS(build_highest_weight_module(W({3, 3}), NodeSet(), algebra("A2"), 10), std::length_error);
  CHECK_THROWS_AS(freudenthal(W({-1, 0}), NodeSet(), algebra("A2")), std::invalid_argument);
}
