#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace relbgg;
using test::W;
using test::algebra;
using test::words;

TEST_CASE("Hasse diagrams of A3", "[parabolic]") {
  const auto rs = algebra("A3");
  CHECK(words(hasse(test::nodes("1", rs), rs)) == std::vector<std::string>{"e", "s1", "s1 s2", "s1 s2 s3"});
  CHECK(hasse(test::nodes("1,2", rs), rs).size() == 12);
  CHECK(hasse(test::nodes("2", rs), rs).size() == 6);
  CHECK(hasse(test::nodes("1,2,3", rs), rs).size() == 24);
  CHECK(words(hasse(NodeSet(), rs)) == std::vector<std::string>{"e"});
}

TEST_CASE("relative Hasse diagrams", "[parabolic]") {
  const auto rs = algebra("A3");
  CHECK(words(relative_hasse(test::pair("1", "1,2", rs), rs)) == std::vector<std::string>{"e", "s2", "s2 s3"});
  CHECK(words(relative_hasse(test::pair("2", "1,2", rs), rs)) == std::vector<std::string>{"e", "s1"});
  CHECK(words(relative_hasse(test::pair("1", "1", rs), rs)) == std::vector<std::string>{"e"});
}

TEST_CASE("W^q_p is W^q intersected with W_p", "[parabolic]") {
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    const auto rs = algebra(name);
    const std::uint64_t full = (1ull << rs.rank()) - 1;
    for (std::uint64_t q = 0; q <= full; ++q)
      for (std::uint64_t p = q;; p = (p - 1) & q) {
        const ParabolicPair pr{NodeSet(p), NodeSet(q)};
        std::set<Weight> want;
        const auto wp = parabolic_subgroup(pr.sigma_p, rs);
        for (const auto& w : wp)
          if (in_hasse(w, pr.sigma_q, rs)) want.insert(w.delta_image());
        std::set<Weight> got;
        for (const auto& w : relative_hasse(pr, rs)) got.insert(w.delta_image());
        CHECK(got == want);
        if (p == 0) break;
      }
  }
}

TEST_CASE("coset count", "[parabolic]") {
  for (const char* name : {"A4", "B3", "D4", "G2"}) {
    const auto rs = algebra(name);
    const std::size_t order = enumerate_weyl_group(rs).size();
    for (std::uint64_t s = 0; s < (1ull << rs.rank()); ++s)
      CHECK(hasse(NodeSet(s), rs).size() * parabolic_subgroup(NodeSet(s), rs).size() == order);
  }
}

TEST_CASE("factorize recovers w", "[parabolic]") {
  const auto rs = algebra("B3");
  const auto pr = test::pair("1", "1,3", rs);
  for (const auto& w : hasse(pr.sigma_q, rs)) {
    const auto [w1, w2] = factorize(w, pr, rs);
    CHECK(in_hasse(w2, pr.sigma_p, rs));
    CHECK(w1.length() + w2.length() == w.length());
    CHECK(multiply(w1, w2, rs) == w);
  }
}

TEST_CASE("root partition", "[parabolic]") {
  const auto rs = algebra("A3");
  const auto part = partition(test::pair("1", "1,2", rs), rs);
  CHECK(part.q0.size() == 1);
  CHECK(part.mid.size() == 2);
  CHECK(part.pplus.size() == 3);
  CHECK(sigma_height(Root{1, 1, 1}, test::nodes("1,2", rs)) == 2);
}

TEST_CASE("levi delta", "[parabolic]") {
  // A3 with node 1 crossed: Levi roots a2, a3, a2+a3, half sum = a2 + a3
  const auto rs = algebra("A3");
  const Weight want = rs.root_weight(Root{0, 1, 1});
  CHECK(levi_delta(test::nodes("1", rs), rs) == want);
  CHECK(levi_delta(NodeSet(), rs) == delta(rs));
  CHECK(levi_delta(test::nodes("1,2,3", rs), rs).is_zero());
}

TEST_CASE("node parsing and nesting", "[parabolic]") {
  const auto rs = algebra("A3");
  CHECK(test::nodes("", rs).empty());
  CHECK(test::nodes("3,1", rs).members() == std::vector<std::size_t>{0, 2});
  CHECK_THROWS(test::nodes("4", rs));
  CHECK_THROWS(test::nodes("1,,2", rs));
  CHECK_THROWS(test::pair("1,2", "1", rs));
}
