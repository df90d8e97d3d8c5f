#pragma once

#include "relbgg/parabolic.hpp"

#include <string>

namespace test {

inline relbgg::Weight W(std::initializer_list<long> xs) {
  relbgg::Weight w(xs.size());
  std::size_t i = 0;
  for (long x : xs) w[i++] = relbgg::Rational(x);
  return w;
}

inline relbgg::RootSystem algebra(const std::string& s) { return relbgg::RootSystem(relbgg::parse_algebra(s)); }

inline relbgg::NodeSet nodes(const std::string& s, const relbgg::RootSystem& rs) {
  return relbgg::parse_nodes(s, rs.rank());
}

inline relbgg::ParabolicPair pair(const std::string& p, const std::string& q, const relbgg::RootSystem& rs) {
  return relbgg::ParabolicPair(nodes(p, rs), nodes(q, rs));
}

inline std::vector<std::string> words(const std::vector<relbgg::WeylElement>& els) {
  std::vector<std::string> out;
  for (const auto& w : els) out.push_back(w.str());
  return out;
}

}  // namespace test
