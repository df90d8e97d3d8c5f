#pragma once

#include "relbgg/rootsys.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace relbgg {

/// Simple-reflection indices are 0-based internally and printed 1-based.
using Word = std::vector<std::size_t>;

/// w(lambda) for w = s_{word[0]} s_{word[1]} ... (rightmost acts first).
inline Weight apply_word(const Word& word, Weight w, const RootSystem& rs) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = rs.reflect(*it, w);
  return w;
}

inline std::string word_str(const Word& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) s += (k ? " s" : "s") + std::to_string(word[k] + 1);
  return s;
}

/// "s2 s3", "2,3", "e" or "" (identity).
inline Word parse_word(std::string_view text, std::size_t rank) {
  Word w;
  std::string tok;
  auto flush = [&] {
    if (tok.empty() || tok == "e") {
      tok.clear();
      return;
    }
    std::string digits = (tok[0] == 's' || tok[0] == 'S') ? tok.substr(1) : tok;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed Weyl word token '" + tok + "'");
    const auto i = std::stoul(digits);
    if (i < 1 || i > rank) throw std::invalid_argument("reflection index " + digits + " out of range");
    w.push_back(i - 1);
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '*') flush();
    else tok += c;
  }
  flush();
  return w;
}

/// A Weyl group element, stored through w(delta) which determines it.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(const RootSystem& rs) { return from_word({}, rs); }

  /// Canonicalizes an arbitrary (possibly non-reduced) word.
  static WeylElement from_word(const Word& word, const RootSystem& rs) {
    return from_delta_image(apply_word(word, delta(rs), rs), rs);
  }

  /// The element w with w(delta) = image.
  static WeylElement from_delta_image(const Weight& image, const RootSystem& rs) {
    WeylElement w;
    w.image_ = image;
    // Greedy smallest left descent gives the lex-smallest reduced word.
    Weight mu = image;
    for (;;) {
      std::size_t i = 0;
      while (i < rs.rank() && mu[i] >= 0) ++i;
      if (i == rs.rank()) break;
      w.word_.push_back(i);
      mu = rs.reflect(i, mu);
    }
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
      if (rs.coroot_pairing(image, k) < 0) w.phi_.push_back(k);
    if (w.phi_.size() != w.word_.size()) throw std::logic_error("length differs from |Phi_w|");
    return w;
  }

  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  /// Indices into rs.positive_roots() of Phi_w = {alpha > 0 : w^{-1} alpha < 0}.
  const std::vector<std::size_t>& phi() const { return phi_; }
  const Weight& delta_image() const { return image_; }
  bool is_identity() const { return word_.empty(); }

  Weight apply(const Weight& lambda, const RootSystem& rs) const { return apply_word(word_, lambda, rs); }

  WeylElement inverse(const RootSystem& rs) const { return from_word(Word(word_.rbegin(), word_.rend()), rs); }

  std::string str() const { return word_str(word_); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.image_ == b.image_; }

 private:
  Word word_;
  std::vector<std::size_t> phi_;
  Weight image_;
};

/// a * b (apply b first).
inline WeylElement multiply(const WeylElement& a, const WeylElement& b, const RootSystem& rs) {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return WeylElement::from_word(w, rs);
}

inline Weight apply(const WeylElement& w, const Weight& lambda, const RootSystem& rs) { return w.apply(lambda, rs); }

inline std::vector<Root> phi_set(const WeylElement& w, const RootSystem& rs) {
  std::vector<Root> out;
  for (auto k : w.phi()) out.push_back(rs.root(k));
  return out;
}

/// w(lambda + shift) - shift.
inline Weight affine_action(const WeylElement& w, const Weight& lambda, const Weight& shift, const RootSystem& rs) {
  return w.apply(lambda + shift, rs) - shift;
}

/// Action matrix of w on fundamental coordinates (column j = w(omega_j)).
inline Matrix action_matrix(const WeylElement& w, const RootSystem& rs) {
  const std::size_t n = rs.rank();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Weight img = w.apply(fundamental_weight(j, n), rs);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return m;
}

class OrbitCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t default_orbit_cap() {
  if (const char* env = std::getenv("RELBGG_ORBIT_CAP")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 10'000'000;
}

struct OrbitPoint {
  Weight weight;
  Word word;  // shortest word with word(lambda) = weight
};

/// Breadth-first orbit of lambda under the reflections in `gens` (0-based).
/// Points come out in BFS order, generators tried in increasing order.
inline std::vector<OrbitPoint> orbit(const Weight& lambda, const std::vector<std::size_t>& gens, const RootSystem& rs,
                                     std::size_t cap = default_orbit_cap()) {
  std::vector<OrbitPoint> pts{{lambda, {}}};
  std::unordered_map<Weight, std::size_t, WeightHash> seen{{lambda, 0}};
  for (std::size_t cur = 0; cur < pts.size(); ++cur) {
    for (auto i : gens) {
      if (pts[cur].weight[i] == 0) continue;
      Weight next = rs.reflect(i, pts[cur].weight);
      if (seen.count(next)) continue;
      if (pts.size() >= cap)
        throw OrbitCapExceeded("orbit size exceeds cap " + std::to_string(cap) + " (set RELBGG_ORBIT_CAP to raise it)");
      Word w{i};
      w.insert(w.end(), pts[cur].word.begin(), pts[cur].word.end());
      seen.emplace(next, pts.size());
      pts.push_back({std::move(next), std::move(w)});
    }
  }
  return pts;
}

/// All of W, sorted by length then canonical word.
inline std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, std::size_t cap = default_orbit_cap()) {
  std::vector<std::size_t> gens(rs.rank());
  std::iota(gens.begin(), gens.end(), 0);
  std::vector<WeylElement> out;
  for (const auto& p : orbit(delta(rs), gens, rs, cap)) out.push_back(WeylElement::from_delta_image(p.weight, rs));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word() < b.word();
  });
  return out;
}

/// Covering pairs (i, j) of indices into `elements`: l(w_j) = l(w_i) + 1 and
/// w_j w_i^{-1} is the reflection in a positive root.
inline std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const std::vector<WeylElement>& elements,
                                                                      const RootSystem& rs) {
  const Weight d = delta(rs);
  std::vector<Weight> reflection_images;
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    reflection_images.push_back(d - rs.coroot_pairing(d, k) * rs.root_weight(rs.root(k)));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const WeylElement inv = elements[i].inverse(rs);
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (elements[j].length() != elements[i].length() + 1) continue;
      const Weight img = multiply(elements[j], inv, rs).delta_image();
      if (std::find(reflection_images.begin(), reflection_images.end(), img) != reflection_images.end())
        edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace relbgg
