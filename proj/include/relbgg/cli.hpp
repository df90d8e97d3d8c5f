#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it with captured streams.

#include "relbgg/absolute.hpp"
#include "relbgg/complex.hpp"
#include "relbgg/homology.hpp"
#include "relbgg/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

namespace relbgg::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// A bad value for a named flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- JSON encoding -------------------------------------------------------

inline json to_json(const Rational& q) {
  if (is_integer(q)) return to_int64(q);
  return to_string(q);
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

inline json to_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w.c) a.push_back(to_json(x));
  return a;
}

inline Weight weight_from_json(const json& j) {
  Weight w;
  for (const auto& x : j) w.c.push_back(rational_from_json(x));
  return w;
}

inline json to_json(const Root& r) { return json(r); }

inline json to_json(const HomologyEntry& e) {
  return {{"k", e.degree}, {"word", e.word.str()}, {"nu", to_json(e.nu)}, {"gap", to_json(e.gap)}};
}

inline HomologyEntry homology_entry_from_json(const json& j, const RootSystem& rs) {
  HomologyEntry e;
  e.degree = j.at("k").get<std::size_t>();
  e.word = WeylElement::from_word(parse_word(j.at("word").get<std::string>(), rs.rank()), rs);
  e.nu = weight_from_json(j.at("nu"));
  e.gap = rational_from_json(j.at("gap"));
  return e;
}

inline json to_json(const FactorizedEntry& e) {
  return {{"i", e.i},           {"j", e.j},          {"w1", e.w1.str()}, {"w2", e.w2.str()},
          {"mu", to_json(e.mu)}, {"nu", to_json(e.nu)}};
}

inline FactorizedEntry factorized_entry_from_json(const json& j, const RootSystem& rs) {
  FactorizedEntry e;
  e.i = j.at("i").get<std::size_t>();
  e.j = j.at("j").get<std::size_t>();
  e.w1 = WeylElement::from_word(parse_word(j.at("w1").get<std::string>(), rs.rank()), rs);
  e.w2 = WeylElement::from_word(parse_word(j.at("w2").get<std::string>(), rs.rank()), rs);
  e.mu = weight_from_json(j.at("mu"));
  e.nu = weight_from_json(j.at("nu"));
  return e;
}

inline json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"status", c.ok ? "pass" : "fail"}, {"details", c.details}};
}

inline CheckResult check_from_json(const json& j) {
  return {j.at("name").get<std::string>(), j.at("status").get<std::string>() == "pass",
          j.at("details").get<std::string>()};
}

// ---- text helpers -----------------------------------------------------------

/// Dynkin diagram in node order, crossed nodes as x. Bonds between consecutive
/// nodes are drawn as one dash per bond; other bonds are listed after ';'.
inline std::string crossed_dynkin(const RootSystem& rs, const NodeSet& sigma) {
  const std::size_t n = rs.rank();
  std::string s;
  std::vector<std::string> extra;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const int bonds = rs.a(i - 1, i) * rs.a(i, i - 1);
      s += bonds == 0 ? std::string(" ") : std::string(static_cast<std::size_t>(bonds), '-');
    }
    s += sigma.contains(i) ? 'x' : 'o';
    for (std::size_t j = 0; j + 1 < i; ++j)
      if (rs.a(i, j) != 0) extra.push_back(std::to_string(j + 1) + "-" + std::to_string(i + 1));
  }
  if (!extra.empty()) {
    s += " ;";
    for (const auto& e : extra) s += " " + e;
  }
  return s;
}

inline std::string dot_graph(const std::string& name, const std::vector<WeylElement>& els, const RootSystem& rs) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < els.size(); ++i)
    os << "  n" << i << " [label=\"" << els[i].str() << "\"];\n";
  for (const auto& [a, b] : bruhat_covers(els, rs)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

// ---- request ----------------------------------------------------------------

struct Options {
  std::string algebra, p, q, lambda, word, gens, format = "text";
  bool has_p = false, has_q = false, has_lambda = false, has_word = false, has_gens = false;
};

struct Request {
  std::string command;
  CartanSpec spec;
  RootSystem rs;
  NodeSet sigma_p, sigma_q;
  Weight lambda;
  Options opt;
};

template <class F>
auto flag(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

inline Request make_request(const std::string& command, const Options& o) {
  const CartanSpec spec = flag("--algebra", [&] { return parse_algebra(o.algebra); });
  Request r{command, spec, build_root_system(spec), {}, {}, {}, o};
  const std::size_t n = r.rs.rank();
  if (o.has_p) r.sigma_p = flag("--p", [&] { return parse_nodes(o.p, n); });
  if (o.has_q) r.sigma_q = flag("--q", [&] { return parse_nodes(o.q, n); });
  if (o.has_p && o.has_q && !r.sigma_p.subset_of(r.sigma_q))
    throw UsageError("--p: crossed nodes {" + r.sigma_p.str() + "} are not contained in --q {" + r.sigma_q.str() + "}");
  if (o.has_lambda) {
    r.lambda = flag("--lambda", [&] { return parse_weight(o.lambda); });
    if (r.lambda.size() != n)
      throw UsageError("--lambda: expected " + std::to_string(n) + " coordinates, got " +
                       std::to_string(r.lambda.size()));
  }
  return r;
}

inline ParabolicPair pair_of(const Request& r) { return ParabolicPair(r.sigma_p, r.sigma_q); }

inline void require_lambda(const Request& r, const NodeSet& sigma, const char* what) {
  if (!r.opt.has_lambda) throw UsageError("--lambda: required for " + r.command);
  if (!r.lambda.is_integral()) throw UsageError("--lambda: " + r.lambda.str() + " is not integral");
  if (!is_dominant(r.lambda, sigma))
    throw UsageError("--lambda: " + r.lambda.str() + " is not " + what + "-dominant");
}

inline json header(const Request& r) {
  json j;
  j["schema"] = "relbgg." + r.command + ".v1";
  j["algebra"] = r.opt.algebra;
  if (r.opt.has_p) j["sigma_p"] = r.sigma_p.str();
  if (r.opt.has_q) j["sigma_q"] = r.sigma_q.str();
  if (r.opt.has_lambda) j["lambda"] = to_json(r.lambda);
  return j;
}

inline void text_header(const Request& r, std::ostream& out) {
  out << "# " << r.opt.algebra;
  if (r.opt.has_p) out << "  p: " << crossed_dynkin(r.rs, r.sigma_p);
  if (r.opt.has_q) out << "  q: " << crossed_dynkin(r.rs, r.sigma_q);
  if (r.opt.has_lambda) out << "  lambda: " << r.lambda.str();
  out << "\n";
}

// ---- commands ---------------------------------------------------------------

inline int cmd_roots(const Request& r, std::ostream& out) {
  const auto& rs = r.rs;
  if (r.opt.format == "json") {
    json j = header(r);
    j["rank"] = rs.rank();
    json cm = json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < rs.rank(); ++k) row.push_back(rs.a(i, k));
      cm.push_back(row);
    }
    j["cartan"] = cm;
    j["delta"] = to_json(delta(rs));
    json roots = json::array();
    for (const auto& a : rs.positive_roots()) roots.push_back({{"root", a}, {"height", rs.height(a)}});
    j["positive_roots"] = roots;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "# " << r.opt.algebra << "  " << crossed_dynkin(rs, r.sigma_q) << "\n";
  out << "rank " << rs.rank() << ", " << rs.num_positive() << " positive roots, delta " << delta(rs).str() << "\n";
  out << "cartan\n";
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    out << " ";
    for (std::size_t k = 0; k < rs.rank(); ++k) out << " " << std::setw(2) << rs.a(i, k);
    out << "\n";
  }
  for (const auto& a : rs.positive_roots()) out << rs.height(a) << " | " << root_str(a) << "\n";
  return kOk;
}

inline int emit_elements(const Request& r, const std::vector<WeylElement>& els, const std::string& name,
                         std::ostream& out) {
  if (r.opt.format == "dot") {
    out << dot_graph(name, els, r.rs);
    return kOk;
  }
  if (r.opt.format == "json") {
    json j = header(r);
    json a = json::array();
    for (const auto& w : els) a.push_back({{"word", w.str()}, {"length", w.length()}, {"delta_image", to_json(w.delta_image())}});
    j["elements"] = a;
    out << j.dump(2) << "\n";
    return kOk;
  }
  text_header(r, out);
  for (const auto& w : els) out << w.str() << " | " << w.length() << "\n";
  return kOk;
}

inline int cmd_hasse(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for hasse");
  return emit_elements(r, hasse(r.sigma_q, r.rs), "Hasse", out);
}

inline int cmd_relative_hasse(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for relative-hasse");
  return emit_elements(r, relative_hasse(pair_of(r), r.rs), "RelativeHasse", out);
}

inline int cmd_dot(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for dot");
  const auto els = r.opt.has_p ? relative_hasse(pair_of(r), r.rs) : hasse(r.sigma_q, r.rs);
  out << dot_graph(r.opt.has_p ? "RelativeHasse" : "Hasse", els, r.rs);
  return kOk;
}

inline int cmd_factorize(const Request& r, std::ostream& out) {
  if (!r.opt.has_word) throw UsageError("--word: required for factorize");
  if (!r.opt.has_q) throw UsageError("--q: required for factorize");
  const auto w = WeylElement::from_word(flag("--word", [&] { return parse_word(r.opt.word, r.rs.rank()); }), r.rs);
  if (!in_hasse(w, r.sigma_q, r.rs)) throw UsageError("--word: " + w.str() + " is not in the Hasse diagram of q");
  const auto [w1, w2] = factorize(w, pair_of(r), r.rs);
  if (r.opt.format == "json") {
    json j = header(r);
    j["w"] = w.str();
    j["w1"] = w1.str();
    j["w2"] = w2.str();
    j["lengths"] = {w.length(), w1.length(), w2.length()};
    out << j.dump(2) << "\n";
    return kOk;
  }
  text_header(r, out);
  out << "w  = " << w.str() << " | " << w.length() << "\n";
  out << "w1 = " << w1.str() << " | " << w1.length() << "\n";
  out << "w2 = " << w2.str() << " | " << w2.length() << "\n";
  return kOk;
}

inline int cmd_orbit(const Request& r, std::ostream& out) {
  if (!r.opt.has_lambda) throw UsageError("--lambda: required for orbit");
  std::vector<std::size_t> gens;
  if (r.opt.has_gens) gens = flag("--gens", [&] { return parse_nodes(r.opt.gens, r.rs.rank()).members(); });
  else if (r.opt.has_p) gens = r.sigma_p.complement(r.rs.rank());
  else
    for (std::size_t i = 0; i < r.rs.rank(); ++i) gens.push_back(i);
  const auto pts = orbit(r.lambda, gens, r.rs);
  if (r.opt.format == "json") {
    json j = header(r);
    json a = json::array();
    for (const auto& p : pts) a.push_back({{"weight", to_json(p.weight)}, {"word", word_str(p.word)}});
    j["orbit"] = a;
    out << j.dump(2) << "\n";
    return kOk;
  }
  text_header(r, out);
  for (const auto& p : pts) out << p.weight.str() << " | " << word_str(p.word) << "\n";
  return kOk;
}

inline int emit_entries(const Request& r, const std::vector<HomologyEntry>& es, std::ostream& out, json extra = {}) {
  if (r.opt.format == "json") {
    json j = header(r);
    json a = json::array();
    for (const auto& e : es) a.push_back(to_json(e));
    j["entries"] = a;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << "\n";
    return kOk;
  }
  text_header(r, out);
  out << "k | w | nu | gap\n";
  for (const auto& e : es) out << e.degree << " | " << e.word.str() << " | " << e.nu.str() << " | " << e.gap.str() << "\n";
  return kOk;
}

inline int cmd_homology(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for homology");
  require_lambda(r, r.sigma_p, "p");
  return emit_entries(r, relative_homology(r.lambda, pair_of(r), r.rs), out);
}

inline int cmd_singular(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for singular");
  require_lambda(r, r.sigma_p, "p");
  const auto rep = singular_patterns(r.lambda, pair_of(r), r.rs);
  json walls = json::array();
  for (auto k : rep.walls) walls.push_back(r.rs.root(k));
  if (r.opt.format == "json") return emit_entries(r, rep.entries, out, {{"walls", walls}});
  emit_entries(r, rep.entries, out);
  out << "walls:";
  if (rep.walls.empty()) out << " none (regular)";
  for (auto k : rep.walls) out << " " << root_str(r.rs.root(k));
  out << "\n";
  return kOk;
}

inline int cmd_factorized(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for factorized");
  require_lambda(r, NodeSet(), "g");
  const auto table = factorized_homology(r.lambda, pair_of(r), r.rs);
  const auto absolute = flatten(absolute_homology(r.lambda, r.sigma_q, r.rs));
  const bool agrees = table.flatten() == absolute;
  if (r.opt.format == "json") {
    json j = header(r);
    json cells = json::array();
    for (const auto& [ij, es] : table.cells)
      for (const auto& e : es) cells.push_back(to_json(e));
    j["cells"] = cells;
    j["matches_absolute"] = agrees;
    out << j.dump(2) << "\n";
  } else {
    text_header(r, out);
    out << "(i,j) | w1 | w2 | mu | nu\n";
    for (const auto& [ij, es] : table.cells)
      for (const auto& e : es)
        out << "(" << e.i << "," << e.j << ") | " << e.w1.str() << " | " << e.w2.str() << " | " << e.mu.str() << " | "
            << e.nu.str() << "\n";
    out << "matches absolute homology: " << (agrees ? "yes" : "no") << "\n";
  }
  return agrees ? kOk : kVerificationFailed;
}

inline int cmd_verify_mult_one(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for verify-mult-one");
  require_lambda(r, r.sigma_p, "p");
  const auto pair = pair_of(r);
  bool ok = true;
  json rows = json::array();
  std::ostringstream text;
  for (const auto& e : relative_homology(r.lambda, pair, r.rs)) {
    const long long m = chain_multiplicity(e.nu, e.degree, r.lambda, pair, r.rs);
    ok = ok && m == 1;
    rows.push_back({{"k", e.degree}, {"word", e.word.str()}, {"nu", to_json(e.nu)}, {"multiplicity", m}});
    text << e.degree << " | " << e.word.str() << " | " << e.nu.str() << " | " << m << "\n";
  }
  if (r.opt.format == "json") {
    json j = header(r);
    j["entries"] = rows;
    j["status"] = ok ? "pass" : "fail";
    out << j.dump(2) << "\n";
  } else {
    text_header(r, out);
    out << "k | w | nu | multiplicity\n" << text.str() << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_verify_complex(const Request& r, std::ostream& out) {
  if (!r.opt.has_q) throw UsageError("--q: required for verify-complex");
  require_lambda(r, r.sigma_p, "p");
  const auto pair = pair_of(r);
  const ChevalleyBasis cb(r.rs);
  std::vector<CheckResult> checks;
  try {
    const RelativeComplex rc(cb, r.lambda, pair);
    for (auto& c : verify_complex(rc).checks) checks.push_back(std::move(c));
    if (is_dominant(r.lambda, NodeSet())) {
      const AbsoluteComplex ac(cb, r.lambda, pair);
      for (auto& c : verify_absolute(ac).checks) {
        c.name = "absolute_" + c.name;
        checks.push_back(std::move(c));
      }
    }
  } catch (const std::length_error& e) {
    throw UsageError(std::string("--lambda: instance too large: ") + e.what());
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
  const std::string instance = r.opt.algebra + " p={" + pair.sigma_p.str() + "} q={" + pair.sigma_q.str() +
                               "} lambda=" + r.lambda.str();
  if (r.opt.format == "json") {
    json j = header(r);
    j["instance"] = instance;
    json a = json::array();
    for (const auto& c : checks) a.push_back(to_json(c));
    j["checks"] = a;
    out << j.dump(2) << "\n";
  } else {
    text_header(r, out);
    for (const auto& c : checks)
      out << (c.ok ? "PASS " : "FAIL ") << c.name << (c.details.empty() ? "" : ": " + c.details) << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

inline const std::vector<std::pair<std::string, std::string>>& commands() {
  static const std::vector<std::pair<std::string, std::string>> c = {
      {"roots", "positive roots, Cartan matrix and delta"},
      {"hasse", "Hasse diagram W^q"},
      {"relative-hasse", "relative Hasse diagram W^q_p"},
      {"factorize", "split w in W^q as w1 w2 with w1 in W^q_p, w2 in W^p"},
      {"orbit", "Weyl orbit of --lambda under simple reflections"},
      {"homology", "relative homology H_*(q+/p+, V) via the affine orbit"},
      {"factorized", "bigraded table from the product decomposition"},
      {"singular", "relative homology plus the walls containing lambda+delta"},
      {"verify-complex", "explicit chain complex checks"},
      {"verify-mult-one", "brute-force multiplicity of the orbit weights in the chain spaces"},
      {"dot", "Bruhat covers of the (relative) Hasse diagram as DOT"},
  };
  return c;
}

inline int dispatch(const Request& r, std::ostream& out) {
  static const std::map<std::string, std::function<int(const Request&, std::ostream&)>> table = {
      {"roots", cmd_roots},          {"hasse", cmd_hasse},         {"relative-hasse", cmd_relative_hasse},
      {"factorize", cmd_factorize},  {"orbit", cmd_orbit},         {"homology", cmd_homology},
      {"factorized", cmd_factorized}, {"singular", cmd_singular},  {"verify-complex", cmd_verify_complex},
      {"verify-mult-one", cmd_verify_mult_one}, {"dot", cmd_dot},
  };
  return table.at(r.command)(r, out);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Kostant homology and Weyl group combinatorics for nested parabolics", "relbgg"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;
  for (const auto& [name, help] : commands()) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--algebra,-a", o.algebra, "Dynkin type (A3, B2xA1) or Cartan matrix as JSON")->required();
    sub->add_option("--p", o.p, "crossed nodes of p, 1-based, e.g. 1");
    sub->add_option("--q", o.q, "crossed nodes of q, 1-based, e.g. 1,2");
    sub->add_option("--lambda,-l", o.lambda, "weight in fundamental coordinates, e.g. 0,1,0");
    sub->add_option("--word,-w", o.word, "Weyl word, e.g. \"s2 s3\"");
    sub->add_option("--gens", o.gens, "orbit generators, 1-based");
    sub->add_option("--format,-f", o.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    o.has_p = sub->count("--p") > 0;
    o.has_q = sub->count("--q") > 0;
    o.has_lambda = sub->count("--lambda") > 0;
    o.has_word = sub->count("--word") > 0;
    o.has_gens = sub->count("--gens") > 0;
  }
  if (o.format == "dot" && chosen != "hasse" && chosen != "relative-hasse" && chosen != "dot") {
    err << "error: --format: dot output is only available for hasse, relative-hasse and dot\n";
    return kUsage;
  }
  try {
    const Request r = make_request(chosen, o);
    return dispatch(r, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OrbitCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace relbgg::cli
