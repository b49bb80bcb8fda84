#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"
#include "vknot/flat.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariant.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"
#include "vknot/version.hpp"

namespace vknot {

/// One census line: a name and a Gauss code. An empty code is the unknot.
struct CensusEntry {
  std::string name;
  RawCode code;
  std::size_t line = 0; // 1-based source line
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

} // namespace detail

/// Reads `name<TAB>code` lines. Blank lines and lines starting with '#' are
/// ignored. Errors carry the 1-based line number in Error::index().
inline std::vector<CensusEntry> ingest_census(std::istream& in) {
  std::vector<CensusEntry> entries;
  std::map<std::string, std::size_t> first_line;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string stripped = detail::trim(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    // Split the raw line: a line starting with a tab has an empty name.
    std::size_t tab = raw.find('\t');
    std::string name = detail::trim(raw.substr(0, tab));
    std::string code_text =
        tab == std::string::npos ? std::string() : detail::trim(raw.substr(tab + 1));
    if (name.empty())
      throw Error(errc::malformed_token,
                  "line " + std::to_string(line_no) + ": missing name", line_no);
    auto [it, fresh] = first_line.try_emplace(name, line_no);
    if (!fresh)
      throw Error(errc::duplicate_name,
                  "duplicate name '" + name + "' (lines " +
                      std::to_string(it->second) + " and " +
                      std::to_string(line_no) + ")",
                  line_no);
    RawCode code;
    try {
      code = parse(code_text);
    } catch (const Error& e) {
      throw Error(e.kind(),
                  "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    entries.push_back({std::move(name), std::move(code), line_no});
  }
  return entries;
}

inline std::vector<CensusEntry> ingest_census(const std::string& text) {
  std::istringstream in(text);
  return ingest_census(in);
}

struct ScrambleConfig {
  int steps = 10;
  std::uint64_t seed = 0;
  int crossing_cap = 12;
};

struct ReportConfig {
  int n_max = 0; // 0: use each diagram's own index bound
  long long budget = kDefaultFlatBudget;
  int riii_cap = kDefaultRiiiDepthCap;
  std::optional<ScrambleConfig> scramble;
};

/// The full invariant bundle for one diagram.
struct InvariantReport {
  std::string name;
  std::string code; // serialized form of the diagram actually evaluated
  LaurentPoly p;
  int n_bound = 1; // index bound of the diagram and its smoothings
  int n_max = 1;   // largest n evaluated below
  std::map<long long, long long> j;    // n in [-n_max, n_max], n != 0
  std::map<long long, long long> dj;   // n in [1, n_max]
  std::map<long long, LaurentPoly2> l_polys; // n in [1, n_max]
  std::map<long long, LaurentPoly2> f_polys; // n in [1, n_max]
  TftReport tft;
};

inline InvariantReport compute_report(const Diagram& d, const ReportConfig& cfg,
                                      std::string name = {}) {
  InvariantReport r;
  r.name = std::move(name);
  r.code = serialize(d.code());
  r.p = affine_index_polynomial(d);
  r.n_bound = report_index_bound(d);
  r.n_max = cfg.n_max > 0 ? cfg.n_max : r.n_bound;
  for (long long n = 1; n <= r.n_max; ++n) {
    r.j[n] = n_writhe(d, n);
    r.j[-n] = n_writhe(d, -n);
    r.dj[n] = n_dwrithe(d, n);
    r.l_polys[n] = l_polynomial(d, n);
    r.f_polys[n] = f_polynomial(d, n);
  }
  r.tft = is_totally_flat_trivial(d, cfg.budget, cfg.riii_cap);
  return r;
}

/// True when the two reports agree on every invariant value (polynomial,
/// writhes, dwrithes, and both two-variable families). Names, codes, and
/// search verdicts are not compared: the searches are semidecisions, not
/// invariants.
inline bool invariants_equal(const InvariantReport& a, const InvariantReport& b) {
  return a.p == b.p && a.j == b.j && a.dj == b.dj && a.l_polys == b.l_polys &&
         a.f_polys == b.f_polys;
}

inline Diagram scrambled_diagram(const CensusEntry& entry,
                                 const ReportConfig& cfg, std::size_t index) {
  Diagram d(entry.code);
  if (cfg.scramble) {
    d = scramble(d, cfg.scramble->steps, cfg.scramble->seed + index,
                 cfg.scramble->crossing_cap);
  }
  return d;
}

inline std::vector<InvariantReport> compute_reports(
    const std::vector<CensusEntry>& entries, const ReportConfig& cfg = {}) {
  std::vector<InvariantReport> reports;
  reports.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    reports.push_back(
        compute_report(scrambled_diagram(entries[i], cfg, i), cfg, entries[i].name));
  return reports;
}

// ---------------------------------------------------------------------------
// Grouping.
// ---------------------------------------------------------------------------

/// Rendering of the sign-normalized polynomial: of {p, -p}, the one whose
/// lowest-degree nonzero coefficient is positive. Groups diagrams that can
/// only differ by a crossing switch of every crossing.
inline std::string polynomial_class_key(const LaurentPoly& p) {
  if (p.is_zero()) return p.render();
  const auto& first = *p.terms.begin();
  return first.second > 0 ? p.render() : (-p).render();
}

struct PolynomialGroup {
  std::string key; // rendered representative polynomial
  std::vector<std::string> names;
};

inline std::vector<PolynomialGroup> group_by_polynomial(
    const std::vector<InvariantReport>& reports) {
  std::map<std::string, std::vector<std::string>> buckets;
  for (const InvariantReport& r : reports)
    buckets[polynomial_class_key(r.p)].push_back(r.name);
  std::vector<PolynomialGroup> groups;
  for (auto& [key, names] : buckets) groups.push_back({key, std::move(names)});
  return groups;
}

struct FlatClassGroup {
  std::vector<std::string> names;
  std::map<long long, long long> profile; // nonzero dwrithes of a representative
  /// True when another group carries the same dwrithe profile and the bounded
  /// searches could not connect them: the separation is not certified.
  bool unresolved = false;
};

/// Groups entries by provable flat equivalence: two words are merged when
/// their bounded searches reach a common canonical form (every search move
/// is an invertible flat equivalence, so a shared reachable word is a proof).
/// Distinctness is certified only by differing dwrithe profiles; groups whose
/// profiles coincide without a connecting word are flagged unresolved.
inline std::vector<FlatClassGroup> group_by_flat_class(
    const std::vector<CensusEntry>& entries, const ReportConfig& cfg = {}) {
  const std::size_t n = entries.size();
  std::vector<std::set<std::string>> visited(n);
  std::vector<std::map<long long, long long>> profile(n);
  for (std::size_t i = 0; i < n; ++i) {
    FlatCode f = flatten(scrambled_diagram(entries[i], cfg, i));
    visited[i] = flat_search(f, cfg.budget, cfg.riii_cap).visited;
    visited[i].insert(serialize_flat(canonicalize_flat(f)));
    const int bound = f.empty() ? 0 : flat_index_bound(f);
    for (long long k = 1; k <= bound; ++k) {
      long long v = flat_cheng_dwrithe(f, k);
      if (v != 0) profile[i][k] = v;
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& small = visited[i].size() <= visited[j].size() ? visited[i] : visited[j];
      const auto& large = visited[i].size() <= visited[j].size() ? visited[j] : visited[i];
      bool meet = std::any_of(small.begin(), small.end(), [&](const std::string& w) {
        return large.count(w) != 0;
      });
      if (meet) parent[find(i)] = find(j);
    }

  std::map<std::size_t, FlatClassGroup> by_root;
  for (std::size_t i = 0; i < n; ++i) {
    FlatClassGroup& g = by_root[find(i)];
    g.names.push_back(entries[i].name);
    g.profile = profile[i];
  }
  std::vector<FlatClassGroup> groups;
  for (auto& [root, g] : by_root) groups.push_back(std::move(g));
  std::sort(groups.begin(), groups.end(),
            [](const FlatClassGroup& a, const FlatClassGroup& b) {
              return a.names.front() < b.names.front();
            });
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (groups[i].profile == groups[j].profile)
        groups[i].unresolved = groups[j].unresolved = true;
  return groups;
}

// ---------------------------------------------------------------------------
// Output.
// ---------------------------------------------------------------------------

inline std::string census_table(const std::vector<InvariantReport>& reports) {
  std::size_t width = 4;
  for (const InvariantReport& r : reports) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::string(width - 4, ' ') << "name | affine index polynomial\n";
  for (const InvariantReport& r : reports) {
    out << std::string(width - r.name.size(), ' ') << r.name << " | "
        << r.p.render() << '\n';
  }
  return out.str();
}

inline std::string polynomial_group_table(const std::vector<PolynomialGroup>& groups) {
  std::ostringstream out;
  out << "polynomial class | names\n";
  for (const PolynomialGroup& g : groups) {
    out << g.key << " | ";
    for (std::size_t i = 0; i < g.names.size(); ++i)
      out << (i ? ", " : "") << g.names[i];
    out << '\n';
  }
  return out.str();
}

inline std::string flat_group_table(const std::vector<FlatClassGroup>& groups) {
  std::ostringstream out;
  out << "flat class | dwrithe profile | names\n";
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const FlatClassGroup& g = groups[gi];
    out << (gi + 1) << (g.unresolved ? " (unresolved)" : "") << " | ";
    if (g.profile.empty()) {
      out << "all zero";
    } else {
      bool first = true;
      for (const auto& [k, v] : g.profile) {
        out << (first ? "" : ", ") << "dJ_" << k << "=" << v;
        first = false;
      }
    }
    out << " | ";
    for (std::size_t i = 0; i < g.names.size(); ++i)
      out << (i ? ", " : "") << g.names[i];
    out << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json report_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["code"] = r.code;
  j["polynomial"] = {{"render", r.p.render()}, {"terms", r.p.to_json()}};
  j["n_bound"] = r.n_bound;
  j["n_max"] = r.n_max;
  nlohmann::ordered_json jw = nlohmann::ordered_json::object();
  for (const auto& [n, v] : r.j) jw[std::to_string(n)] = v;
  j["j"] = std::move(jw);
  nlohmann::ordered_json dj = nlohmann::ordered_json::object();
  for (const auto& [n, v] : r.dj) dj[std::to_string(n)] = v;
  j["dj"] = std::move(dj);
  auto two_var = [](const std::map<long long, LaurentPoly2>& polys) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [n, p] : polys)
      out[std::to_string(n)] = {{"render", p.render()}, {"terms", p.to_json()}};
    return out;
  };
  j["l"] = two_var(r.l_polys);
  j["f"] = two_var(r.f_polys);
  j["tft"] = tft_json(r.tft);
  return j;
}

inline nlohmann::ordered_json config_json(const ReportConfig& cfg) {
  nlohmann::ordered_json j;
  j["n_max"] = cfg.n_max;
  j["budget"] = cfg.budget;
  j["riii_cap"] = cfg.riii_cap;
  if (cfg.scramble) {
    j["scramble"] = {{"steps", cfg.scramble->steps},
                     {"seed", cfg.scramble->seed},
                     {"crossing_cap", cfg.scramble->crossing_cap}};
  } else {
    j["scramble"] = nullptr;
  }
  return j;
}

inline nlohmann::ordered_json census_json(
    const std::vector<InvariantReport>& reports, const ReportConfig& cfg,
    const std::vector<PolynomialGroup>* poly_groups = nullptr,
    const std::vector<FlatClassGroup>* flat_groups = nullptr) {
  nlohmann::ordered_json j;
  j["schema"] = kCensusSchema;
  j["tool_version"] = kToolVersion;
  j["config"] = config_json(cfg);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const InvariantReport& r : reports) list.push_back(report_json(r));
  j["entries"] = std::move(list);
  if (poly_groups) {
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const PolynomialGroup& g : *poly_groups)
      groups.push_back({{"polynomial", g.key}, {"names", g.names}});
    j["polynomial_groups"] = std::move(groups);
  }
  if (flat_groups) {
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const FlatClassGroup& g : *flat_groups) {
      nlohmann::ordered_json prof = nlohmann::ordered_json::object();
      for (const auto& [k, v] : g.profile) prof[std::to_string(k)] = v;
      groups.push_back({{"names", g.names},
                        {"dwrithe_profile", std::move(prof)},
                        {"unresolved", g.unresolved}});
    }
    j["flat_groups"] = std::move(groups);
  }
  return j;
}

} // namespace vknot
