#pragma once

#include <cstdlib>
#include <map>
#include <utility>

#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

struct CrossingIndex {
  int sign = +1;
  long long index = 0; // sign * (a - b - 1)
};

/// Per-crossing signs and indices, keyed by crossing id.
struct IndexTable {
  std::map<int, CrossingIndex> entries;
};

inline IndexTable index_table(const Diagram& d) {
  IndexTable table;
  if (d.empty()) return table;
  ChengColoring col = cheng_coloring(d);
  for (const auto& [id, c] : d.crossings()) {
    auto [a, b] = incoming_labels(d, col, id);
    table.entries.emplace(id, CrossingIndex{c.sign, c.sign * (a - b - 1)});
  }
  return table;
}

/// Affine index polynomial: sum over crossings of sign(c) * (t^index(c) - 1).
/// Always vanishes at t = 1; zero for every classical diagram.
inline LaurentPoly affine_index_polynomial(const Diagram& d) {
  LaurentPoly p;
  for (const auto& [id, ci] : index_table(d).entries) {
    p.add_term(static_cast<int>(ci.index), ci.sign);
    p.add_term(0, -ci.sign);
  }
  return p;
}

/// n-writhe: the signed count of crossings of index n (n != 0). Equals the
/// t^n coefficient of the affine index polynomial; the identity is asserted
/// on every call as a cross-check of the two computation routes.
inline long long n_writhe(const Diagram& d, long long n) {
  if (n == 0) throw Error(errc::zero_n, "n-writhe is defined for n != 0");
  long long count = 0;
  for (const auto& [id, ci] : index_table(d).entries)
    if (ci.index == n) count += ci.sign;
  long long via_poly = affine_index_polynomial(d).coeff(static_cast<int>(n));
  if (count != via_poly)
    throw internal_error("n-writhe disagrees with polynomial coefficient");
  return count;
}

/// n-dwrithe: J_n - J_{-n} for n >= 1. Invariant under switching crossings,
/// so it descends to the flat projection.
inline long long n_dwrithe(const Diagram& d, long long n) {
  if (n <= 0) throw Error(errc::non_positive_n, "n-dwrithe is defined for n >= 1");
  return n_writhe(d, n) - n_writhe(d, -n);
}

/// Largest |index| over the diagram and all of its one-crossing smoothings,
/// floored at 1. Every J_n, dJ_n, L^n, F^n is constant beyond this bound.
inline int report_index_bound(const Diagram& d) {
  long long bound = 1;
  auto fold = [&bound](const IndexTable& t) {
    for (const auto& [id, ci] : t.entries)
      bound = std::max(bound, std::llabs(ci.index));
  };
  fold(index_table(d));
  for (const auto& [id, c] : d.crossings())
    fold(index_table(smooth_against_orientation(d, id).result));
  return static_cast<int>(bound);
}

/// dJ_n of each one-crossing smoothing, keyed by the smoothed crossing id.
inline std::map<int, long long> smoothed_dwrithes(const Diagram& d, long long n) {
  std::map<int, long long> out;
  for (const auto& [id, c] : d.crossings())
    out.emplace(id, n_dwrithe(smooth_against_orientation(d, id).result, n));
  return out;
}

/// L^n(t, l) = sum over crossings c of
///   sign(c) * (t^index(c) * l^|dJ_n(D_c)| - l^|dJ_n(D)|),
/// where D_c is the smoothing at c. Specializes to the affine index
/// polynomial at l = 1.
inline LaurentPoly2 l_polynomial(const Diagram& d, long long n) {
  if (n <= 0) throw Error(errc::non_positive_n, "L^n is defined for n >= 1");
  IndexTable table = index_table(d);
  std::map<int, long long> smoothed = smoothed_dwrithes(d, n);
  long long base = std::llabs(n_dwrithe(d, n));
  LaurentPoly2 p;
  for (const auto& [id, ci] : table.entries) {
    long long at_c = std::llabs(smoothed.at(id));
    p.add_term(static_cast<int>(ci.index), static_cast<int>(at_c), ci.sign);
    p.add_term(0, static_cast<int>(base), -ci.sign);
  }
  return p;
}

/// F^n(t, l) = sum_c sign(c) * t^index(c) * l^dJ_n(D_c)
///           - sum_{c in T_n} sign(c) * l^dJ_n(D_c)
///           - sum_{c not in T_n} sign(c) * l^dJ_n(D),
/// where T_n collects the crossings with |dJ_n(D_c)| = |dJ_n(D)|. The first
/// two sums use signed dwrithe exponents; only the membership test for T_n
/// takes absolute values. Also specializes to the affine index polynomial at
/// l = 1.
inline LaurentPoly2 f_polynomial(const Diagram& d, long long n) {
  if (n <= 0) throw Error(errc::non_positive_n, "F^n is defined for n >= 1");
  IndexTable table = index_table(d);
  std::map<int, long long> smoothed = smoothed_dwrithes(d, n);
  long long base = n_dwrithe(d, n);
  LaurentPoly2 p;
  for (const auto& [id, ci] : table.entries) {
    long long at_c = smoothed.at(id);
    p.add_term(static_cast<int>(ci.index), static_cast<int>(at_c), ci.sign);
    bool in_tn = std::llabs(at_c) == std::llabs(base);
    p.add_term(0, static_cast<int>(in_tn ? at_c : base), -ci.sign);
  }
  return p;
}

} // namespace vknot
