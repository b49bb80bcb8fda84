#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"

namespace vknot {

struct Crossing {
  int sign = +1;
  std::size_t over_pos = 0;  // position of the Over pass
  std::size_t under_pos = 0; // position of the Under pass
};

/// A validated diagram built from a Gauss code. Arcs are indexed by pass
/// position: arc i runs from pass i to pass i+1 (cyclically); the empty
/// diagram is one closed arc.
class Diagram {
public:
  Diagram() = default;

  explicit Diagram(RawCode code) : code_(std::move(code)) {
    validate(code_);
    for (std::size_t i = 0; i < code_.tokens.size(); ++i) {
      const PassToken& t = code_.tokens[i];
      Crossing& c = crossings_[t.crossing_id];
      c.sign = t.sign;
      (t.role == Role::Over ? c.over_pos : c.under_pos) = i;
    }
  }

  const RawCode& code() const noexcept { return code_; }
  const std::vector<PassToken>& passes() const noexcept { return code_.tokens; }
  std::size_t pass_count() const noexcept { return code_.size(); }
  std::size_t arc_count() const noexcept { return code_.empty() ? 1 : code_.size(); }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  bool empty() const noexcept { return code_.empty(); }
  const std::map<int, Crossing>& crossings() const noexcept { return crossings_; }

  const Crossing& crossing(int id) const {
    auto it = crossings_.find(id);
    if (it == crossings_.end())
      throw Error(errc::unknown_crossing,
                  "no crossing with id " + std::to_string(id));
    return it->second;
  }

private:
  RawCode code_;
  std::map<int, Crossing> crossings_;
};

/// Arc labels of the Cheng coloring: label[i] belongs to arc i. The label of
/// an arc is the signed count of crossings first met as over-crossings while
/// walking the knot onward from that arc.
struct ChengColoring {
  std::vector<long long> arc_labels;
};

namespace detail {

inline long long arc_into(const ChengColoring& col, std::size_t pass_pos,
                          std::size_t n) {
  return col.arc_labels[(pass_pos + n - 1) % n];
}

inline long long arc_out_of(const ChengColoring& col, std::size_t pass_pos) {
  return col.arc_labels[pass_pos];
}

/// Local relation at each crossing: the incoming strand whose co-strand
/// crosses it right-to-left exits decremented, the other exits incremented.
/// At a positive crossing the decrementing strand is the over strand, at a
/// negative crossing the under strand. Violations are implementation bugs.
inline void check_coloring_relations(const Diagram& d, const ChengColoring& col) {
  const std::size_t n = d.pass_count();
  for (const auto& [id, c] : d.crossings()) {
    long long over_in = arc_into(col, c.over_pos, n);
    long long over_out = arc_out_of(col, c.over_pos);
    long long under_in = arc_into(col, c.under_pos, n);
    long long under_out = arc_out_of(col, c.under_pos);
    bool ok;
    if (c.sign > 0)
      ok = (over_out == over_in - 1) && (under_out == under_in + 1);
    else
      ok = (under_out == under_in - 1) && (over_out == over_in + 1);
    if (!ok)
      throw internal_error("Cheng coloring relation violated at crossing " +
                           std::to_string(id));
  }
}

} // namespace detail

/// Computes the Cheng coloring by the explicit walk (O(n^2)) and then checks
/// the local crossing relations as an independent cross-validation.
inline ChengColoring cheng_coloring(const Diagram& d) {
  ChengColoring col;
  const std::size_t n = d.pass_count();
  if (n == 0) {
    col.arc_labels.assign(1, 0);
    return col;
  }
  col.arc_labels.assign(n, 0);
  const auto& passes = d.passes();
  for (std::size_t arc = 0; arc < n; ++arc) {
    long long label = 0;
    std::map<int, bool> met;
    for (std::size_t step = 1; step <= n; ++step) {
      const PassToken& t = passes[(arc + step) % n];
      auto [it, fresh] = met.try_emplace(t.crossing_id, true);
      (void)it;
      if (fresh && t.role == Role::Over) label += t.sign;
    }
    col.arc_labels[arc] = label;
  }
  detail::check_coloring_relations(d, col);
  return col;
}

/// The ordered label pair (a, b) at a crossing: a labels the incoming strand
/// that exits decremented, b the one that exits incremented. The crossing
/// index is then sign * (a - b - 1).
inline std::pair<long long, long long> incoming_labels(const Diagram& d,
                                                       const ChengColoring& col,
                                                       int crossing_id) {
  const Crossing& c = d.crossing(crossing_id);
  const std::size_t n = d.pass_count();
  long long over_in = detail::arc_into(col, c.over_pos, n);
  long long under_in = detail::arc_into(col, c.under_pos, n);
  if (c.sign > 0) return {over_in, under_in};
  return {under_in, over_in};
}

enum class OrientationConvention {
  /// The segment containing the basepoint keeps its orientation; the segment
  /// strictly between the two passes of the smoothed crossing is reversed.
  BasepointSegmentForward,
};

struct SmoothedDiagram {
  Diagram result;
  /// Original pass positions whose traversal direction was reversed.
  std::vector<std::size_t> reversed_positions;
  OrientationConvention convention = OrientationConvention::BasepointSegmentForward;
};

/// Smooths crossing `id` against the orientation. In the linearization from
/// the basepoint the two passes sit at positions i < j; both are deleted and
/// the block strictly between them is reversed. A crossing with exactly one
/// pass in the reversed block has one strand reversed, which flips its sign
/// and keeps roles; a crossing entirely inside keeps its sign. The result is
/// a one-component diagram with one crossing fewer.
inline SmoothedDiagram smooth_against_orientation(const Diagram& d, int id) {
  const Crossing& c = d.crossing(id);
  const std::size_t i = std::min(c.over_pos, c.under_pos);
  const std::size_t j = std::max(c.over_pos, c.under_pos);
  const auto& passes = d.passes();

  std::map<int, int> inside_count;
  for (std::size_t p = i + 1; p < j; ++p) ++inside_count[passes[p].crossing_id];

  SmoothedDiagram out;
  RawCode code;
  code.tokens.reserve(passes.size() - 2);
  auto emit = [&](std::size_t p) {
    PassToken t = passes[p];
    auto it = inside_count.find(t.crossing_id);
    if (it != inside_count.end() && it->second == 1) t.sign = -t.sign;
    code.tokens.push_back(t);
  };
  for (std::size_t p = 0; p < i; ++p) emit(p);
  for (std::size_t p = j; p-- > i + 1;) {
    emit(p);
    out.reversed_positions.push_back(p);
  }
  for (std::size_t p = j + 1; p < passes.size(); ++p) emit(p);
  std::reverse(out.reversed_positions.begin(), out.reversed_positions.end());

  out.result = Diagram(std::move(code));
  return out;
}

} // namespace vknot
