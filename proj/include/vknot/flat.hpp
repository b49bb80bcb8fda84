#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariant.hpp"
#include "vknot/moves.hpp"

namespace vknot {

/// Which way the co-strand crosses the strand of this encounter. This is the
/// over/under-free residue of a crossing: at a positive crossing the over
/// strand sees its co-strand cross right-to-left and the under strand sees
/// left-to-right; at a negative crossing the reverse.
enum class Handedness : std::uint8_t { RightToLeft, LeftToRight };

inline Handedness handedness_of(Role role, int sign) {
  bool right_to_left = (role == Role::Over) == (sign > 0);
  return right_to_left ? Handedness::RightToLeft : Handedness::LeftToRight;
}

struct FlatPass {
  int crossing_id = 0;
  Handedness h = Handedness::RightToLeft;

  friend bool operator==(const FlatPass&, const FlatPass&) = default;
};

/// A flat word: the cyclic encounter sequence with handedness but no
/// over/under data. The two encounters of a crossing carry opposite
/// handedness. Mirror-image diagrams flatten identically.
struct FlatCode {
  std::vector<FlatPass> word;

  std::size_t size() const noexcept { return word.size(); }
  bool empty() const noexcept { return word.empty(); }

  friend bool operator==(const FlatCode&, const FlatCode&) = default;
};

inline void validate_flat(const FlatCode& f) {
  struct Seen {
    std::size_t first_index = 0;
    Handedness h = Handedness::RightToLeft;
    int count = 0;
  };
  std::map<int, Seen> seen;
  for (std::size_t i = 0; i < f.word.size(); ++i) {
    const FlatPass& p = f.word[i];
    if (p.crossing_id < 1)
      throw Error(errc::malformed_token, "crossing id must be >= 1", i);
    Seen& s = seen[p.crossing_id];
    if (s.count == 0) {
      s.first_index = i;
      s.h = p.h;
    } else if (s.count >= 2) {
      throw Error(errc::duplicate_pass,
                  "crossing " + std::to_string(p.crossing_id) +
                      " encountered more than twice",
                  i);
    } else if (p.h == s.h) {
      throw Error(errc::sign_mismatch,
                  "crossing " + std::to_string(p.crossing_id) +
                      " must carry opposite handedness at its two encounters",
                  i);
    }
    ++s.count;
  }
  for (const auto& [id, s] : seen)
    if (s.count != 2)
      throw Error(errc::unpaired_pass,
                  "crossing " + std::to_string(id) + " appears only once",
                  s.first_index);
}

inline FlatCode flatten(const Diagram& d) {
  FlatCode f;
  f.word.reserve(d.pass_count());
  for (const PassToken& t : d.passes())
    f.word.push_back({t.crossing_id, handedness_of(t.role, t.sign)});
  return f;
}

/// Compact text form, e.g. "1R2R1L2L".
inline std::string serialize_flat(const FlatCode& f) {
  std::string out;
  out.reserve(f.size() * 3);
  for (const FlatPass& p : f.word) {
    out += std::to_string(p.crossing_id);
    out += (p.h == Handedness::RightToLeft) ? 'R' : 'L';
  }
  return out;
}

inline FlatCode parse_flat(std::string_view text) {
  FlatCode f;
  std::size_t pos = 0;
  std::size_t token_index = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    long long id = 0;
    std::size_t digits_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      id = id * 10 + (text[pos] - '0');
      if (id > 1000000)
        throw Error(errc::malformed_token, "crossing id out of range", token_index);
      ++pos;
    }
    if (pos == digits_begin || id < 1)
      throw Error(errc::malformed_token, "expected a positive crossing id",
                  token_index);
    if (pos >= text.size() || (text[pos] != 'R' && text[pos] != 'L'))
      throw Error(errc::malformed_token, "expected 'R' or 'L' after crossing id",
                  token_index);
    f.word.push_back({static_cast<int>(id), text[pos] == 'R'
                                                ? Handedness::RightToLeft
                                                : Handedness::LeftToRight});
    ++pos;
    ++token_index;
  }
  validate_flat(f);
  return f;
}

namespace detail {

inline bool flat_token_less(const FlatPass& a, const FlatPass& b) {
  if (a.crossing_id != b.crossing_id) return a.crossing_id < b.crossing_id;
  return a.h == Handedness::RightToLeft && b.h == Handedness::LeftToRight;
}

} // namespace detail

inline FlatCode rotated_flat(const FlatCode& f, std::size_t k) {
  if (f.empty()) return f;
  k %= f.size();
  FlatCode out;
  out.word.insert(out.word.end(), f.word.begin() + k, f.word.end());
  out.word.insert(out.word.end(), f.word.begin(), f.word.begin() + k);
  return out;
}

inline FlatCode relabeled_flat(const FlatCode& f) {
  std::map<int, int> remap;
  int next = 1;
  FlatCode out = f;
  for (FlatPass& p : out.word) {
    auto [it, fresh] = remap.try_emplace(p.crossing_id, next);
    if (fresh) ++next;
    p.crossing_id = it->second;
  }
  return out;
}

/// Least relabeled rotation. Handedness is preserved; orientation reversal is
/// deliberately not quotiented out.
inline FlatCode canonicalize_flat(const FlatCode& f) {
  if (f.empty()) return f;
  FlatCode best = relabeled_flat(f);
  for (std::size_t k = 1; k < f.size(); ++k) {
    FlatCode cand = relabeled_flat(rotated_flat(f, k));
    if (std::lexicographical_compare(cand.word.begin(), cand.word.end(),
                                     best.word.begin(), best.word.end(),
                                     detail::flat_token_less))
      best = std::move(cand);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Lifts. A flat word does not know which strand is on top, but each crossing
// has exactly two over/under completions consistent with its handedness: the
// right-to-left encounter is either the over pass of a positive crossing or
// the under pass of a negative one. Every completion has the same n-dwrithe,
// which is what makes the dwrithe a flat invariant.
// ---------------------------------------------------------------------------

/// Lift with one choice bit per crossing, in order of first appearance.
/// Bit 0: the crossing is positive and its right-to-left encounter is the
/// over pass. Bit 1: negative, right-to-left encounter is the under pass.
inline RawCode lift_flat(const FlatCode& f, std::uint64_t choice_bits = 0) {
  validate_flat(f);
  std::map<int, std::size_t> order;
  for (const FlatPass& p : f.word) order.try_emplace(p.crossing_id, order.size());
  RawCode code;
  code.tokens.reserve(f.size());
  for (const FlatPass& p : f.word) {
    bool flip = (choice_bits >> (order[p.crossing_id] % 64)) & 1;
    int sign = flip ? -1 : +1;
    bool right = p.h == Handedness::RightToLeft;
    Role role = (right != flip) ? Role::Over : Role::Under;
    code.tokens.push_back({role, p.crossing_id, sign});
  }
  validate(code);
  return code;
}

/// dJ_n of the flat word, computed on a lift. The value is the same for
/// every lift, and equals n_dwrithe of any diagram that flattens to f.
inline long long flat_cheng_dwrithe(const FlatCode& f, long long n) {
  return n_dwrithe(Diagram(lift_flat(f)), n);
}

/// Largest |index| over the crossings of a lift, floored at 1; dJ_n of the
/// word vanishes beyond this bound.
inline int flat_index_bound(const FlatCode& f) {
  long long bound = 1;
  for (const auto& [id, ci] : index_table(Diagram(lift_flat(f))).entries)
    bound = std::max(bound, std::llabs(ci.index));
  return static_cast<int>(bound);
}

// ---------------------------------------------------------------------------
// Flat moves: kink removal, bigon removal, triangle slide.
// ---------------------------------------------------------------------------

struct FlatR1Site {
  std::size_t pos = 0;
  int id = 0;
};

/// Two adjacent encounter pairs of the same two crossings. Removable exactly
/// when the two encounters disagree in handedness within each pair (the two
/// pairs agree or disagree together, but both are checked).
struct FlatR2Site {
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
  int x = 0;
  int y = 0;
};

/// Triangle slide on the flat word; valid when some over/under completion of
/// the three crossings admits the classical triangle slide.
struct FlatR3Site {
  std::array<std::size_t, 3> side_pos{};
};

using FlatMove = std::variant<FlatR1Site, FlatR2Site, FlatR3Site>;

inline bool flat_r1_applicable(const FlatCode& f, const FlatR1Site& s) {
  const std::size_t n = f.size();
  if (n < 2 || s.pos >= n) return false;
  return f.word[s.pos].crossing_id == s.id &&
         f.word[(s.pos + 1) % n].crossing_id == s.id;
}

inline bool flat_r2_applicable(const FlatCode& f, const FlatR2Site& s) {
  const std::size_t n = f.size();
  if (n < 4 || s.pos_a >= n || s.pos_b >= n || s.x == s.y) return false;
  const FlatPass& a1 = f.word[s.pos_a];
  const FlatPass& a2 = f.word[(s.pos_a + 1) % n];
  const FlatPass& b1 = f.word[s.pos_b];
  const FlatPass& b2 = f.word[(s.pos_b + 1) % n];
  auto pair_matches = [&](const FlatPass& p, const FlatPass& q) {
    return (p.crossing_id == s.x && q.crossing_id == s.y) ||
           (p.crossing_id == s.y && q.crossing_id == s.x);
  };
  if (!pair_matches(a1, a2) || !pair_matches(b1, b2)) return false;
  if (a1.h == a2.h || b1.h == b2.h) return false;
  return detail::positions_distinct(
      {s.pos_a, (s.pos_a + 1) % n, s.pos_b, (s.pos_b + 1) % n});
}

namespace detail {

inline bool flat_r3_site_shape(const FlatCode& f, const FlatR3Site& s,
                               std::array<std::array<FlatPass, 2>, 3>& sides) {
  const std::size_t n = f.size();
  if (n < 6) return false;
  for (std::size_t p : s.side_pos)
    if (p >= n) return false;
  if (!positions_distinct({s.side_pos[0], (s.side_pos[0] + 1) % n,
                           s.side_pos[1], (s.side_pos[1] + 1) % n,
                           s.side_pos[2], (s.side_pos[2] + 1) % n}))
    return false;
  for (int i = 0; i < 3; ++i) {
    sides[i][0] = f.word[s.side_pos[i]];
    sides[i][1] = f.word[(s.side_pos[i] + 1) % n];
    if (sides[i][0].crossing_id == sides[i][1].crossing_id) return false;
  }
  return true;
}

} // namespace detail

inline bool flat_r3_applicable(const FlatCode& f, const FlatR3Site& s) {
  std::array<std::array<FlatPass, 2>, 3> sides;
  if (!detail::flat_r3_site_shape(f, s, sides)) return false;
  std::vector<int> ids;
  for (const auto& side : sides)
    for (const FlatPass& p : side) ids.push_back(p.crossing_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() != 3) return false;
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    auto lifted = [&](const FlatPass& p) {
      std::size_t which = static_cast<std::size_t>(
          std::find(ids.begin(), ids.end(), p.crossing_id) - ids.begin());
      bool flip = (bits >> which) & 1;
      bool right = p.h == Handedness::RightToLeft;
      Role role = (right != flip) ? Role::Over : Role::Under;
      int sign = flip ? -1 : +1;
      return std::pair<Role, int>{role, sign};
    };
    std::array<detail::RiiiSide, 3> rs;
    for (int i = 0; i < 3; ++i) {
      auto [r0, s0] = lifted(sides[i][0]);
      auto [r1, s1] = lifted(sides[i][1]);
      rs[i] = detail::RiiiSide{sides[i][0].crossing_id, sides[i][1].crossing_id,
                               r0, r1, s0, s1};
    }
    if (detail::riii_pattern_valid(rs[0], rs[1], rs[2])) return true;
  }
  return false;
}

/// Removals first (they strictly shrink the word), then triangle slides.
inline std::vector<FlatMove> enumerate_flat_moves(const FlatCode& f) {
  std::vector<FlatMove> moves;
  const std::size_t n = f.size();
  for (std::size_t p = 0; p < n; ++p) {
    FlatR1Site s{p, f.word[p].crossing_id};
    if (flat_r1_applicable(f, s)) moves.push_back(s);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      FlatR2Site s{p, q, f.word[p].crossing_id, f.word[(p + 1) % n].crossing_id};
      if (flat_r2_applicable(f, s)) moves.push_back(s);
    }
  std::vector<std::size_t> side_starts;
  for (std::size_t p = 0; p < n; ++p)
    if (f.word[p].crossing_id != f.word[(p + 1) % n].crossing_id)
      side_starts.push_back(p);
  for (std::size_t i = 0; i < side_starts.size(); ++i)
    for (std::size_t j = i + 1; j < side_starts.size(); ++j)
      for (std::size_t k = j + 1; k < side_starts.size(); ++k) {
        FlatR3Site s{{side_starts[i], side_starts[j], side_starts[k]}};
        if (flat_r3_applicable(f, s)) moves.push_back(s);
      }
  return moves;
}

inline FlatCode apply_flat_move(const FlatCode& f, const FlatMove& move) {
  const std::size_t n = f.size();
  auto stale = [] { return Error(errc::stale_site, "flat move site does not match the word"); };
  auto erase = [&](std::initializer_list<std::size_t> remove) {
    std::vector<bool> drop(n, false);
    for (std::size_t p : remove) drop[p] = true;
    FlatCode out;
    for (std::size_t p = 0; p < n; ++p)
      if (!drop[p]) out.word.push_back(f.word[p]);
    return out;
  };
  if (const auto* s = std::get_if<FlatR1Site>(&move)) {
    if (!flat_r1_applicable(f, *s)) throw stale();
    return erase({s->pos, (s->pos + 1) % n});
  }
  if (const auto* s = std::get_if<FlatR2Site>(&move)) {
    if (!flat_r2_applicable(f, *s)) throw stale();
    return erase({s->pos_a, (s->pos_a + 1) % n, s->pos_b, (s->pos_b + 1) % n});
  }
  const auto* s = std::get_if<FlatR3Site>(&move);
  if (!s) throw internal_error("unhandled flat move kind");
  if (!flat_r3_applicable(f, *s)) throw stale();
  FlatCode out = f;
  for (std::size_t p : s->side_pos) std::swap(out.word[p], out.word[(p + 1) % n]);
  return out;
}

/// Test support: the insertion inverses of the removal moves.
inline FlatCode flat_r1_insert(const FlatCode& f, std::size_t gap,
                               Handedness first) {
  const std::size_t gaps = f.empty() ? 1 : f.size();
  if (gap >= gaps) throw Error(errc::stale_site, "gap out of range");
  int id = 0;
  for (const FlatPass& p : f.word) id = std::max(id, p.crossing_id);
  ++id;
  FlatCode out = f;
  Handedness second = first == Handedness::RightToLeft ? Handedness::LeftToRight
                                                       : Handedness::RightToLeft;
  out.word.insert(out.word.begin() + static_cast<std::ptrdiff_t>(gap),
                  {FlatPass{id, first}, FlatPass{id, second}});
  validate_flat(out);
  return out;
}

inline FlatCode flat_r2_insert(const FlatCode& f, std::size_t gap_a,
                               std::size_t gap_b, bool same_order,
                               Handedness first, bool a_block_first = true) {
  const std::size_t gaps = f.empty() ? 1 : f.size();
  if (gap_a >= gaps || gap_b >= gaps)
    throw Error(errc::stale_site, "gap out of range");
  int id = 0;
  for (const FlatPass& p : f.word) id = std::max(id, p.crossing_id);
  int x = id + 1, y = id + 2;
  Handedness opp = first == Handedness::RightToLeft ? Handedness::LeftToRight
                                                    : Handedness::RightToLeft;
  std::vector<FlatPass> block_a{{x, first}, {y, opp}};
  std::vector<FlatPass> block_b{{x, opp}, {y, first}};
  if (!same_order) std::swap(block_b[0], block_b[1]);
  FlatCode out = f;
  auto insert_at = [&out](std::size_t gap, const std::vector<FlatPass>& block) {
    out.word.insert(out.word.begin() + static_cast<std::ptrdiff_t>(gap),
                    block.begin(), block.end());
  };
  if (gap_a == gap_b) {
    if (a_block_first) {
      insert_at(gap_a, block_b);
      insert_at(gap_a, block_a);
    } else {
      insert_at(gap_a, block_a);
      insert_at(gap_a, block_b);
    }
  } else if (gap_a > gap_b) {
    insert_at(gap_a, block_a);
    insert_at(gap_b, block_b);
  } else {
    insert_at(gap_b, block_b);
    insert_at(gap_a, block_a);
  }
  validate_flat(out);
  return out;
}

// ---------------------------------------------------------------------------
// Bounded triviality search.
// ---------------------------------------------------------------------------

enum class FlatStatus { Trivial, Unknown, NontrivialCertified };

struct FlatCertificate {
  long long n = 0;
  long long dwrithe = 0;
};

struct FlatMoveRecord {
  FlatMove move;
  std::string before; // canonical word the move applies to
  std::string after;  // canonical result
};

struct FlatVerdict {
  FlatStatus status = FlatStatus::Unknown;
  std::vector<FlatMoveRecord> trace; // only for Trivial
  std::optional<FlatCertificate> certificate;
  long long budget_used = 0;
};

struct FlatSearchOutcome {
  FlatVerdict verdict;
  std::set<std::string> visited; // canonical serializations reached
};

inline constexpr long long kDefaultFlatBudget = 100000;
inline constexpr int kDefaultRiiiDepthCap = 8;

/// Breadth-first search over canonicalized flat words. Children are the
/// results of kink/bigon removals first, then triangle slides; at most
/// `riii_cap` slides are spent along any path. `budget` bounds the number of
/// expanded canonical nodes. A nonzero dwrithe certifies nontriviality
/// before any search is attempted.
inline FlatSearchOutcome flat_search(const FlatCode& f,
                                     long long budget = kDefaultFlatBudget,
                                     int riii_cap = kDefaultRiiiDepthCap) {
  FlatSearchOutcome out;
  const int bound = f.empty() ? 0 : flat_index_bound(f);
  for (long long n = 1; n <= bound; ++n) {
    long long v = flat_cheng_dwrithe(f, n);
    if (v != 0) {
      out.verdict.status = FlatStatus::NontrivialCertified;
      out.verdict.certificate = FlatCertificate{n, v};
      return out;
    }
  }

  struct Node {
    FlatCode word;
    int riii_used = 0;
    std::ptrdiff_t parent = -1;
    FlatMoveRecord record; // move producing this node (empty for the root)
  };
  std::vector<Node> nodes;
  nodes.push_back({canonicalize_flat(f), 0, -1, {}});
  out.visited.insert(serialize_flat(nodes[0].word));
  if (nodes[0].word.empty()) {
    out.verdict.status = FlatStatus::Trivial;
    return out;
  }

  auto finish_trivial = [&](std::ptrdiff_t idx) {
    std::vector<FlatMoveRecord> trace;
    for (std::ptrdiff_t i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
      trace.push_back(nodes[i].record);
    std::reverse(trace.begin(), trace.end());
    out.verdict.status = FlatStatus::Trivial;
    out.verdict.trace = std::move(trace);
  };

  std::deque<std::ptrdiff_t> queue{0};
  long long expanded = 0;
  while (!queue.empty()) {
    if (expanded >= budget) {
      out.verdict.status = FlatStatus::Unknown;
      out.verdict.budget_used = budget;
      return out;
    }
    std::ptrdiff_t idx = queue.front();
    queue.pop_front();
    ++expanded;
    FlatCode word = nodes[idx].word; // copy: nodes may reallocate below
    const int riii_used = nodes[idx].riii_used;
    const std::string before = serialize_flat(word);
    for (const FlatMove& move : enumerate_flat_moves(word)) {
      bool is_slide = std::holds_alternative<FlatR3Site>(move);
      if (is_slide && riii_used >= riii_cap) continue;
      FlatCode child = canonicalize_flat(apply_flat_move(word, move));
      std::string key = serialize_flat(child);
      if (!out.visited.insert(key).second) continue;
      nodes.push_back({child, riii_used + (is_slide ? 1 : 0), idx,
                       FlatMoveRecord{move, before, key}});
      if (child.empty()) {
        finish_trivial(static_cast<std::ptrdiff_t>(nodes.size()) - 1);
        out.verdict.budget_used = expanded;
        return out;
      }
      queue.push_back(static_cast<std::ptrdiff_t>(nodes.size()) - 1);
    }
  }
  out.verdict.status = FlatStatus::Unknown;
  out.verdict.budget_used = expanded;
  return out;
}

inline FlatVerdict is_flat_trivial(const FlatCode& f,
                                   long long budget = kDefaultFlatBudget,
                                   int riii_cap = kDefaultRiiiDepthCap) {
  return flat_search(f, budget, riii_cap).verdict;
}

/// Replays a Trivial trace step by step from `start`, validating each before
/// and after word, and confirms it ends at the empty word.
inline bool replay_flat_trace(const FlatCode& start,
                              const std::vector<FlatMoveRecord>& trace) {
  FlatCode w = canonicalize_flat(start);
  for (const FlatMoveRecord& rec : trace) {
    if (serialize_flat(w) != rec.before) return false;
    w = canonicalize_flat(apply_flat_move(w, rec.move));
    if (serialize_flat(w) != rec.after) return false;
  }
  return w.empty();
}

// ---------------------------------------------------------------------------
// Totally flat-trivial: the diagram's flat word and the flat words of all
// its one-crossing smoothings are flat-trivial.
// ---------------------------------------------------------------------------

enum class TftStatus { Trivial, Unknown, Nontrivial };

struct TftReport {
  TftStatus status = TftStatus::Unknown;
  FlatVerdict base;
  std::vector<std::pair<int, FlatVerdict>> smoothings; // keyed by crossing id
};

inline TftReport is_totally_flat_trivial(const Diagram& d,
                                         long long budget = kDefaultFlatBudget,
                                         int riii_cap = kDefaultRiiiDepthCap) {
  TftReport report;
  report.base = is_flat_trivial(flatten(d), budget, riii_cap);
  bool all_trivial = report.base.status == FlatStatus::Trivial;
  bool any_nontrivial = report.base.status == FlatStatus::NontrivialCertified;
  for (const auto& [id, c] : d.crossings()) {
    FlatVerdict v = is_flat_trivial(
        flatten(smooth_against_orientation(d, id).result), budget, riii_cap);
    all_trivial = all_trivial && v.status == FlatStatus::Trivial;
    any_nontrivial = any_nontrivial || v.status == FlatStatus::NontrivialCertified;
    report.smoothings.emplace_back(id, std::move(v));
  }
  report.status = all_trivial ? TftStatus::Trivial
                 : any_nontrivial ? TftStatus::Nontrivial
                                  : TftStatus::Unknown;
  return report;
}

// ---------------------------------------------------------------------------
// JSON forms.
// ---------------------------------------------------------------------------

inline const char* to_string(FlatStatus s) {
  switch (s) {
    case FlatStatus::Trivial: return "trivial";
    case FlatStatus::Unknown: return "unknown";
    case FlatStatus::NontrivialCertified: return "nontrivial_certified";
  }
  return "unknown";
}

inline const char* to_string(TftStatus s) {
  switch (s) {
    case TftStatus::Trivial: return "trivial";
    case TftStatus::Unknown: return "unknown";
    case TftStatus::Nontrivial: return "nontrivial";
  }
  return "unknown";
}

inline nlohmann::ordered_json flat_move_json(const FlatMove& move) {
  nlohmann::ordered_json j;
  if (const auto* s = std::get_if<FlatR1Site>(&move)) {
    j["kind"] = "r1_remove";
    j["pos"] = s->pos;
    j["id"] = s->id;
  } else if (const auto* s = std::get_if<FlatR2Site>(&move)) {
    j["kind"] = "r2_remove";
    j["pos_a"] = s->pos_a;
    j["pos_b"] = s->pos_b;
    j["x"] = s->x;
    j["y"] = s->y;
  } else if (const auto* s = std::get_if<FlatR3Site>(&move)) {
    j["kind"] = "r3";
    j["sides"] = {s->side_pos[0], s->side_pos[1], s->side_pos[2]};
  }
  return j;
}

inline nlohmann::ordered_json flat_verdict_json(const FlatVerdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (const FlatMoveRecord& rec : v.trace) {
    nlohmann::ordered_json step;
    step["move"] = flat_move_json(rec.move);
    step["before"] = rec.before;
    step["after"] = rec.after;
    trace.push_back(std::move(step));
  }
  j["trace"] = std::move(trace);
  if (v.certificate) {
    j["certificate"] = {{"n", v.certificate->n},
                        {"dwrithe", v.certificate->dwrithe}};
  } else {
    j["certificate"] = nullptr;
  }
  j["budget_used"] = v.budget_used;
  return j;
}

inline nlohmann::ordered_json tft_json(const TftReport& r) {
  nlohmann::ordered_json j;
  j["status"] = to_string(r.status);
  j["base"] = flat_verdict_json(r.base);
  nlohmann::ordered_json sm = nlohmann::ordered_json::array();
  for (const auto& [id, v] : r.smoothings) {
    nlohmann::ordered_json item;
    item["crossing"] = id;
    item["verdict"] = flat_verdict_json(v);
    sm.push_back(std::move(item));
  }
  j["smoothings"] = std::move(sm);
  return j;
}

} // namespace vknot
