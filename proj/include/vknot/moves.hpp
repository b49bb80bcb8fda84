#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"

namespace vknot {

// ---------------------------------------------------------------------------
// Move sites. Removal and rewrite sites hold positions into the current pass
// sequence plus enough expected structure to detect staleness; insertion
// sites are parameterized by gaps. Gap g means "insert before position g"
// (cyclically, g = 0 is between the last and first pass); a diagram with n
// passes has max(n, 1) gaps.
// ---------------------------------------------------------------------------

/// Kink removal: passes at pos, pos+1 belong to the same crossing. Any role
/// order and either sign form a removable kink.
struct R1RemoveSite {
  std::size_t pos = 0;
  int id = 0;
};

/// Bigon removal: the two passes of the over pair are adjacent on one strand
/// and the two under passes adjacent on the other, with opposite crossing
/// signs. Both relative orders of the under pair are admissible; each is
/// realized by a planar bigon (the poking strand may approach from either
/// side, which also yields both sign distributions).
struct R2RemoveSite {
  std::size_t over_pos = 0;  // first position of the adjacent over pair
  std::size_t under_pos = 0; // first position of the adjacent under pair
  int x = 0;                 // id of the first pass of the over pair
  int y = 0;                 // id of the second pass of the over pair
};

/// Triangle slide: three adjacent pass pairs (the triangle's sides), one pair
/// all-over, one all-under, one mixed. Applying the move swaps the two passes
/// inside each pair; the move is an involution.
struct R3Site {
  std::array<std::size_t, 3> side_pos{}; // first positions of the three pairs
};

struct R1InsertSite {
  std::size_t gap = 0;
  bool over_first = true;
  int sign = +1;
};

/// Inserts a fresh bigon: an adjacent over pair at over_gap and the matching
/// under pair at under_gap, signs opposite. `same_order` chooses whether the
/// under pair repeats the over pair's order; `over_block_first` breaks the
/// tie when both gaps coincide.
struct R2InsertSite {
  std::size_t over_gap = 0;
  std::size_t under_gap = 0;
  bool same_order = true;
  int first_sign = +1;
  bool over_block_first = true;
};

using MoveSite =
    std::variant<R1RemoveSite, R2RemoveSite, R3Site, R1InsertSite, R2InsertSite>;

namespace detail {

struct RiiiSide {
  int first_id = 0;
  int second_id = 0;
  Role first_role = Role::Over;
  Role second_role = Role::Over;
  int first_sign = +1;
  int second_sign = +1;
};

inline bool side_is(const RiiiSide& s, Role a, Role b) {
  return s.first_role == a && s.second_role == b;
}

inline int common_id(const RiiiSide& a, const RiiiSide& b) {
  if (a.first_id == b.first_id || a.first_id == b.second_id) return a.first_id;
  if (a.second_id == b.first_id || a.second_id == b.second_id) return a.second_id;
  return 0;
}

inline int sign_of(const RiiiSide& s, int id) {
  return (s.first_id == id) ? s.first_sign : s.second_sign;
}

/// Validity of a triangle-slide pattern. One side must carry two over
/// passes (the top strand T), one two under passes (the bottom strand B),
/// and one a mix (the middle strand M). With x = T&M, y = T&B, z = M&B and
/// direction markers taken from the orders in which the sides list their
/// crossings, a planar triangle exists exactly when the three products
/// sign(x)*eT*eM, sign(y)*eT*eB, sign(z)*eM*eB agree; the two possible
/// common values correspond to the two mirror families of the move.
inline bool riii_pattern_valid(const RiiiSide& s0, const RiiiSide& s1,
                               const RiiiSide& s2) {
  const RiiiSide* t = nullptr;
  const RiiiSide* m = nullptr;
  const RiiiSide* b = nullptr;
  for (const RiiiSide* s : {&s0, &s1, &s2}) {
    if (side_is(*s, Role::Over, Role::Over)) {
      if (t) return false;
      t = s;
    } else if (side_is(*s, Role::Under, Role::Under)) {
      if (b) return false;
      b = s;
    } else {
      if (m) return false;
      m = s;
    }
  }
  if (!t || !m || !b) return false;

  int x = common_id(*t, *m);
  int y = common_id(*t, *b);
  int z = common_id(*m, *b);
  if (x == 0 || y == 0 || z == 0) return false;
  if (x == y || y == z || x == z) return false;
  // The mixed side must meet x as the under pass and z as the over pass;
  // with valid pairings this follows from T being x's and y's over side.
  Role mx = (m->first_id == x) ? m->first_role : m->second_role;
  Role mz = (m->first_id == z) ? m->first_role : m->second_role;
  if (mx != Role::Under || mz != Role::Over) return false;

  int et = (t->first_id == x) ? +1 : -1;
  int em = (m->first_id == x) ? +1 : -1;
  int eb = (b->first_id == y) ? +1 : -1;
  int vx = sign_of(*t, x) * et * em;
  int vy = sign_of(*t, y) * et * eb;
  int vz = sign_of(*m, z) * em * eb;
  return vx == vy && vy == vz;
}

inline RiiiSide side_at(const std::vector<PassToken>& passes, std::size_t pos) {
  const std::size_t n = passes.size();
  const PassToken& a = passes[pos];
  const PassToken& b = passes[(pos + 1) % n];
  return RiiiSide{a.crossing_id, b.crossing_id, a.role, b.role, a.sign, b.sign};
}

inline bool positions_distinct(std::initializer_list<std::size_t> xs) {
  std::vector<std::size_t> v(xs);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace detail

inline bool r1_remove_applicable(const Diagram& d, const R1RemoveSite& s) {
  const std::size_t n = d.pass_count();
  if (n < 2 || s.pos >= n) return false;
  const auto& passes = d.passes();
  return passes[s.pos].crossing_id == s.id &&
         passes[(s.pos + 1) % n].crossing_id == s.id;
}

inline bool r2_remove_applicable(const Diagram& d, const R2RemoveSite& s) {
  const std::size_t n = d.pass_count();
  if (n < 4 || s.over_pos >= n || s.under_pos >= n) return false;
  const auto& passes = d.passes();
  const PassToken& o1 = passes[s.over_pos];
  const PassToken& o2 = passes[(s.over_pos + 1) % n];
  const PassToken& u1 = passes[s.under_pos];
  const PassToken& u2 = passes[(s.under_pos + 1) % n];
  if (o1.role != Role::Over || o2.role != Role::Over) return false;
  if (u1.role != Role::Under || u2.role != Role::Under) return false;
  if (o1.crossing_id != s.x || o2.crossing_id != s.y || s.x == s.y) return false;
  bool same_ids = (u1.crossing_id == s.x && u2.crossing_id == s.y) ||
                  (u1.crossing_id == s.y && u2.crossing_id == s.x);
  if (!same_ids) return false;
  if (o1.sign != -o2.sign) return false;
  return detail::positions_distinct(
      {s.over_pos, (s.over_pos + 1) % n, s.under_pos, (s.under_pos + 1) % n});
}

inline bool r3_applicable(const Diagram& d, const R3Site& s) {
  const std::size_t n = d.pass_count();
  if (n < 6) return false;
  for (std::size_t p : s.side_pos)
    if (p >= n) return false;
  if (!detail::positions_distinct({s.side_pos[0], (s.side_pos[0] + 1) % n,
                                   s.side_pos[1], (s.side_pos[1] + 1) % n,
                                   s.side_pos[2], (s.side_pos[2] + 1) % n}))
    return false;
  const auto& passes = d.passes();
  auto a = detail::side_at(passes, s.side_pos[0]);
  auto b = detail::side_at(passes, s.side_pos[1]);
  auto c = detail::side_at(passes, s.side_pos[2]);
  if (a.first_id == a.second_id || b.first_id == b.second_id ||
      c.first_id == c.second_id)
    return false;
  return detail::riii_pattern_valid(a, b, c);
}

/// All applicable sites: kink and bigon removals, triangle slides, and the
/// finite family of insertion sites (one per gap and parameter choice).
/// Order is deterministic.
inline std::vector<MoveSite> enumerate_moves(const Diagram& d) {
  std::vector<MoveSite> sites;
  const std::size_t n = d.pass_count();
  const auto& passes = d.passes();

  for (std::size_t p = 0; p < n; ++p) {
    R1RemoveSite s{p, passes[p].crossing_id};
    if (r1_remove_applicable(d, s)) sites.push_back(s);
  }

  for (std::size_t p = 0; p < n; ++p) {
    if (passes[p].role != Role::Over) continue;
    for (std::size_t q = 0; q < n; ++q) {
      R2RemoveSite s{p, q, passes[p].crossing_id,
                     passes[(p + 1) % n].crossing_id};
      if (r2_remove_applicable(d, s)) sites.push_back(s);
    }
  }

  std::vector<std::size_t> side_starts;
  for (std::size_t p = 0; p < n; ++p)
    if (passes[p].crossing_id != passes[(p + 1) % n].crossing_id)
      side_starts.push_back(p);
  for (std::size_t i = 0; i < side_starts.size(); ++i)
    for (std::size_t j = i + 1; j < side_starts.size(); ++j)
      for (std::size_t k = j + 1; k < side_starts.size(); ++k) {
        R3Site s{{side_starts[i], side_starts[j], side_starts[k]}};
        if (r3_applicable(d, s)) sites.push_back(s);
      }

  const std::size_t gaps = n == 0 ? 1 : n;
  for (std::size_t g = 0; g < gaps; ++g)
    for (bool over_first : {true, false})
      for (int sign : {+1, -1})
        sites.push_back(R1InsertSite{g, over_first, sign});
  for (std::size_t g1 = 0; g1 < gaps; ++g1)
    for (std::size_t g2 = 0; g2 < gaps; ++g2)
      for (bool same_order : {true, false})
        for (int sign : {+1, -1}) {
          if (g1 == g2) {
            sites.push_back(R2InsertSite{g1, g2, same_order, sign, true});
            sites.push_back(R2InsertSite{g1, g2, same_order, sign, false});
          } else {
            sites.push_back(R2InsertSite{g1, g2, same_order, sign, true});
          }
        }
  return sites;
}

namespace detail {

inline RawCode erase_positions(const std::vector<PassToken>& passes,
                               std::initializer_list<std::size_t> remove) {
  std::vector<bool> drop(passes.size(), false);
  for (std::size_t p : remove) drop[p] = true;
  RawCode out;
  out.tokens.reserve(passes.size());
  for (std::size_t p = 0; p < passes.size(); ++p)
    if (!drop[p]) out.tokens.push_back(passes[p]);
  return out;
}

inline int max_crossing_id(const Diagram& d) {
  int m = 0;
  for (const auto& [id, c] : d.crossings()) m = std::max(m, id);
  return m;
}

} // namespace detail

/// Applies a move. The site is revalidated against the current diagram and a
/// StaleSite error is raised if it no longer matches; the result is always a
/// valid code (checked).
inline Diagram apply_move(const Diagram& d, const MoveSite& site) {
  const std::size_t n = d.pass_count();
  const auto& passes = d.passes();
  auto stale = [] { return Error(errc::stale_site, "move site does not match the diagram"); };

  if (const auto* s = std::get_if<R1RemoveSite>(&site)) {
    if (!r1_remove_applicable(d, *s)) throw stale();
    return Diagram(detail::erase_positions(passes, {s->pos, (s->pos + 1) % n}));
  }
  if (const auto* s = std::get_if<R2RemoveSite>(&site)) {
    if (!r2_remove_applicable(d, *s)) throw stale();
    return Diagram(detail::erase_positions(
        passes,
        {s->over_pos, (s->over_pos + 1) % n, s->under_pos, (s->under_pos + 1) % n}));
  }
  if (const auto* s = std::get_if<R3Site>(&site)) {
    if (!r3_applicable(d, *s)) throw stale();
    RawCode out = d.code();
    for (std::size_t p : s->side_pos)
      std::swap(out.tokens[p], out.tokens[(p + 1) % n]);
    return Diagram(std::move(out));
  }
  if (const auto* s = std::get_if<R1InsertSite>(&site)) {
    const std::size_t gaps = n == 0 ? 1 : n;
    if (s->gap >= gaps || (s->sign != +1 && s->sign != -1)) throw stale();
    int id = detail::max_crossing_id(d) + 1;
    RawCode out = d.code();
    PassToken first{s->over_first ? Role::Over : Role::Under, id, s->sign};
    PassToken second{s->over_first ? Role::Under : Role::Over, id, s->sign};
    out.tokens.insert(out.tokens.begin() + static_cast<std::ptrdiff_t>(s->gap),
                      {first, second});
    return Diagram(std::move(out));
  }
  const auto* s = std::get_if<R2InsertSite>(&site);
  if (!s) throw internal_error("unhandled move site kind");
  const std::size_t gaps = n == 0 ? 1 : n;
  if (s->over_gap >= gaps || s->under_gap >= gaps ||
      (s->first_sign != +1 && s->first_sign != -1))
    throw stale();
  int a = detail::max_crossing_id(d) + 1;
  int b = a + 1;
  std::vector<PassToken> over_block{{Role::Over, a, s->first_sign},
                                    {Role::Over, b, -s->first_sign}};
  std::vector<PassToken> under_block{{Role::Under, a, s->first_sign},
                                     {Role::Under, b, -s->first_sign}};
  if (!s->same_order) std::swap(under_block[0], under_block[1]);
  RawCode out = d.code();
  auto insert_at = [&out](std::size_t gap, const std::vector<PassToken>& block) {
    out.tokens.insert(out.tokens.begin() + static_cast<std::ptrdiff_t>(gap),
                      block.begin(), block.end());
  };
  if (s->over_gap == s->under_gap) {
    if (s->over_block_first) {
      insert_at(s->over_gap, under_block);
      insert_at(s->over_gap, over_block);
    } else {
      insert_at(s->over_gap, over_block);
      insert_at(s->over_gap, under_block);
    }
  } else if (s->over_gap > s->under_gap) {
    insert_at(s->over_gap, over_block);
    insert_at(s->under_gap, under_block);
  } else {
    insert_at(s->under_gap, under_block);
    insert_at(s->over_gap, over_block);
  }
  return Diagram(std::move(out));
}

/// Applies `steps` uniformly chosen applicable moves with a deterministic
/// generator. Insertions that would push the crossing count past
/// `crossing_cap` are excluded from the menu. Same seed, same output.
inline Diagram scramble(const Diagram& d, int steps, std::uint64_t seed,
                        std::size_t crossing_cap = 12) {
  std::mt19937_64 rng(seed);
  Diagram cur = d;
  for (int step = 0; step < steps; ++step) {
    std::vector<MoveSite> menu;
    for (MoveSite& site : enumerate_moves(cur)) {
      if (std::holds_alternative<R1InsertSite>(site) &&
          cur.crossing_count() + 1 > crossing_cap)
        continue;
      if (std::holds_alternative<R2InsertSite>(site) &&
          cur.crossing_count() + 2 > crossing_cap)
        continue;
      menu.push_back(std::move(site));
    }
    if (menu.empty()) break;
    cur = apply_move(cur, menu[static_cast<std::size_t>(rng() % menu.size())]);
  }
  return cur;
}

} // namespace vknot
