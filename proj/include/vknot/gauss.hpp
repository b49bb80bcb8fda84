#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

enum class Role : std::uint8_t { Over, Under };

/// One passage through a classical crossing: the role this strand plays
/// (over or under), the crossing label, and the crossing sign.
struct PassToken {
  Role role = Role::Over;
  int crossing_id = 0; // >= 1
  int sign = +1;       // +1 or -1

  friend bool operator==(const PassToken&, const PassToken&) = default;
};

/// Total order used for canonical-form selection: O before U, then the
/// crossing id, then '+' before '-'.
inline bool token_less(const PassToken& a, const PassToken& b) {
  if (a.role != b.role) return a.role == Role::Over;
  if (a.crossing_id != b.crossing_id) return a.crossing_id < b.crossing_id;
  return a.sign > b.sign;
}

/// A Gauss code: the cyclic word of passes met while traversing the knot.
/// Each crossing id occurs exactly twice, once Over and once Under, with the
/// same sign both times. The empty word is the unknot. Virtual crossings are
/// not recorded; the code determines the virtual knot up to virtual moves.
struct RawCode {
  std::vector<PassToken> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  friend bool operator==(const RawCode&, const RawCode&) = default;
};

/// Checks the pairing invariant; error indices refer to token positions.
inline void validate(const RawCode& code) {
  struct Seen {
    std::size_t first_index = 0;
    int sign = 0;
    bool over = false;
    bool under = false;
  };
  std::map<int, Seen> seen;
  for (std::size_t i = 0; i < code.tokens.size(); ++i) {
    const PassToken& t = code.tokens[i];
    if (t.crossing_id < 1)
      throw Error(errc::malformed_token, "crossing id must be >= 1", i);
    if (t.sign != +1 && t.sign != -1)
      throw Error(errc::malformed_token, "crossing sign must be +1 or -1", i);
    auto [it, fresh] = seen.try_emplace(t.crossing_id);
    Seen& s = it->second;
    if (fresh) {
      s.first_index = i;
      s.sign = t.sign;
    } else {
      if (t.sign != s.sign)
        throw Error(errc::sign_mismatch,
                    "crossing " + std::to_string(t.crossing_id) +
                        " recorded with both signs",
                    i);
      bool dup = (t.role == Role::Over) ? s.over : s.under;
      if (dup)
        throw Error(errc::duplicate_pass,
                    "crossing " + std::to_string(t.crossing_id) +
                        " passed twice with the same role",
                    i);
    }
    (t.role == Role::Over ? s.over : s.under) = true;
  }
  for (const auto& [id, s] : seen) {
    if (!s.over || !s.under)
      throw Error(errc::unpaired_pass,
                  "crossing " + std::to_string(id) + " appears only once",
                  s.first_index);
  }
}

/// Parses text of the form "O1+O2+U1+U2+". Whitespace between tokens is
/// ignored. Both ASCII '-' and U+2212 are accepted as the minus sign on
/// input; serialization always emits ASCII. Error indices are token indices.
inline RawCode parse(std::string_view text) {
  RawCode code;
  std::size_t pos = 0;
  std::size_t token_index = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    PassToken t;
    char role = text[pos];
    if (role == 'O')
      t.role = Role::Over;
    else if (role == 'U')
      t.role = Role::Under;
    else
      throw Error(errc::malformed_token,
                  std::string("expected 'O' or 'U', got '") + role + "'",
                  token_index);
    ++pos;
    std::size_t digits_begin = pos;
    long long id = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      id = id * 10 + (text[pos] - '0');
      if (id > 1000000)
        throw Error(errc::malformed_token, "crossing id out of range",
                    token_index);
      ++pos;
    }
    if (pos == digits_begin || id < 1)
      throw Error(errc::malformed_token, "expected a positive crossing id",
                  token_index);
    t.crossing_id = static_cast<int>(id);
    if (pos < text.size() && text[pos] == '+') {
      t.sign = +1;
      ++pos;
    } else if (pos < text.size() && text[pos] == '-') {
      t.sign = -1;
      ++pos;
    } else if (pos + 3 <= text.size() &&
               static_cast<unsigned char>(text[pos]) == 0xE2 &&
               static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
               static_cast<unsigned char>(text[pos + 2]) == 0x92) {
      t.sign = -1; // U+2212 minus sign
      pos += 3;
    } else {
      throw Error(errc::malformed_token, "expected '+' or '-' after crossing id",
                  token_index);
    }
    code.tokens.push_back(t);
    ++token_index;
    skip_ws();
  }
  validate(code);
  return code;
}

/// Renders the linear form starting at pass 0, e.g. "O1+O2+U1+U2+".
inline std::string serialize(const RawCode& code) {
  std::string out;
  out.reserve(code.size() * 4);
  for (const PassToken& t : code.tokens) {
    out += (t.role == Role::Over) ? 'O' : 'U';
    out += std::to_string(t.crossing_id);
    out += (t.sign > 0) ? '+' : '-';
  }
  return out;
}

/// Moves the basepoint so traversal starts at pass `k`.
inline RawCode rotated(const RawCode& code, std::size_t k) {
  if (code.empty()) return code;
  k %= code.size();
  RawCode out;
  out.tokens.reserve(code.size());
  out.tokens.insert(out.tokens.end(), code.tokens.begin() + k, code.tokens.end());
  out.tokens.insert(out.tokens.end(), code.tokens.begin(), code.tokens.begin() + k);
  return out;
}

/// Renames crossing ids to 1,2,3,... in order of first appearance.
inline RawCode relabeled_first_appearance(const RawCode& code) {
  std::map<int, int> remap;
  int next = 1;
  RawCode out = code;
  for (PassToken& t : out.tokens) {
    auto [it, fresh] = remap.try_emplace(t.crossing_id, next);
    if (fresh) ++next;
    t.crossing_id = it->second;
  }
  return out;
}

/// Canonical form: the lexicographically least relabeled rotation under
/// `token_less`. Quotients exactly basepoint choice and crossing naming;
/// mirror images and orientation reversal are deliberately NOT identified.
/// Two codes describe the same based-free diagram iff canonical forms match.
inline RawCode canonicalize(const RawCode& code) {
  if (code.empty()) return code;
  RawCode best = relabeled_first_appearance(code);
  for (std::size_t k = 1; k < code.size(); ++k) {
    RawCode cand = relabeled_first_appearance(rotated(code, k));
    if (std::lexicographical_compare(cand.tokens.begin(), cand.tokens.end(),
                                     best.tokens.begin(), best.tokens.end(),
                                     token_less))
      best = std::move(cand);
  }
  return best;
}

/// Mirror image: every classical crossing is switched. Switching a crossing
/// exchanges which strand is on top and flips the geometric sign, so every
/// pass swaps role and every crossing flips sign.
inline RawCode mirrored(const RawCode& code) {
  RawCode out = code;
  for (PassToken& t : out.tokens) {
    t.role = (t.role == Role::Over) ? Role::Under : Role::Over;
    t.sign = -t.sign;
  }
  return out;
}

/// Orientation reversal: the pass sequence reverses. Roles are unaffected
/// (over/under does not depend on travel direction) and signs are kept,
/// because reversing both strands at a crossing preserves its sign.
inline RawCode reversed(const RawCode& code) {
  RawCode out = code;
  std::reverse(out.tokens.begin(), out.tokens.end());
  return out;
}

} // namespace vknot
