#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "vknot/errors.hpp"

namespace vknot {

namespace detail {

/// Shared term formatting. Variable parts joined with '*'; the magnitude is
/// omitted when it is 1 and a variable part is present ("t^-1", not "1*t^-1").
inline std::string term_text(long long magnitude, const std::string& vars) {
  if (vars.empty()) return std::to_string(magnitude);
  if (magnitude == 1) return vars;
  return std::to_string(magnitude) + "*" + vars;
}

inline std::string power_text(const char* var, int exp) {
  if (exp == 0) return {};
  std::string out = var;
  if (exp != 1) out += "^" + std::to_string(exp);
  return out;
}

inline void append_term(std::string& out, long long coeff, const std::string& vars) {
  long long mag = coeff < 0 ? -coeff : coeff;
  if (out.empty()) {
    if (coeff < 0) out += "-";
    out += term_text(mag, vars);
  } else {
    out += (coeff < 0) ? " - " : " + ";
    out += term_text(mag, vars);
  }
}

} // namespace detail

/// Sparse Laurent polynomial in t with exact integer coefficients. The term
/// map never stores zero coefficients, so == is structural equality.
struct LaurentPoly {
  std::map<int, long long> terms; // exponent -> nonzero coefficient

  static LaurentPoly monomial(int exp, long long coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
  }

  void add_term(int exp, long long coeff) {
    if (coeff == 0) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
      terms.emplace(exp, coeff);
    } else if ((it->second += coeff) == 0) {
      terms.erase(it);
    }
  }

  bool is_zero() const noexcept { return terms.empty(); }

  long long coeff(int exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? 0 : it->second;
  }

  /// Value at t = 1.
  long long sum_of_coefficients() const {
    long long s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  /// t -> t^{-1}.
  LaurentPoly substitute_t_inverse() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms) out.terms.emplace(-e, c);
    return out;
  }

  /// Coefficients symmetric under t -> t^{-1}.
  bool is_palindromic() const { return *this == substitute_t_inverse(); }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Ascending exponents, e.g. "t^-1 - 2 + t"; the zero polynomial is "0".
  std::string render() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms)
      detail::append_term(out, c, detail::power_text("t", e));
    return out;
  }

  /// JSON form: list of [exponent, coefficient] pairs, ascending exponent.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms) arr.push_back({e, c});
    return arr;
  }
};

/// Sparse Laurent polynomial in t and l, same exactness contract.
struct LaurentPoly2 {
  std::map<std::pair<int, int>, long long> terms; // (t-exp, l-exp) -> coeff

  static LaurentPoly2 monomial(int t_exp, int l_exp, long long coeff) {
    LaurentPoly2 p;
    p.add_term(t_exp, l_exp, coeff);
    return p;
  }

  void add_term(int t_exp, int l_exp, long long coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(t_exp, l_exp);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, coeff);
    } else if ((it->second += coeff) == 0) {
      terms.erase(it);
    }
  }

  bool is_zero() const noexcept { return terms.empty(); }

  long long coeff(int t_exp, int l_exp) const {
    auto it = terms.find({t_exp, l_exp});
    return it == terms.end() ? 0 : it->second;
  }

  LaurentPoly2& operator+=(const LaurentPoly2& o) {
    for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
    return *this;
  }

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }

  LaurentPoly2 operator-() const {
    LaurentPoly2 out = *this;
    for (auto& [k, c] : out.terms) c = -c;
    return out;
  }

  friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a + (-b);
  }

  /// l -> 1, collapsing to a one-variable polynomial.
  LaurentPoly substitute_l_one() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms) out.add_term(k.first, c);
    return out;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Ascending t-exponent, then ascending l-exponent, e.g. "t^-2*l^2 + t".
  std::string render() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
      std::string vars = detail::power_text("t", k.first);
      std::string lpart = detail::power_text("l", k.second);
      if (!lpart.empty()) {
        if (!vars.empty()) vars += "*";
        vars += lpart;
      }
      detail::append_term(out, c, vars);
    }
    return out;
  }

  /// JSON form: list of [t-exp, l-exp, coefficient] triples.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [k, c] : terms) arr.push_back({k.first, k.second, c});
    return arr;
  }
};

/// Embeds a one-variable polynomial with l-exponent 0 everywhere.
inline LaurentPoly2 embed(const LaurentPoly& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms) out.terms.emplace(std::make_pair(e, 0), c);
  return out;
}

} // namespace vknot
