#pragma once

// Polynomial text format: comma-separated `r:coeff` terms where coeff is
// `g^k` (a power of the canonical gamma) or a base-p coefficient vector
// `[c0,c1,...]`, constant term first. Example: `1:g^0,3:g^4`.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"
#include "scatter/symbolic.hpp"

namespace scatter {

struct RawTerm {
  std::uint32_t r = 0;
  std::variant<BigInt, std::vector<std::uint32_t>> coeff;  // gamma-log or coefficient vector
};

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  s = strip(s);
  if (!all_digits(s) || s.size() > 18) throw Error(ErrorKind::Parse, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return std::stoull(std::string(s));
}

/// Split on commas that are not inside brackets.
inline std::vector<std::string_view> split_terms(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    else if (text[i] == ']') --depth;
    else if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
    if (depth < 0) throw Error(ErrorKind::Parse, "unbalanced ']'");
  }
  if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced '['");
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace detail

inline std::vector<RawTerm> parse_poly_text(std::string_view text) {
  text = detail::strip(text);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
  std::vector<RawTerm> out;
  for (auto part : detail::split_terms(text)) {
    part = detail::strip(part);
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorKind::Parse, "term '" + std::string(part) + "' lacks ':'");
    RawTerm term;
    term.r = static_cast<std::uint32_t>(detail::parse_u64(part.substr(0, colon), "exponent"));
    auto c = detail::strip(part.substr(colon + 1));
    if (c.starts_with("g^")) {
      auto k = detail::strip(c.substr(2));
      if (!detail::all_digits(k)) throw Error(ErrorKind::Parse, "bad gamma exponent '" + std::string(k) + "'");
      term.coeff = BigInt(std::string(k));
    } else if (c.starts_with("[") && c.ends_with("]")) {
      std::vector<std::uint32_t> v;
      auto body = detail::strip(c.substr(1, c.size() - 2));
      if (body.empty()) throw Error(ErrorKind::Parse, "empty coefficient vector");
      for (auto d : detail::split_terms(body)) v.push_back(static_cast<std::uint32_t>(detail::parse_u64(d, "digit")));
      term.coeff = std::move(v);
    } else {
      throw Error(ErrorKind::Parse, "coefficient '" + std::string(c) + "' is neither g^k nor [c0,...]");
    }
    out.push_back(std::move(term));
  }
  return out;
}

inline LinearizedPolynomial to_polynomial(const FieldCtx& ctx, const std::vector<RawTerm>& raw) {
  std::vector<Term> terms;
  for (const auto& t : raw) {
    FFElement a;
    if (const auto* k = std::get_if<BigInt>(&t.coeff)) {
      a = ctx.from_log(static_cast<std::uint64_t>(*k % ctx.order()));
    } else {
      const auto& v = std::get<std::vector<std::uint32_t>>(t.coeff);
      try {
        a = ctx.from_coeffs(v);
      } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
      }
    }
    terms.push_back({t.r, a});
  }
  return normalize(ctx, std::move(terms));
}

inline LinearizedPolynomial parse_poly(const FieldCtx& ctx, std::string_view text) {
  return to_polynomial(ctx, parse_poly_text(text));
}

/// Symbolic form; coefficient vectors need tables and are rejected.
inline SymbolicPoly to_symbolic(const FieldParams& fp, const std::vector<RawTerm>& raw) {
  std::vector<SymbolicTerm> terms;
  for (const auto& t : raw) {
    const auto* k = std::get_if<BigInt>(&t.coeff);
    if (!k) throw Error(ErrorKind::Parse, "coefficient vectors need a tabulated field; use g^k");
    terms.push_back({t.r, *k});
  }
  return make_symbolic(fp, std::move(terms));
}

inline std::string format_element(const FFElement& a) {
  if (a.is_zero()) return "0";
  return "g^" + std::to_string(a.log);
}

inline std::string format_poly(const LinearizedPolynomial& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    if (!out.empty()) out += ',';
    out += std::to_string(t.r) + ":" + format_element(t.a);
  }
  return out;
}

inline std::string format_poly(const SymbolicPoly& s) {
  std::string out;
  for (const auto& t : s.terms) {
    if (!out.empty()) out += ',';
    out += std::to_string(t.r) + ":g^" + t.log.str();
  }
  return out;
}

}  // namespace scatter
