#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "scatter/field.hpp"

namespace scatter {

struct Term {
  std::uint32_t r = 0;  // exponent index: the monomial is x^{q^r}
  FFElement a;

  friend bool operator==(const Term&, const Term&) = default;
};

/// S(x) = sum a_i x^{q^{r_i}}: non-empty, exponents strictly increasing and
/// reduced mod n, no zero coefficients. Only `normalize` builds one.
class LinearizedPolynomial {
 public:
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint32_t min_exponent() const noexcept { return terms_.front().r; }
  const Term& front() const noexcept { return terms_.front(); }

  friend bool operator==(const LinearizedPolynomial&, const LinearizedPolynomial&) = default;
  friend LinearizedPolynomial normalize(const FieldCtx& ctx, std::vector<Term> raw);

 private:
  std::vector<Term> terms_;
};

inline LinearizedPolynomial normalize(const FieldCtx& ctx, std::vector<Term> raw) {
  for (auto& t : raw) t.r %= ctx.n();
  std::stable_sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.r < y.r; });
  LinearizedPolynomial out;
  for (const auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().r == t.r)
      out.terms_.back().a = add(ctx, out.terms_.back().a, t.a);
    else
      out.terms_.push_back(t);
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.a.is_zero(); });
  if (out.terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "no nonzero terms remain");
  return out;
}

/// Convenience for polynomials with given coefficient logs.
inline LinearizedPolynomial from_log_terms(const FieldCtx& ctx,
                                           const std::vector<std::pair<std::uint32_t, std::uint64_t>>& terms) {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (auto [r, k] : terms) raw.push_back({r, ctx.from_log(k)});
  return normalize(ctx, std::move(raw));
}

inline FFElement evaluate(const FieldCtx& ctx, const LinearizedPolynomial& s, const FFElement& x) {
  if (x.is_zero()) return x;
  std::uint32_t acc = FFElement::kNoLog;
  for (const auto& t : s.terms()) {
    const std::uint64_t l = std::uint64_t{t.a.log} + std::uint64_t{x.log} * ctx.q_power_mod(t.r);
    acc = ctx.add_logs(acc, static_cast<std::uint32_t>(l % ctx.order()));
  }
  return ctx.element_from_log_or_zero(acc);
}

/// S(x) / x^{q^t}
inline FFElement ratio_map(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t, const FFElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "ratio at x = 0");
  if (t >= ctx.n()) throw Error(ErrorKind::BadIndex, "index must be below n");
  return div(ctx, evaluate(ctx, s, x), frobenius(ctx, x, t));
}

/// S^t(x) = sum a_i x^{q^{r_i - t}}
inline LinearizedPolynomial shift_down(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t) {
  if (t > s.min_exponent())
    throw Error(ErrorKind::IndexExceedsMinExponent,
                "shift " + std::to_string(t) + " exceeds least exponent " + std::to_string(s.min_exponent()));
  std::vector<Term> raw = s.terms();
  for (auto& term : raw) term.r -= t;
  return normalize(ctx, std::move(raw));
}

/// S minus its least-exponent term.
inline LinearizedPolynomial strip_min_term(const FieldCtx& ctx, const LinearizedPolynomial& s) {
  if (s.size() < 2) throw Error(ErrorKind::WouldBeZero, "stripping the only term");
  return normalize(ctx, std::vector<Term>(s.terms().begin() + 1, s.terms().end()));
}

/// a_1 x + sum_{i>=2} a_i x^{q^{r_i - r_1}}
inline LinearizedPolynomial t_transform(const FieldCtx& ctx, const LinearizedPolynomial& s) {
  return shift_down(ctx, s, s.min_exponent());
}

/// S_rho^t(x) = sum a_i (rho^{q^{r_i - t}} - rho) x^{q^{r_i - t}}; this is
/// S^t(rho x) - rho S^t(x).
inline LinearizedPolynomial rho_transform(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t,
                                          const FFElement& rho) {
  if (in_base_subfield(ctx, rho)) throw Error(ErrorKind::RhoInBaseField, "rho must lie outside F_q");
  if (t > s.min_exponent())
    throw Error(ErrorKind::IndexExceedsMinExponent, "shift exceeds least exponent");
  std::vector<Term> raw;
  for (const auto& term : s.terms()) {
    const std::uint32_t e = term.r - t;
    raw.push_back({e, mul(ctx, term.a, sub(ctx, frobenius(ctx, rho, e), rho))});
  }
  return normalize(ctx, std::move(raw));
}

}  // namespace scatter
