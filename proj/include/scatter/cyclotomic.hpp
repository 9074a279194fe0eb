#pragma once

// Cyclotomic cosets of F_{q^n}^* and the coset-wise form of a linearized
// polynomial. With q^n - 1 = l*s, C_0 = {gamma^{l j}} and C_i = gamma^i C_0;
// a polynomial S(x) = x^{q^{r_1}} f(x^{s q^{r_1}}) acts on C_i as
// x -> A_i x^{q^{r_1}} with A_i = f(xi^{i q^{r_1}}), xi = gamma^s.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"

namespace scatter {

struct CyclotomicDecomposition {
  std::uint64_t s = 0;
  std::uint64_t l = 0;
  FFElement xi;

  /// x = gamma^{i + l j} lies in C_i.
  std::uint64_t coset_of(const FFElement& x) const {
    if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero lies in no coset");
    return x.log % l;
  }
};

inline CyclotomicDecomposition decompose(const FieldCtx& ctx, std::uint64_t s) {
  if (s == 0 || ctx.order() % s != 0)
    throw Error(ErrorKind::NotADivisor, std::to_string(s) + " does not divide " + std::to_string(ctx.order()));
  return {s, ctx.order() / s, ctx.from_log(s)};
}

/// Integer part of the factorization: r1, d = gcd(n, r_i - r_1), s = q^d - 1
/// and the exponents (q^{r_i - r_1} - 1)/s of f. Works for any q, n whose
/// powers fit in 64 bits.
struct ExponentFactorization {
  std::uint32_t r1 = 0;
  std::uint32_t d = 0;
  std::uint64_t s = 0;
  std::vector<std::uint64_t> f_exponents;  // one per term, first is 0
};

inline ExponentFactorization factorize_exponents(std::uint64_t q, std::uint32_t n,
                                                 const std::vector<std::uint32_t>& exponents) {
  if (exponents.empty()) throw Error(ErrorKind::ZeroPolynomial, "no terms");
  if (!std::is_sorted(exponents.begin(), exponents.end()) ||
      std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end() || exponents.back() >= n)
    throw Error(ErrorKind::InvalidArgument, "exponents must be strictly increasing and below n");
  ExponentFactorization out;
  out.r1 = exponents.front();
  std::uint32_t d = n;
  for (auto r : exponents) d = std::gcd(d, r - out.r1);
  out.d = d;
  auto qpow = [&](std::uint32_t e) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) v *= q;
    return v;
  };
  out.s = qpow(d) - 1;
  for (auto r : exponents) out.f_exponents.push_back((qpow(r - out.r1) - 1) / out.s);
  return out;
}

struct Factorization {
  std::uint32_t r1 = 0;
  std::uint64_t s = 0;
  std::vector<std::pair<std::uint64_t, FFElement>> f_terms;  // (exponent, coefficient)
};

/// S(x) = x^{q^{r1}} f(x^{s q^{r1}}).
inline Factorization factorize(const FieldCtx& ctx, const LinearizedPolynomial& s) {
  std::vector<std::uint32_t> exps;
  for (const auto& t : s.terms()) exps.push_back(t.r);
  const auto ef = factorize_exponents(ctx.q(), ctx.n(), exps);
  Factorization out{ef.r1, ef.s, {}};
  for (std::size_t i = 0; i < exps.size(); ++i) out.f_terms.emplace_back(ef.f_exponents[i], s.terms()[i].a);
  return out;
}

struct CoefficientTable {
  std::uint32_t r1 = 0;
  std::vector<FFElement> A;
  std::vector<std::pair<std::uint64_t, FFElement>> f_terms;
};

/// A_i = f(xi^{i q^{r1}}) for i = 0..l-1; f_terms are in the variable
/// y = x^{s q^{r1}} for s = decomp.s.
inline CoefficientTable coefficient_table(const FieldCtx& ctx, const CyclotomicDecomposition& decomp, std::uint32_t r1,
                                          const std::vector<std::pair<std::uint64_t, FFElement>>& f_terms) {
  CoefficientTable table{r1, {}, f_terms};
  table.A.reserve(decomp.l);
  const std::uint64_t mod = ctx.order();
  const std::uint64_t step = nt::mulmod(decomp.s % mod, ctx.q_power_mod(r1), mod);  // log of xi^{q^{r1}}
  for (std::uint64_t i = 0; i < decomp.l; ++i) {
    const std::uint64_t y_log = nt::mulmod(step, i, mod);
    std::uint32_t acc = FFElement::kNoLog;
    for (const auto& [e, c] : f_terms) {
      if (c.is_zero()) continue;
      const std::uint64_t l = (c.log + nt::mulmod(y_log, e % mod, mod)) % mod;
      acc = ctx.add_logs(acc, static_cast<std::uint32_t>(l));
    }
    table.A.push_back(ctx.element_from_log_or_zero(acc));
  }
  return table;
}

/// 0 at x = 0, else A_{coset(x)} x^{q^{r1}}.
inline FFElement cyclotomic_eval(const FieldCtx& ctx, const CyclotomicDecomposition& decomp,
                                 const CoefficientTable& table, const FFElement& x) {
  if (x.is_zero()) return x;
  return mul(ctx, table.A[decomp.coset_of(x)], frobenius(ctx, x, table.r1));
}

/// Decomposition and table derived from factorize(S).
struct CyclotomicForm {
  Factorization factorization;
  CyclotomicDecomposition decomposition;
  CoefficientTable table;
};

inline CyclotomicForm cyclotomic_form(const FieldCtx& ctx, const LinearizedPolynomial& s) {
  auto fac = factorize(ctx, s);
  auto decomp = decompose(ctx, fac.s);
  auto table = coefficient_table(ctx, decomp, fac.r1, fac.f_terms);
  return {std::move(fac), decomp, std::move(table)};
}

/// Full-domain check that S agrees with its cyclotomic mapping.
inline bool lemma_relation_check(const FieldCtx& ctx, const LinearizedPolynomial& s,
                                 std::uint64_t scan_cap = kDefaultFieldCap) {
  if (ctx.size() > scan_cap) throw Error(ErrorKind::FieldTooLarge, "field exceeds scan cap");
  const auto form = cyclotomic_form(ctx, s);
  if (!cyclotomic_eval(ctx, form.decomposition, form.table, ctx.zero()).is_zero()) return false;
  for (std::uint32_t k = 0; k < ctx.order(); ++k) {
    const FFElement x = ctx.from_log(k);
    if (evaluate(ctx, s, x) != cyclotomic_eval(ctx, form.decomposition, form.table, x)) return false;
  }
  return true;
}

}  // namespace scatter
