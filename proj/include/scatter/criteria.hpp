#pragma once

// Scan-free scatteredness criteria. Each returns its hypothesis list so a
// verdict is never issued outside the regime it was proven for.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"
#include "scatter/symbolic.hpp"

namespace scatter {

struct Hypothesis {
  std::string name;
  bool satisfied = false;
  std::string detail;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct CriterionVerdict {
  bool applicable = false;
  std::optional<bool> verdict;  // present iff applicable
  std::vector<Hypothesis> hypotheses;
  std::string source;
  std::vector<std::uint32_t> indices;  // indices the verdict speaks about

  bool covers(std::uint32_t t) const { return std::find(indices.begin(), indices.end(), t) != indices.end(); }
  friend bool operator==(const CriterionVerdict&, const CriterionVerdict&) = default;
};

namespace detail {

inline CriterionVerdict finish(std::string source, std::vector<Hypothesis> hyps, bool verdict_if_applicable,
                               std::vector<std::uint32_t> indices) {
  CriterionVerdict v;
  v.source = std::move(source);
  v.hypotheses = std::move(hyps);
  v.indices = std::move(indices);
  v.applicable = std::all_of(v.hypotheses.begin(), v.hypotheses.end(), [](const auto& h) { return h.satisfied; });
  if (v.applicable) v.verdict = verdict_if_applicable;
  return v;
}

inline std::string show(const BigInt& v) { return v.str(); }

}  // namespace detail

/// x^{q^r} is scattered of index t != r iff gcd(|t - r|, n) = 1.
inline CriterionVerdict pseudoregulus_criterion(std::uint32_t n, std::uint32_t r, std::uint32_t t) {
  if (r >= n || t >= n) throw Error(ErrorKind::BadIndex, "r and t must lie below n");
  const std::uint32_t diff = r > t ? r - t : t - r;
  const std::uint32_t g = std::gcd(diff, n);
  return detail::finish("pseudoregulus", {{"t != r", t != r, "t=" + std::to_string(t) + ", r=" + std::to_string(r)}},
                        g == 1, {t});
}

/// a_1 x^{q^{r_1}} + a_2 x^{q^{r_2}} with |a_2| | q^{r_1} - 1 is scattered of
/// index r_1 (equivalently r_2) iff gcd(r_2 - r_1, n) = 1.
inline CriterionVerdict binomial_criterion(const FieldParams& fp, const SymbolicPoly& s) {
  if (s.size() != 2) throw Error(ErrorKind::NotABinomial, std::to_string(s.size()) + " terms");
  const auto& [r1, a1] = s.terms[0];
  const auto& [r2, a2] = s.terms[1];
  (void)a1;
  const BigInt e = big_pow(fp.q(), r1) - 1;
  const bool divides = order_divides(fp, a2, e);
  const std::uint32_t g = std::gcd(r2 - r1, fp.n);
  return detail::finish("binomial",
                        {{"|a_2| divides q^{r_1}-1", divides, "r_1=" + std::to_string(r1)}},
                        g == 1, {r1, r2});
}

inline CriterionVerdict binomial_criterion(const FieldCtx& ctx, const LinearizedPolynomial& s) {
  return binomial_criterion(FieldParams::of(ctx), to_symbolic(s));
}

/// a_1 x + a_2 x^{q^r} is scattered of index r iff gcd(r, n) = 1.
inline CriterionVerdict affine_binomial_criterion(const FieldParams& fp, const BigInt& a1_log, const BigInt& a2_log,
                                                  std::uint32_t r) {
  (void)a1_log;
  (void)a2_log;
  if (r == 0 || r >= fp.n) throw Error(ErrorKind::BadIndex, "need 0 < r < n");
  return detail::finish("affine-binomial", {}, std::gcd(r, fp.n) == 1, {r});
}

inline CriterionVerdict affine_binomial_criterion(const FieldCtx& ctx, const FFElement& a1, const FFElement& a2,
                                                  std::uint32_t r) {
  if (a1.is_zero() || a2.is_zero()) throw Error(ErrorKind::InvalidArgument, "coefficients must be nonzero");
  return affine_binomial_criterion(FieldParams::of(ctx), a1.log, a2.log, r);
}

struct ReductionResult {
  LinearizedPolynomial reduced;
  std::uint32_t reduced_index = 0;
  std::string regime;  // "t<r1", "t=r1", "t>r1"
  std::vector<Hypothesis> hypotheses;
  bool hypotheses_hold = false;
};

/// Reduces (S, t) to an equivalent (S', t') with t' = 0 (t <= r_1) or
/// t' = t - r_1 (t > r_1). The equivalence is certified only when
/// hypotheses_hold.
inline ReductionResult index_shift_reduction(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t) {
  if (t >= ctx.n()) throw Error(ErrorKind::BadIndex, "index must be below n");
  const std::uint32_t r1 = s.min_exponent();
  auto order_hyps = [&](std::uint32_t e, std::size_t from) {
    const std::uint64_t bound = *nt::checked_pow(ctx.q(), e, ctx.size()) - 1;
    std::vector<Hypothesis> hs;
    for (std::size_t i = from; i < s.size(); ++i) {
      const auto& term = s.terms()[i];
      hs.push_back({"|a_" + std::to_string(i + 1) + "| divides q^" + std::to_string(e) + "-1",
                    order_divides(ctx, term.a, bound), "order " + std::to_string(element_order(ctx, term.a))});
    }
    return hs;
  };
  auto result = [&](LinearizedPolynomial p, std::uint32_t idx, std::string regime, std::vector<Hypothesis> hs) {
    const bool ok = std::all_of(hs.begin(), hs.end(), [](const auto& h) { return h.satisfied; });
    return ReductionResult{std::move(p), idx, std::move(regime), std::move(hs), ok};
  };
  if (t == r1) return result(shift_down(ctx, strip_min_term(ctx, s), r1), 0, "t=r1", order_hyps(r1, 1));
  if (t < r1) return result(shift_down(ctx, s, t), 0, "t<r1", order_hyps(t, 0));
  return result(t_transform(ctx, s), t - r1, "t>r1", order_hyps(r1, 0));
}

struct LpMembership {
  CriterionVerdict membership;  // verdict: S is (a scalar multiple of) an LP polynomial
  CriterionVerdict lemma;       // applicable iff the sufficient conditions hold; verdict: N(delta) != 1
};

/// Lunardon-Polverino shape x^{q^r} + delta x^{q^{n-r}}, gcd(n, r) = 1,
/// N(delta) != 1, after scaling the low coefficient to 1.
inline LpMembership lp_membership(const FieldParams& fp, const SymbolicPoly& s) {
  if (s.size() != 2) throw Error(ErrorKind::NotABinomial, std::to_string(s.size()) + " terms");
  const std::uint32_t r = s.terms[0].r;
  const std::uint32_t r2 = s.terms[1].r;
  const BigInt delta = big_mod(s.terms[1].log - s.terms[0].log, fp.order());
  const bool shape = r > 0 && r2 == fp.n - r;
  const bool coprime = std::gcd(fp.n, r) == 1;
  const bool norm_ok = !norm_is_one(fp, delta);

  LpMembership out;
  out.membership.source = "lp-membership";
  out.membership.applicable = true;
  out.membership.hypotheses = {
      {"exponents are r and n-r", shape, "r=" + std::to_string(r) + ", r_2=" + std::to_string(r2)},
      {"gcd(n,r)=1", coprime, ""},
      {"N(delta) != 1", norm_ok, "delta=g^" + detail::show(delta)},
  };
  out.membership.verdict = shape && coprime && norm_ok;
  out.membership.indices = {0};

  const std::uint64_t q = fp.q();
  out.lemma = detail::finish(
      "lp-lemma",
      {
          {"n > 1 odd", fp.n > 1 && fp.n % 2 == 1, ""},
          {"gcd(q-1,n)=1", std::gcd<std::uint64_t>(q - 1, fp.n) == 1, ""},
          {"delta != 1", !is_one(fp, delta), ""},
          {"|delta| divides q-1", order_divides(fp, delta, BigInt(q - 1)), ""},
      },
      norm_ok, {0});
  return out;
}

inline LpMembership lp_membership(const FieldCtx& ctx, const LinearizedPolynomial& s) {
  return lp_membership(FieldParams::of(ctx), to_symbolic(s));
}

/// delta either as a gamma-log or as "the smallest-log element of order d".
struct DeltaSpec {
  enum class Kind { Log, Order } kind = Kind::Log;
  BigInt value;

  static DeltaSpec log(BigInt k) { return {Kind::Log, std::move(k)}; }
  static DeltaSpec of_order(std::uint64_t d) { return {Kind::Order, BigInt(d)}; }

  BigInt resolve(const FieldParams& fp) const {
    const BigInt order = fp.order();
    if (kind == Kind::Log) return big_mod(value, order);
    if (value <= 0 || order % value != 0)
      throw Error(ErrorKind::HypothesisViolated, "no element of order " + value.str());
    return order / value;
  }
};

struct CsajbokReport {
  CriterionVerdict theorem;    // q = 1 mod 4, delta^2 = -1: not scattered of index 1, 5
  CriterionVerdict corollary;  // q = 5, delta != +-1, |delta| | 4: scattered of index 0
};

/// x^q + delta x^{q^5} over F_{q^8}.
inline CsajbokReport csajbok_family_check(std::uint64_t q, const DeltaSpec& delta_spec) {
  const FieldParams fp = FieldParams::from_q(q, 8);
  if (q % 2 == 0) throw Error(ErrorKind::HypothesisViolated, "q must be odd");
  const BigInt delta = delta_spec.resolve(fp);
  const BigInt order = fp.order();
  const bool square_is_minus_one = big_mod(2 * delta, order) == order / 2;

  CsajbokReport out;
  const SymbolicPoly s{{{1, 0}, {5, delta}}};
  const auto binom = binomial_criterion(fp, s);
  std::vector<Hypothesis> th = {
      {"q = 1 mod 4", q % 4 == 1, "q=" + std::to_string(q)},
      {"delta^2 = -1", square_is_minus_one, "delta=g^" + delta.str()},
  };
  for (const auto& h : binom.hypotheses) th.push_back(h);
  out.theorem = detail::finish("csajbok-theorem", std::move(th), binom.verdict.value_or(true), {1, 5});

  const bool not_pm_one = !is_one(fp, delta) && !is_minus_one(fp, delta);
  std::vector<Hypothesis> co = {
      {"q = 5", q == 5, ""},
      {"delta not in {1,-1}", not_pm_one, ""},
      {"|delta| divides 4", order_divides(fp, delta, 4), ""},
  };
  const bool base_ok = co[0].satisfied && co[1].satisfied && co[2].satisfied;
  // the order-2 element of a cyclic group is unique, hence delta^2 = -1
  co.push_back({"derived: delta^2 = -1", !base_ok || square_is_minus_one, ""});
  out.corollary = detail::finish("csajbok-corollary", std::move(co), true, {0});
  return out;
}

struct ExceptionalCertificate {
  CriterionVerdict certificate;                // exceptional scattered of index r+1
  std::vector<std::uint32_t> scattered_indices;  // {1, r+1, 2r+1} mod n when granted
};

/// x^q + delta x^{q^{2r+1}} over F_{q^n}.
inline ExceptionalCertificate exceptional_family_certificate(std::uint64_t q, std::uint32_t n, std::uint32_t r,
                                                             const DeltaSpec& delta_spec) {
  const FieldParams fp = FieldParams::from_q(q, n);
  if (r == 0 || r >= n) throw Error(ErrorKind::BadIndex, "need 0 < r < n");
  const BigInt delta = delta_spec.resolve(fp);
  std::vector<Hypothesis> hs = {
      {"delta != 1", !is_one(fp, delta), "delta=g^" + delta.str()},
      {"|delta| divides q-1", order_divides(fp, delta, BigInt(q - 1)), ""},
      {"n > 3 odd", n > 3 && n % 2 == 1, "n=" + std::to_string(n)},
      {"gcd(n,q-1)=1", std::gcd<std::uint64_t>(n, q - 1) == 1, ""},
      {"gcd(r,n)=1", std::gcd(r, n) == 1, "r=" + std::to_string(r)},
  };
  ExceptionalCertificate out;
  out.certificate = detail::finish("exceptional-family", std::move(hs), true, {(r + 1) % n});
  if (out.certificate.applicable) out.scattered_indices = {1 % n, (r + 1) % n, (2 * r + 1) % n};
  return out;
}

/// gamma^a lies in F_q iff (q^n-1)/(q-1) divides a.
inline bool subfield_exponent_criterion(const FieldParams& fp, const BigInt& a) {
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "exponent must be non-negative");
  return a % fp.projective_points() == 0;
}

inline bool subfield_exponent_criterion(const FieldCtx& ctx, std::uint64_t a) {
  return a % ctx.projective_points() == 0;
}

/// Every criterion that speaks about (S, t).
inline std::vector<CriterionVerdict> criteria_for(const FieldParams& fp, const SymbolicPoly& s, std::uint32_t t) {
  if (t >= fp.n) throw Error(ErrorKind::BadIndex, "index must be below n");
  std::vector<CriterionVerdict> out;
  if (s.size() == 1) {
    out.push_back(pseudoregulus_criterion(fp.n, s.terms[0].r, t));
    return out;
  }
  if (s.size() != 2) return out;
  const auto& lo = s.terms[0];
  const auto& hi = s.terms[1];
  if (t == lo.r || t == hi.r) out.push_back(binomial_criterion(fp, s));
  if (lo.r == 0 && t == hi.r) out.push_back(affine_binomial_criterion(fp, lo.log, hi.log, hi.r));
  if (lo.r == 1 && is_one(fp, lo.log) && hi.r % 2 == 1 && hi.r >= 3) {
    const std::uint32_t r = (hi.r - 1) / 2;
    const std::vector<std::uint32_t> family = {1 % fp.n, (r + 1) % fp.n, (2 * r + 1) % fp.n};
    if (std::find(family.begin(), family.end(), t) != family.end()) {
      auto cert = exceptional_family_certificate(fp.q(), fp.n, r, DeltaSpec::log(hi.log));
      cert.certificate.indices = {t};
      out.push_back(std::move(cert.certificate));
    }
  }
  if (fp.n == 8 && lo.r == 1 && hi.r == 5 && is_one(fp, lo.log) && fp.q() % 2 == 1) {
    auto rep = csajbok_family_check(fp.q(), DeltaSpec::log(hi.log));
    if (rep.corollary.covers(t)) out.push_back(std::move(rep.corollary));
  }
  return out;
}

struct CombinedVerdict {
  std::optional<bool> verdict;
  bool conflict = false;  // two applicable criteria disagree
};

inline CombinedVerdict combine(const std::vector<CriterionVerdict>& vs) {
  CombinedVerdict c;
  for (const auto& v : vs) {
    if (!v.applicable) continue;
    if (c.verdict && *c.verdict != *v.verdict) c.conflict = true;
    if (!c.verdict) c.verdict = v.verdict;
  }
  return c;
}

}  // namespace scatter
