#pragma once

// Verification suites: each cross-checks a criterion against the exhaustive
// oracle (or a tabulated identity) and tallies passes per check.

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "scatter/criteria.hpp"
#include "scatter/cyclotomic.hpp"
#include "scatter/engine.hpp"
#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"
#include "scatter/symbolic.hpp"
#include "scatter/text_format.hpp"

namespace scatter {

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return passed == total; }

  template <class Describe>
  void record(bool pass, Describe&& describe) {
    ++total;
    if (pass) ++passed;
    else if (failures.size() < 8) failures.push_back(describe());
  }
};

struct SuiteResult {
  std::string suite;
  std::deque<CheckTally> checks;
  double seconds = 0;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
  }
  CheckTally& check(std::string_view name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    CheckTally c;
    c.name = std::string(name);
    return checks.emplace_back(std::move(c));
  }
  const CheckTally* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Called after every oracle run a suite performs.
using OracleObserver =
    std::function<void(const FieldCtx&, const LinearizedPolynomial&, std::uint32_t, const ScatterReport&)>;

struct SuiteOptions {
  unsigned jobs = 1;
  OracleObserver observer;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemmas", "pseudoregulus", "binomials", "reductions",
                                                 "pp-criterion", "lp", "csajbok", "exceptional"};
  return names;
}

namespace detail {

class SuiteRunner {
 public:
  SuiteRunner(std::string name, const SuiteOptions& opts) : opts_(opts) { result_.suite = std::move(name); }

  ScatterReport oracle(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t) {
    OracleOptions o;
    o.jobs = opts_.jobs;
    auto rep = is_scattered_bruteforce(ctx, s, t, o);
    if (opts_.observer) opts_.observer(ctx, s, t, rep);
    return rep;
  }

  /// Coset constancy of A on the deciding pairs of a scattered instance.
  void coset_check(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t) {
    const auto cc = coset_constancy_on_deciding_pairs(ctx, s, t);
    result_.check("A_i=A_j on deciding pairs").record(cc.holds && cc.pairs_checked > 0, [&] {
      return describe(ctx, s, t) + ": " + std::to_string(cc.pairs_checked) + " pairs";
    });
  }

  CheckTally& check(std::string_view name) { return result_.check(name); }

  SuiteResult finish() {
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

  static std::string describe(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t) {
    return "F_{" + std::to_string(ctx.q()) + "^" + std::to_string(ctx.n()) + "} S=" + format_poly(s) +
           " t=" + std::to_string(t);
  }

 private:
  const SuiteOptions& opts_;
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string verdict_text(std::optional<bool> v) { return v ? (*v ? "true" : "false") : "none"; }

inline void expect(CheckTally& tally, bool pass, std::string what) {
  tally.record(pass, [&] { return what; });
}

inline SuiteResult suite_lemmas(const SuiteOptions& opts) {
  SuiteRunner run("lemmas", opts);
  auto& power = run.check("subfield exponent");
  for (auto [p, m, n] : {std::tuple{3U, 1U, 2U}, {3U, 1U, 3U}, {3U, 1U, 4U}, {5U, 1U, 3U}, {3U, 1U, 5U}}) {
    const auto ctx = build_field(p, m, n);
    const auto fp = FieldParams::of(ctx);
    for (std::uint32_t a = 0; a < ctx.order(); ++a) {
      const bool inside = in_base_subfield(ctx, ctx.from_log(a));
      power.record(subfield_exponent_criterion(ctx, a) == inside && subfield_exponent_criterion(fp, a) == inside,
                   [&] { return "q=" + std::to_string(ctx.q()) + " n=" + std::to_string(n) + " a=" + std::to_string(a); });
    }
  }

  auto& relation = run.check("cyclotomic relation");
  std::mt19937_64 rng(20240611);
  for (auto n : {4U, 5U}) {
    const auto ctx = build_field(3, 1, n);
    std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.order());  // order -> zero coefficient
    for (int i = 0; i < 200; ++i) {
      std::vector<Term> raw;
      for (std::uint32_t r = 0; r < n; ++r) {
        const auto c = coeff(rng);
        if (c < ctx.order() && rng() % 2) raw.push_back({r, ctx.from_log(c)});
      }
      if (raw.empty()) raw.push_back({static_cast<std::uint32_t>(rng() % n), ctx.from_log(coeff(rng) % ctx.order())});
      const auto s = normalize(ctx, std::move(raw));
      relation.record(lemma_relation_check(ctx, s), [&] { return SuiteRunner::describe(ctx, s, 0); });
    }
    // coefficients of order dividing q^{r_1} - 1
    for (std::uint32_t r1 = 1; r1 < n; ++r1) {
      const std::uint64_t e = *nt::checked_pow(3, r1, ctx.size()) - 1;
      for (int i = 0; i < 20; ++i) {
        std::vector<Term> raw;
        for (std::uint32_t r = r1; r < n; ++r) {
          const std::uint64_t k = rng() % e;
          if (r == r1 || rng() % 2) raw.push_back({r, ctx.from_log(k * (ctx.order() / e))});
        }
        const auto s = normalize(ctx, std::move(raw));
        relation.record(lemma_relation_check(ctx, s), [&] { return SuiteRunner::describe(ctx, s, 0); });
      }
    }
  }
  const auto f55 = build_field(5, 1, 5);
  const auto s55 = parse_poly(f55, "3:g^0,4:g^0");
  relation.record(lemma_relation_check(f55, s55), [&] { return SuiteRunner::describe(f55, s55, 0); });

  auto& fac = run.check("factorization of exponents");
  const auto ef = factorize_exponents(9, 8, {2, 4, 6});
  expect(fac, ef.r1 == 2 && ef.s == 80 && ef.f_exponents == std::vector<std::uint64_t>{0, 1, 82},
         "x^{9^2}+x^{9^4}+x^{9^6} over F_{9^8}");
  return run.finish();
}

inline SuiteResult suite_pseudoregulus(const SuiteOptions& opts) {
  SuiteRunner run("pseudoregulus", opts);
  auto& agree = run.check("criterion = oracle");
  for (auto n : {4U, 5U, 6U}) {
    const auto ctx = build_field(3, 1, n);
    for (std::uint32_t r = 0; r < n; ++r) {
      const auto s = from_log_terms(ctx, {{r, 0}});
      for (std::uint32_t t = 0; t < n; ++t) {
        if (t == r) continue;
        const auto v = pseudoregulus_criterion(n, r, t);
        const auto rep = run.oracle(ctx, s, t);
        agree.record(v.verdict == rep.scattered, [&] { return SuiteRunner::describe(ctx, s, t); });
        if (rep.scattered) run.coset_check(ctx, s, t);
      }
    }
  }
  auto& large = run.check("criterion-only index sets");
  std::vector<std::uint32_t> idx;
  for (std::uint32_t t = 0; t < 15; ++t)
    if (t != 8 && pseudoregulus_criterion(15, 8, t).verdict.value_or(false)) idx.push_back(t);
  expect(large, idx == std::vector<std::uint32_t>{0, 1, 4, 6, 7, 9, 10, 12}, "x^{25^8} over F_{25^15}");
  expect(large, pseudoregulus_criterion(15, 8, 3).verdict == false, "x^{25^8} over F_{25^15}, t=3");
  expect(large, !pseudoregulus_criterion(15, 8, 8).applicable, "t = r is outside the criterion");
  return run.finish();
}

inline SuiteResult suite_binomials(const SuiteOptions& opts) {
  SuiteRunner run("binomials", opts);
  auto& agree = run.check("binomial criterion = oracle");
  for (auto n : {4U, 5U}) {
    const auto ctx = build_field(3, 1, n);
    for (std::uint32_t r1 = 0; r1 < n; ++r1) {
      const std::uint64_t e = *nt::checked_pow(3, r1, ctx.size()) - 1;
      for (std::uint32_t r2 = r1 + 1; r2 < n; ++r2) {
        for (std::uint32_t a1 = 0; a1 < ctx.order(); ++a1) {
          for (std::uint32_t a2 = 0; a2 < ctx.order(); ++a2) {
            if (!order_divides(ctx, ctx.from_log(a2), e)) continue;
            const auto s = from_log_terms(ctx, {{r1, a1}, {r2, a2}});
            const auto v = binomial_criterion(ctx, s);
            for (auto t : {r1, r2}) {
              const auto rep = run.oracle(ctx, s, t);
              agree.record(v.applicable && v.verdict == rep.scattered,
                           [&] { return SuiteRunner::describe(ctx, s, t) + " criterion=" + verdict_text(v.verdict); });
              if (rep.scattered) run.coset_check(ctx, s, t);
            }
          }
        }
      }
    }
  }

  auto& example = run.check("x^{5^3}+x^{5^4} over F_{5^5}");
  const auto f55 = build_field(5, 1, 5);
  const auto s55 = parse_poly(f55, "3:g^0,4:g^0");
  for (std::uint32_t t : {3U, 4U}) {
    const auto rep = run.oracle(f55, s55, t);
    const auto v = binomial_criterion(f55, s55);
    expect(example, rep.scattered && v.verdict == true, SuiteRunner::describe(f55, s55, t));
    if (rep.scattered) run.coset_check(f55, s55, t);
  }

  auto& affine = run.check("affine criterion = oracle");
  const auto f35 = build_field(3, 1, 5);
  const std::vector<std::uint32_t> sample = {0, 1, 7, 30, 61, 121, 150, 241};
  for (std::uint32_t r = 1; r < 5; ++r) {
    for (auto a1 : sample) {
      for (auto a2 : sample) {
        const auto s = from_log_terms(f35, {{0, a1}, {r, a2}});
        const auto v = affine_binomial_criterion(f35, s.terms()[0].a, s.terms()[1].a, r);
        const auto rep = run.oracle(f35, s, r);
        affine.record(v.verdict == rep.scattered, [&] { return SuiteRunner::describe(f35, s, r); });
        if (rep.scattered) run.coset_check(f35, s, r);
      }
    }
  }

  auto& large = run.check("criterion-only large fields");
  auto symbolic = [](std::uint64_t q, std::uint32_t n, std::string_view text) {
    const auto fp = FieldParams::from_q(q, n);
    return std::pair{fp, to_symbolic(fp, parse_poly_text(text))};
  };
  {
    const auto [fp, s] = symbolic(25, 100, "9:g^0,50:g^0");
    const auto v = binomial_criterion(fp, s);
    expect(large, v.verdict == true && v.covers(9) && v.covers(50), "x^{25^9}+x^{25^50} over F_{25^100}");
  }
  {
    const auto [fp, s] = symbolic(101, 6, "2:g^0,4:g^0");
    const auto v = binomial_criterion(fp, s);
    expect(large, v.verdict == false && v.covers(2) && v.covers(4), "x^{101^2}+x^{101^4} over F_{101^6}");
  }
  {
    const auto fp = FieldParams::from_q(27, 110);
    expect(large, affine_binomial_criterion(fp, 0, 0, 81).verdict == true, "x+x^{27^81} over F_{27^110}");
    expect(large, affine_binomial_criterion(fp, 0, 0, 80).verdict == false, "x+x^{27^80} over F_{27^110}");
  }
  return run.finish();
}

/// All exponent sets of size 1..3 below n with coefficients in {1, -1}.
inline std::vector<LinearizedPolynomial> sign_polynomials(const FieldCtx& ctx, std::size_t max_terms) {
  std::vector<LinearizedPolynomial> out;
  const std::uint32_t n = ctx.n();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::uint32_t> exps;
    for (std::uint32_t r = 0; r < n; ++r)
      if (mask >> r & 1U) exps.push_back(r);
    if (exps.size() > max_terms) continue;
    for (std::uint32_t signs = 0; signs < (1U << exps.size()); ++signs) {
      std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
      for (std::size_t i = 0; i < exps.size(); ++i) terms.emplace_back(exps[i], (signs >> i & 1U) ? ctx.minus_one_log() : 0);
      out.push_back(from_log_terms(ctx, terms));
    }
  }
  return out;
}

inline SuiteResult suite_reductions(const SuiteOptions& opts) {
  SuiteRunner run("reductions", opts);
  for (auto n : {4U, 5U}) {
    const auto ctx = build_field(3, 1, n);
    for (const auto& s : sign_polynomials(ctx, 3)) {
      if (s.size() < 2) continue;
      for (std::uint32_t t = 0; t < n; ++t) {
        const auto red = index_shift_reduction(ctx, s, t);
        if (!red.hypotheses_hold) continue;
        const auto a = run.oracle(ctx, s, t);
        const auto b = run.oracle(ctx, red.reduced, red.reduced_index);
        run.check("regime " + red.regime).record(a.scattered == b.scattered, [&] {
          return SuiteRunner::describe(ctx, s, t) + " -> " + format_poly(red.reduced) + " t'=" +
                 std::to_string(red.reduced_index);
        });
      }
    }
  }
  return run.finish();
}

inline SuiteResult suite_pp(const SuiteOptions& opts) {
  SuiteRunner run("pp-criterion", opts);
  for (auto [p, n] : {std::pair{3U, 4U}, {5U, 3U}}) {
    const auto ctx = build_field(p, 1, n);
    for (std::uint32_t r1 = 2; r1 < n; ++r1) {
      for (std::uint32_t t = 1; t < r1; ++t) {
        // coefficient logs: the subgroup of order q^t - 1
        const std::uint64_t e = *nt::checked_pow(ctx.q(), t, ctx.size()) - 1;
        const std::uint64_t step = ctx.order() / e;
        std::vector<std::uint64_t> logs;
        for (std::uint64_t k = 0; k < e; ++k) logs.push_back(k * step);
        for (std::uint32_t mask = 1; mask < (1U << (n - r1)); ++mask) {
          if (!(mask & 1U)) continue;  // r1 is the least exponent
          std::vector<std::uint32_t> exps;
          for (std::uint32_t r = r1; r < n; ++r)
            if (mask >> (r - r1) & 1U) exps.push_back(r);
          std::vector<std::size_t> pick(exps.size(), 0);
          while (true) {
            std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
            for (std::size_t i = 0; i < exps.size(); ++i) terms.emplace_back(exps[i], logs[pick[i]]);
            const auto s = from_log_terms(ctx, terms);
            const bool pp = scattered_via_pp(ctx, s, t);
            const auto rep = run.oracle(ctx, s, t);
            run.check("pp criterion = oracle").record(pp == rep.scattered, [&] {
              return SuiteRunner::describe(ctx, s, t) + " pp=" + (pp ? "true" : "false");
            });
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == logs.size()) pick[i++] = 0;
            if (i == pick.size()) break;
          }
        }
      }
    }
  }
  return run.finish();
}

inline SuiteResult suite_lp(const SuiteOptions& opts) {
  SuiteRunner run("lp", opts);
  auto& implication = run.check("sufficient conditions imply N(delta) != 1");
  auto& norm = run.check("symbolic norm = tabulated norm");
  for (auto [p, n] : {std::pair{3U, 5U}, {5U, 3U}, {7U, 5U}}) {
    const auto f = build_field(p, 1, n);
    const auto ffp = FieldParams::of(f);
    for (std::uint32_t k = 0; k < f.order(); ++k) {
      const auto delta = f.from_log(k);
      const bool norm_one = relative_norm(f, delta) == f.one();
      norm.record(norm_is_one(ffp, k) == norm_one, [&] { return "delta=g^" + std::to_string(k); });
      const auto lp = lp_membership(f, from_log_terms(f, {{1, 0}, {n - 1, k}}));
      if (lp.lemma.applicable)
        implication.record(!norm_one && lp.lemma.verdict == true, [&] { return "delta=g^" + std::to_string(k); });
    }
  }
  const auto ctx = build_field(3, 1, 5);
  auto& member = run.check("LP members are scattered of index 0");
  for (std::uint32_t r = 1; r < 5; ++r) {
    for (std::uint32_t k = 0; k < ctx.order(); k += 11) {
      const auto s = from_log_terms(ctx, {{r, 0}, {5 - r, k}});
      const auto lp = lp_membership(ctx, s);
      if (lp.membership.verdict != true) continue;
      const auto rep = run.oracle(ctx, s, 0);
      member.record(rep.scattered, [&] { return SuiteRunner::describe(ctx, s, 0); });
    }
  }
  auto& example = run.check("delta = -1, r = 2");
  const auto lp = lp_membership(ctx, from_log_terms(ctx, {{2, 0}, {3, ctx.minus_one_log()}}));
  expect(example, lp.lemma.applicable && lp.membership.verdict == true, "x^{3^2}-x^{3^3} over F_{3^5}");
  return run.finish();
}

inline SuiteResult suite_csajbok(const SuiteOptions& opts) {
  SuiteRunner run("csajbok", opts);
  auto& agree = run.check("F_{5^8} oracle matches");
  const auto ctx = build_field(5, 1, 8);
  const auto fp = FieldParams::of(ctx);
  for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{3}}) {
    const auto spec = DeltaSpec::log(BigInt(k * (ctx.order() / 4)));
    const auto rep = csajbok_family_check(5, spec);
    const auto delta = static_cast<std::uint64_t>(spec.resolve(fp));
    const auto s = from_log_terms(ctx, {{1, 0}, {5, delta}});
    expect(agree, rep.theorem.applicable && rep.corollary.applicable, "hypotheses for delta=g^" + std::to_string(delta));
    for (std::uint32_t t : {1U, 5U}) {
      const auto o = run.oracle(ctx, s, t);
      expect(agree, !o.scattered && rep.theorem.verdict == false && rep.theorem.covers(t),
             SuiteRunner::describe(ctx, s, t));
    }
    const auto o = run.oracle(ctx, s, 0);
    expect(agree, o.scattered && rep.corollary.verdict == true && rep.corollary.covers(0),
           SuiteRunner::describe(ctx, s, 0));
  }
  auto& scope = run.check("hypothesis scope");
  expect(scope, !csajbok_family_check(7, DeltaSpec::of_order(4)).theorem.applicable, "q=7 fails q = 1 mod 4");
  expect(scope, !csajbok_family_check(13, DeltaSpec::of_order(4)).corollary.applicable, "q=13 is outside q = 5");
  expect(scope, csajbok_family_check(13, DeltaSpec::of_order(4)).theorem.verdict == false, "q=13, delta^2=-1");
  return run.finish();
}

inline SuiteResult suite_exceptional(const SuiteOptions& opts) {
  SuiteRunner run("exceptional", opts);
  auto& cert = run.check("certificate");
  const auto c = exceptional_family_certificate(3, 5, 1, DeltaSpec::of_order(2));
  expect(cert, c.certificate.applicable && c.scattered_indices == std::vector<std::uint32_t>{1, 2, 3},
         "q=3 n=5 r=1 delta=-1");
  expect(cert, !exceptional_family_certificate(3, 4, 1, DeltaSpec::of_order(2)).certificate.applicable, "n=4");
  expect(cert, !exceptional_family_certificate(3, 5, 1, DeltaSpec::log(0)).certificate.applicable, "delta=1");

  const auto ctx = build_field(3, 1, 5);
  const auto s = from_log_terms(ctx, {{1, 0}, {3, ctx.minus_one_log()}});
  auto& base = run.check("scattered at {1,2,3} over F_{3^5}");
  for (std::uint32_t t : {1U, 2U, 3U}) {
    const auto rep = run.oracle(ctx, s, t);
    expect(base, rep.scattered, SuiteRunner::describe(ctx, s, t));
  }

  OracleOptions o;
  o.jobs = opts.jobs;
  for (const auto& dv : is_exceptional_desk(3, 1, 5, {{1, 0}, {3, ctx.minus_one_log()}}, 2, {1, 2}, o)) {
    auto& ext = run.check("index 2 over F_{3^" + std::to_string(dv.degree) + "}");
    expect(ext, dv.report.scattered,
           "x^3-x^27 at index 2 over F_{3^" + std::to_string(dv.degree) + "}" +
               (dv.report.witness ? " collides at (" + format_element(dv.report.witness->first) + ", " +
                                        format_element(dv.report.witness->second) + ")"
                                  : ""));
  }
  return run.finish();
}

}  // namespace detail

/// Runs one suite, or every suite for "all".
inline std::vector<SuiteResult> run_suites(std::string_view name, const SuiteOptions& opts = {}) {
  using Fn = SuiteResult (*)(const SuiteOptions&);
  static const std::vector<std::pair<std::string_view, Fn>> table = {
      {"lemmas", detail::suite_lemmas},     {"pseudoregulus", detail::suite_pseudoregulus},
      {"binomials", detail::suite_binomials}, {"reductions", detail::suite_reductions},
      {"pp-criterion", detail::suite_pp},   {"lp", detail::suite_lp},
      {"csajbok", detail::suite_csajbok},   {"exceptional", detail::suite_exceptional},
  };
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : table)
    if (name == "all" || name == n) out.push_back(fn(opts));
  if (out.empty()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace scatter
