#pragma once

// Exhaustive deciders. Scatteredness of index t is decided over one
// representative per F_q^*-class of nonzero elements: ratio_map is constant
// on each class, so S is scattered iff the ratio values of the
// (q^n-1)/(q-1) representatives are pairwise distinct.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "scatter/cyclotomic.hpp"
#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"

namespace scatter {

struct OracleOptions {
  unsigned jobs = 1;
  std::uint64_t cap = kDefaultFieldCap;
  bool census = false;  // also fill deciding_pair_count
};

using ElementPair = std::pair<FFElement, FFElement>;

struct ScatterReport {
  bool scattered = false;
  std::uint32_t index = 0;
  std::optional<ElementPair> witness;
  std::uint64_t projective_points = 0;
  std::uint64_t distinct_ratio_values = 0;
  std::optional<std::uint64_t> deciding_pair_count;

  friend bool operator==(const ScatterReport&, const ScatterReport&) = default;
};

namespace detail {

inline constexpr std::uint32_t kUnseen = 0xffffffffU;

/// Ratio S(gamma^a)/gamma^{a q^t} as a code: 0 for zero, log + 1 otherwise.
class RatioKernel {
 public:
  RatioKernel(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t) : ctx_(ctx) {
    for (const auto& term : s.terms()) terms_.emplace_back(term.a.log, ctx.q_power_mod(term.r));
    qt_ = ctx.q_power_mod(t);
  }

  std::uint32_t code(std::uint32_t a) const noexcept {
    const std::uint64_t mod = ctx_.order();
    std::uint32_t acc = FFElement::kNoLog;
    for (const auto& [la, qr] : terms_)
      acc = ctx_.add_logs(acc, static_cast<std::uint32_t>((la + std::uint64_t{a} * qr) % mod));
    if (acc == FFElement::kNoLog) return 0;
    const std::uint64_t shift = std::uint64_t{a} * qt_ % mod;
    return static_cast<std::uint32_t>((acc + mod - shift) % mod) + 1;
  }

 private:
  const FieldCtx& ctx_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms_;
  std::uint64_t qt_ = 0;
};

/// Codes of the class representatives gamma^a, a = 0..P-1.
inline std::vector<std::uint32_t> representative_codes(const FieldCtx& ctx, const LinearizedPolynomial& s,
                                                       std::uint32_t t, unsigned jobs) {
  const std::uint32_t count = ctx.projective_points();
  std::vector<std::uint32_t> codes(count);
  const RatioKernel kernel(ctx, s, t);
  auto fill = [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t a = lo; a < hi; ++a) codes[a] = kernel.code(a);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, count / 4096 + 1));
  if (jobs == 1) {
    fill(0, count);
    return codes;
  }
  {
    std::vector<std::jthread> workers;
    const std::uint32_t chunk = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint32_t lo = std::min(count, w * chunk);
      const std::uint32_t hi = std::min(count, lo + chunk);
      workers.emplace_back(fill, lo, hi);
    }
  }
  return codes;
}

inline void check_oracle_preconditions(const FieldCtx& ctx, std::uint32_t t, const OracleOptions& opts) {
  if (t >= ctx.n()) throw Error(ErrorKind::BadIndex, "index " + std::to_string(t) + " not below n");
  if (ctx.size() > opts.cap) throw Error(ErrorKind::FieldTooLarge, "field exceeds oracle cap");
}

/// group id per representative (the smallest representative in its group)
inline std::vector<std::uint32_t> group_leaders(const FieldCtx& ctx, const std::vector<std::uint32_t>& codes) {
  std::vector<std::uint32_t> first(std::size_t{ctx.order()} + 1, kUnseen);
  std::vector<std::uint32_t> leader(codes.size());
  for (std::uint32_t a = 0; a < codes.size(); ++a) {
    auto& f = first[codes[a]];
    if (f == kUnseen) f = a;
    leader[a] = f;
  }
  return leader;
}

}  // namespace detail

inline ScatterReport is_scattered_bruteforce(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t,
                                             const OracleOptions& opts = {}) {
  detail::check_oracle_preconditions(ctx, t, opts);
  const auto codes = detail::representative_codes(ctx, s, t, opts.jobs);

  ScatterReport rep;
  rep.index = t;
  rep.projective_points = codes.size();
  std::vector<std::uint32_t> first(std::size_t{ctx.order()} + 1, detail::kUnseen);
  std::vector<std::uint64_t> group_size;
  std::uint32_t best_y = detail::kUnseen, best_z = detail::kUnseen;
  std::vector<std::uint32_t> group_index(opts.census ? codes.size() : 0);
  for (std::uint32_t a = 0; a < codes.size(); ++a) {
    auto& f = first[codes[a]];
    if (f == detail::kUnseen) {
      f = a;
      ++rep.distinct_ratio_values;
      if (opts.census) group_size.push_back(0);
    } else if (f < best_y) {
      // f is the smallest member of its group and a the second smallest on
      // first collision, so (f, a) is that group's smallest pair.
      best_y = f;
      best_z = a;
    }
    if (opts.census) {
      if (f == a) group_index[a] = static_cast<std::uint32_t>(group_size.size() - 1);
      else group_index[a] = group_index[f];
      ++group_size[group_index[a]];
    }
  }
  rep.scattered = rep.distinct_ratio_values == rep.projective_points;
  if (!rep.scattered) rep.witness = ElementPair{ctx.from_log(best_y), ctx.from_log(best_z)};
  if (opts.census) {
    const std::uint64_t qm1 = ctx.q() - 1;
    std::uint64_t pairs = 0;
    for (auto g : group_size) pairs += g * qm1 * (g * qm1 - 1);
    rep.deciding_pair_count = pairs;
  }
  return rep;
}

struct DecidingPairCensus {
  std::uint64_t equal_ratio_pairs = 0;        // ordered, distinct, equal ratios
  std::uint64_t proportional_pairs = 0;       // ... and y/z in F_q
  std::uint64_t non_proportional_pairs = 0;   // ... and y/z outside F_q
  std::vector<ElementPair> pairs;             // first `limit`, ordered by (dlog y, dlog z)
};

inline DecidingPairCensus deciding_pairs(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t,
                                         std::uint64_t limit = 0, const OracleOptions& opts = {}) {
  detail::check_oracle_preconditions(ctx, t, opts);
  const auto codes = detail::representative_codes(ctx, s, t, opts.jobs);
  const auto leader = detail::group_leaders(ctx, codes);
  const std::uint64_t qm1 = ctx.q() - 1;
  const std::uint32_t points = ctx.projective_points();

  std::vector<std::uint64_t> size_by_leader(points, 0);
  for (auto l : leader) ++size_by_leader[l];
  DecidingPairCensus census;
  for (auto g : size_by_leader) census.equal_ratio_pairs += g * qm1 * (g * qm1 - 1);
  census.proportional_pairs = std::uint64_t{points} * qm1 * (qm1 - 1);
  census.non_proportional_pairs = census.equal_ratio_pairs - census.proportional_pairs;

  if (limit > 0) {
    // members[leader] = all dlogs in the group, ascending
    std::vector<std::vector<std::uint32_t>> members(points);
    for (std::uint32_t k = 0; k < ctx.order(); ++k) members[leader[k % points]].push_back(k);
    for (std::uint32_t y = 0; y < ctx.order() && census.pairs.size() < limit; ++y) {
      for (auto z : members[leader[y % points]]) {
        if (z == y) continue;
        census.pairs.emplace_back(ctx.from_log(y), ctx.from_log(z));
        if (census.pairs.size() >= limit) break;
      }
    }
  }
  return census;
}

/// Linearized P permutes F_{q^n} iff its kernel is {0}; the kernel is an
/// F_q-subspace so one representative per class suffices.
inline bool is_permutation(const FieldCtx& ctx, const LinearizedPolynomial& p, std::uint64_t cap = kDefaultFieldCap) {
  if (ctx.size() > cap) throw Error(ErrorKind::FieldTooLarge, "field exceeds scan cap");
  for (std::uint32_t a = 0; a < ctx.projective_points(); ++a)
    if (evaluate(ctx, p, ctx.from_log(a)).is_zero()) return false;
  return true;
}

struct PpOptions {
  bool relaxed = false;  // allow 0 <= t <= r_1 instead of 0 < t < r_1
  std::uint64_t cap = kDefaultFieldCap;
};

/// S scattered of index t iff S_rho^t is a permutation for every rho outside F_q.
inline bool scattered_via_pp(const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t,
                             const PpOptions& opts = {}) {
  const std::uint32_t r1 = s.min_exponent();
  const bool range_ok = opts.relaxed ? t <= r1 : (t > 0 && t < r1);
  if (!range_ok)
    throw Error(ErrorKind::HypothesisViolated, "index " + std::to_string(t) + " outside the admissible range below r_1");
  const std::uint64_t qt_minus_1 = *nt::checked_pow(ctx.q(), t, ctx.size()) - 1;
  for (const auto& term : s.terms())
    if (!order_divides(ctx, term.a, qt_minus_1))
      throw Error(ErrorKind::HypothesisViolated, "a coefficient order does not divide q^t - 1");
  if (ctx.size() > opts.cap) throw Error(ErrorKind::FieldTooLarge, "field exceeds scan cap");

  for (std::uint32_t k = 0; k < ctx.order(); ++k) {
    const FFElement rho = ctx.from_log(k);
    if (in_base_subfield(ctx, rho)) continue;
    try {
      if (!is_permutation(ctx, rho_transform(ctx, s, t, rho), opts.cap)) return false;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroPolynomial) throw;
      return false;
    }
  }
  return true;
}

struct DeskVerdict {
  std::uint32_t m = 0;       // extension multiplier
  std::uint32_t degree = 0;  // n * m
  ScatterReport report;
};

/// Runs the oracle for S over F_{q^{nm}} for each m. Coefficients are given
/// as gamma-logs in F_{q^n} and re-embedded by a -> a (q^{nm}-1)/(q^n-1).
inline std::vector<DeskVerdict> is_exceptional_desk(std::uint32_t p, std::uint32_t m_base, std::uint32_t n,
                                                    const std::vector<std::pair<std::uint32_t, std::uint64_t>>& spec,
                                                    std::uint32_t t, const std::vector<std::uint32_t>& m_list,
                                                    const OracleOptions& opts = {}) {
  std::vector<DeskVerdict> out;
  for (auto mult : m_list) {
    if (mult == 0) throw Error(ErrorKind::InvalidArgument, "extension multiplier must be positive");
    FieldOptions fopts;
    fopts.cap = opts.cap;
    const FieldCtx ext = build_field(p, m_base, n * mult, fopts);
    const std::uint64_t base_order = *nt::checked_pow(ext.q(), n, ext.size()) - 1;
    const std::uint64_t scale = ext.order() / base_order;
    std::vector<Term> raw;
    for (auto [r, k] : spec) raw.push_back({r, ext.from_log(nt::mulmod(k % base_order, scale, ext.order()))});
    const auto s = normalize(ext, std::move(raw));
    out.push_back({mult, n * mult, is_scattered_bruteforce(ext, s, t, opts)});
  }
  return out;
}

struct CosetConstancy {
  std::uint64_t pairs_checked = 0;
  bool holds = true;
};

/// For a scattered S: every deciding pair (y, z) has A_{coset(y)} = A_{coset(z)}
/// under the decomposition derived from factorize(S).
inline CosetConstancy coset_constancy_on_deciding_pairs(const FieldCtx& ctx, const LinearizedPolynomial& s,
                                                        std::uint32_t t) {
  const auto census = deciding_pairs(ctx, s, t, std::numeric_limits<std::uint64_t>::max());
  const auto form = cyclotomic_form(ctx, s);
  CosetConstancy out;
  for (const auto& [y, z] : census.pairs) {
    ++out.pairs_checked;
    if (form.table.A[form.decomposition.coset_of(y)] != form.table.A[form.decomposition.coset_of(z)])
      out.holds = false;
  }
  return out;
}

}  // namespace scatter
