#pragma once

// Table-backed arithmetic in F_{q^n} = F_{p^{mn}}.
//
// Elements carry two views: the integer encoding sum c_i p^i of the
// coefficient vector over F_p (constant term first) and the discrete log
// base gamma. Multiplication, inversion, powers and Frobenius act on the log;
// addition goes through a Zech table, log(1 + gamma^k).

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/number_theory.hpp"

namespace scatter {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 22;

/// One element of F_{q^n}. Plain data; only meaningful with the FieldCtx
/// that produced it.
struct FFElement {
  static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t enc = 0;     // sum c_i p^i
  std::uint32_t log = kNoLog;  // dlog base gamma, kNoLog iff zero

  bool is_zero() const noexcept { return log == kNoLog; }
  std::optional<std::uint64_t> dlog() const {
    if (is_zero()) return std::nullopt;
    return log;
  }
  friend bool operator==(const FFElement&, const FFElement&) = default;
};

struct FieldOptions {
  std::uint64_t cap = kDefaultFieldCap;
  bool strict_odd = true;  // reject characteristic 2
};

namespace detail {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t{p - c} * f[j]) % p);
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's test for a monic f of degree >= 1.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  // frob[k] = x^{p^k} mod f
  std::vector<Poly> frob(d + 1);
  frob[0] = x;
  for (std::size_t k = 1; k <= d; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  auto minus_x = [&](Poly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frob[d]).empty()) return false;
  for (auto [r, e] : nt::factorize(d)) {
    (void)e;
    Poly g = poly_gcd(f, minus_x(frob[d / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

inline Poly decode(std::uint64_t enc, std::uint32_t p, std::size_t len) {
  Poly v(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<std::uint32_t>(enc % p);
    enc /= p;
  }
  return v;
}

inline std::uint64_t encode(std::span<const std::uint32_t> v, std::uint32_t p) {
  std::uint64_t e = 0;
  for (std::size_t i = v.size(); i-- > 0;) e = e * p + v[i];
  return e;
}

}  // namespace detail

/// Immutable model of the tower F_p <= F_q <= F_{q^n}.
class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t degree() const noexcept { return m_ * n_; }
  std::uint64_t q() const noexcept { return q_; }
  /// q^n
  std::uint64_t size() const noexcept { return size_; }
  /// q^n - 1, the order of the multiplicative group.
  std::uint32_t order() const noexcept { return order_; }
  /// (q^n - 1)/(q - 1), the number of F_q-classes of nonzero elements.
  std::uint32_t projective_points() const noexcept { return order_ / static_cast<std::uint32_t>(q_ - 1); }

  /// Monic modulus, constant term first, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// Encoding sum c_i p^i over the coefficients below the leading term.
  std::uint64_t modulus_encoding() const {
    return detail::encode(std::span(modulus_).first(modulus_.size() - 1), p_);
  }
  FFElement gamma() const { return from_log(1 % order_); }
  const std::vector<std::pair<std::uint64_t, unsigned>>& order_factorization() const noexcept {
    return factorization_;
  }

  FFElement zero() const noexcept { return {}; }
  FFElement one() const noexcept { return {1, 0}; }

  FFElement from_log(std::uint64_t k) const {
    const auto l = static_cast<std::uint32_t>(k % order_);
    return {antilog_[l], l};
  }
  FFElement from_encoding(std::uint64_t enc) const {
    if (enc >= size_) throw Error(ErrorKind::InvalidArgument, "encoding out of range");
    const auto e = static_cast<std::uint32_t>(enc);
    return {e, log_[e]};
  }
  FFElement from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > degree()) throw Error(ErrorKind::InvalidArgument, "too many coefficients");
    for (auto c : coeffs)
      if (c >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient not reduced mod p");
    return from_encoding(detail::encode(coeffs, p_));
  }
  /// Image of an integer in the prime field.
  FFElement from_int(std::int64_t v) const {
    const auto pp = static_cast<std::int64_t>(p_);
    return from_encoding(static_cast<std::uint64_t>(((v % pp) + pp) % pp));
  }
  std::vector<std::uint32_t> coeffs(const FFElement& a) const { return detail::decode(a.enc, p_, degree()); }

  /// log(1 + gamma^k), or kNoLog when 1 + gamma^k = 0.
  std::uint32_t zech(std::uint32_t k) const noexcept { return zech_[k]; }
  std::uint32_t antilog(std::uint32_t k) const noexcept { return antilog_[k]; }
  std::uint32_t log_of(std::uint32_t enc) const noexcept { return log_[enc]; }
  /// q^j mod (q^n - 1), j reduced mod n.
  std::uint32_t q_power_mod(std::uint64_t j) const noexcept { return qpow_[j % n_]; }
  /// log of -1.
  std::uint32_t minus_one_log() const noexcept { return minus_one_log_; }

  /// Sum of two elements given by log (kNoLog = zero); returns a log.
  std::uint32_t add_logs(std::uint32_t la, std::uint32_t lb) const noexcept {
    if (la == FFElement::kNoLog) return lb;
    if (lb == FFElement::kNoLog) return la;
    const std::uint32_t d = lb >= la ? lb - la : lb + order_ - la;
    const std::uint32_t z = zech_[d];
    if (z == FFElement::kNoLog) return FFElement::kNoLog;
    std::uint32_t l = la + z;
    if (l >= order_) l -= order_;
    return l;
  }
  FFElement element_from_log_or_zero(std::uint32_t l) const noexcept {
    if (l == FFElement::kNoLog) return {};
    return {antilog_[l], l};
  }

  friend FieldCtx build_field(std::uint32_t p, std::uint32_t m, std::uint32_t n, const FieldOptions& opts);

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0, m_ = 0, n_ = 0;
  std::uint64_t q_ = 0, size_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t minus_one_log_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization_;
  std::vector<std::uint32_t> log_;      // indexed by encoding; log_[0] = kNoLog
  std::vector<std::uint32_t> antilog_;  // indexed by exponent
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> qpow_;
};

/// Builds F_{p^{mn}} with the smallest-encoding irreducible modulus and the
/// smallest-encoding primitive element.
inline FieldCtx build_field(std::uint32_t p, std::uint32_t m, std::uint32_t n, const FieldOptions& opts = {}) {
  if (!nt::is_prime(p)) throw Error(ErrorKind::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "m and n must be positive");
  if (opts.strict_odd && p == 2)
    throw Error(ErrorKind::EvenCharacteristicRejected, "characteristic 2 rejected in strict mode");
  const std::uint64_t cap = std::min<std::uint64_t>(opts.cap, std::numeric_limits<std::uint32_t>::max());
  const auto size = nt::checked_pow(p, std::uint64_t{m} * n, cap);
  if (!size) {
    throw Error(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(std::uint64_t{m} * n) +
                                              " exceeds cap " + std::to_string(opts.cap));
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.n_ = n;
  ctx.q_ = *nt::checked_pow(p, m, *size);
  ctx.size_ = *size;
  ctx.order_ = static_cast<std::uint32_t>(*size - 1);
  const std::size_t d = std::size_t{m} * n;

  for (std::uint64_t enc = 0;; ++enc) {
    detail::Poly f = detail::decode(enc, p, d);
    f.push_back(1);
    if (detail::is_irreducible(f, p)) {
      ctx.modulus_ = std::move(f);
      break;
    }
  }

  ctx.factorization_ = nt::factorize(ctx.order_);
  const std::uint32_t order = ctx.order_;
  auto has_full_order = [&](const detail::Poly& g) {
    if (order == 1) return true;
    for (auto [r, e] : ctx.factorization_) {
      (void)e;
      if (detail::poly_powmod(g, order / r, ctx.modulus_, p) == detail::Poly{1}) return false;
    }
    return true;
  };
  detail::Poly gamma;
  for (std::uint64_t enc = 1; enc < *size; ++enc) {
    detail::Poly g = detail::decode(enc, p, d);
    detail::trim(g);
    if (has_full_order(g)) {
      gamma = std::move(g);
      break;
    }
  }

  ctx.log_.assign(*size, FFElement::kNoLog);
  ctx.antilog_.assign(order, 0);
  detail::Poly cur(d, 0);
  cur[0] = 1;
  detail::Poly next(d, 0);
  const auto& f = ctx.modulus_;
  for (std::uint32_t k = 0; k < order; ++k) {
    const auto e = static_cast<std::uint32_t>(detail::encode(cur, p));
    ctx.antilog_[k] = e;
    ctx.log_[e] = k;
    // next = cur * gamma mod f, kept at fixed length d
    std::vector<std::uint64_t> acc(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (cur[i] == 0) continue;
      for (std::size_t j = 0; j < gamma.size(); ++j) acc[i + j] += std::uint64_t{cur[i]} * gamma[j];
    }
    for (std::size_t i = 2 * d; i-- > d;) {
      const std::uint64_t c = acc[i] % p;
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j) acc[i - d + j] += (p - c) * std::uint64_t{f[j]};
    }
    for (std::size_t i = 0; i < d; ++i) next[i] = static_cast<std::uint32_t>(acc[i] % p);
    std::swap(cur, next);
  }

  ctx.zech_.assign(order, FFElement::kNoLog);
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t e = ctx.antilog_[k];
    const std::uint32_t c0 = e % p;
    const std::uint32_t shifted = e - c0 + (c0 + 1) % p;
    ctx.zech_[k] = ctx.log_[shifted];
  }

  ctx.qpow_.resize(n);
  for (std::uint32_t j = 0; j < n; ++j) ctx.qpow_[j] = static_cast<std::uint32_t>(nt::powmod(ctx.q_, j, order));
  ctx.minus_one_log_ = ctx.log_[p - 1];
  return ctx;
}

// ---------------------------------------------------------------------------
// Element operations

inline FFElement add(const FieldCtx& ctx, const FFElement& a, const FFElement& b) {
  return ctx.element_from_log_or_zero(ctx.add_logs(a.log, b.log));
}

inline FFElement neg(const FieldCtx& ctx, const FFElement& a) {
  if (a.is_zero()) return a;
  return ctx.from_log(std::uint64_t{a.log} + ctx.minus_one_log());
}

inline FFElement sub(const FieldCtx& ctx, const FFElement& a, const FFElement& b) { return add(ctx, a, neg(ctx, b)); }

inline FFElement mul(const FieldCtx& ctx, const FFElement& a, const FFElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ctx.from_log(std::uint64_t{a.log} + b.log);
}

inline FFElement inv(const FieldCtx& ctx, const FFElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return ctx.from_log(ctx.order() - a.log);
}

inline FFElement div(const FieldCtx& ctx, const FFElement& a, const FFElement& b) { return mul(ctx, a, inv(ctx, b)); }

inline FFElement pow(const FieldCtx& ctx, const FFElement& a, std::uint64_t e) {
  if (a.is_zero()) return e == 0 ? ctx.one() : a;
  return ctx.from_log(nt::mulmod(a.log, e % ctx.order(), ctx.order()));
}

/// a^{q^j}
inline FFElement frobenius(const FieldCtx& ctx, const FFElement& a, std::uint64_t j) {
  if (a.is_zero()) return a;
  return ctx.from_log(std::uint64_t{a.log} * ctx.q_power_mod(j));
}

/// Multiplicative order via prime-by-prime reduction over the stored
/// factorization of q^n - 1.
inline std::uint64_t element_order(const FieldCtx& ctx, const FFElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "order of zero");
  const std::uint64_t big = ctx.order();
  std::uint64_t ord = big;
  auto is_identity_power = [&](std::uint64_t e) { return nt::mulmod(a.log, e, big) == 0; };
  for (auto [r, e] : ctx.order_factorization()) {
    for (unsigned i = 0; i < e && ord % r == 0 && is_identity_power(ord / r); ++i) ord /= r;
  }
  return ord;
}

/// N_{q^n/q}(a) = a^{(q^n-1)/(q-1)}
inline FFElement relative_norm(const FieldCtx& ctx, const FFElement& a) { return pow(ctx, a, ctx.projective_points()); }

inline bool in_base_subfield(const FieldCtx& ctx, const FFElement& a) {
  if (a.is_zero()) return true;
  return nt::mulmod(a.log, ctx.q() - 1, ctx.order()) == 0;
}

/// True iff |a| divides e; e = 0 is divisible by every order.
inline bool order_divides(const FieldCtx& ctx, const FFElement& a, std::uint64_t e) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "order of zero");
  return nt::mulmod(a.log, e % ctx.order(), ctx.order()) == 0;
}

}  // namespace scatter
