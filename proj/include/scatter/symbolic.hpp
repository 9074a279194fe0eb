#pragma once

// Field parameters and polynomials described only by integers: coefficients
// are gamma-logs, so the criteria can run over fields far too large to
// tabulate (F_{25^100}, F_{27^110}, ...).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scatter/error.hpp"
#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"
#include "scatter/number_theory.hpp"

namespace scatter {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

inline BigInt big_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  std::uint64_t q() const { return *nt::checked_pow(p, m, std::numeric_limits<std::uint64_t>::max()); }
  BigInt order() const { return big_pow(q(), n) - 1; }
  BigInt projective_points() const { return order() / (q() - 1); }

  static FieldParams checked(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
    if (!nt::is_prime(p)) throw Error(ErrorKind::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "m and n must be positive");
    if (!nt::checked_pow(p, m, std::uint64_t{1} << 32)) throw Error(ErrorKind::InvalidArgument, "q too large");
    return {p, m, n};
  }
  static FieldParams from_q(std::uint64_t q, std::uint32_t n) {
    const auto pm = nt::prime_power(q);
    if (!pm) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
    return checked(static_cast<std::uint32_t>(pm->first), pm->second, n);
  }
  static FieldParams of(const FieldCtx& ctx) { return {ctx.p(), ctx.m(), ctx.n()}; }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

struct SymbolicTerm {
  std::uint32_t r = 0;
  BigInt log;  // coefficient gamma^log

  friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

/// Terms sorted by strictly increasing exponent below n.
struct SymbolicPoly {
  std::vector<SymbolicTerm> terms;

  std::size_t size() const { return terms.size(); }
  friend bool operator==(const SymbolicPoly&, const SymbolicPoly&) = default;
};

/// Reduces exponents mod n and logs mod q^n - 1 and sorts; distinct terms
/// cannot be merged without tables, so repeated exponents are rejected.
inline SymbolicPoly make_symbolic(const FieldParams& fp, std::vector<SymbolicTerm> terms) {
  if (terms.empty()) throw Error(ErrorKind::ZeroPolynomial, "no terms");
  const BigInt order = fp.order();
  for (auto& t : terms) {
    t.r %= fp.n;
    t.log = big_mod(t.log, order);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].r == terms[i - 1].r)
      throw Error(ErrorKind::InvalidArgument, "repeated exponent needs field tables to merge");
  return {std::move(terms)};
}

inline SymbolicPoly to_symbolic(const LinearizedPolynomial& s) {
  SymbolicPoly out;
  for (const auto& t : s.terms()) out.terms.push_back({t.r, BigInt(t.a.log)});
  return out;
}

/// |gamma^log| divides e, i.e. (q^n - 1) | log * e; e = 0 always qualifies.
inline bool order_divides(const FieldParams& fp, const BigInt& log, const BigInt& e) {
  return big_mod(log * e, fp.order()) == 0;
}

inline bool is_one(const FieldParams& fp, const BigInt& log) { return big_mod(log, fp.order()) == 0; }

inline bool is_minus_one(const FieldParams& fp, const BigInt& log) {
  const BigInt order = fp.order();
  if (fp.p == 2) return is_one(fp, log);
  return big_mod(log, order) == order / 2;
}

/// N_{q^n/q}(gamma^log) = 1 iff (q - 1) | log.
inline bool norm_is_one(const FieldParams& fp, const BigInt& log) { return big_mod(log, BigInt(fp.q() - 1)) == 0; }

}  // namespace scatter
