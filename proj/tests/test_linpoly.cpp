#include <gtest/gtest.h>

#include "scatter/cyclotomic.hpp"
#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"
#include "scatter/text_format.hpp"

using namespace scatter;

namespace {

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

// Direct evaluation: sum a_i * x^(q^r_i) by repeated multiplication.
FFElement eval_slow(const FieldCtx& ctx, const LinearizedPolynomial& s, const FFElement& x) {
  FFElement acc = ctx.zero();
  for (const auto& t : s.terms()) {
    FFElement xp = x;
    for (std::uint32_t i = 0; i < t.r; ++i) {
      FFElement y = ctx.one();
      for (std::uint64_t k = 0; k < ctx.q(); ++k) y = mul(ctx, y, xp);
      xp = y;
    }
    acc = add(ctx, acc, mul(ctx, t.a, xp));
  }
  return acc;
}

}  // namespace

TEST(Normalize, MergesReducesAndDropsZeros) {
  const auto ctx = build_field(3, 1, 4);
  const auto one = ctx.one();
  const auto s = normalize(ctx, {{5, one}, {1, one}, {2, one}});
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s.terms()[0].r, 1U);
  EXPECT_EQ(s.terms()[0].a, ctx.from_int(2));
  EXPECT_EQ(s.terms()[1].r, 2U);
  EXPECT_EQ(kind_of([&] { normalize(ctx, {{1, one}, {1, ctx.from_int(-1)}}); }), ErrorKind::ZeroPolynomial);
  EXPECT_EQ(kind_of([&] { normalize(ctx, {}); }), ErrorKind::ZeroPolynomial);
}

TEST(Evaluate, AgreesWithRepeatedMultiplication) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "0:g^5,1:g^17,3:[1,2]");
  for (std::uint64_t e = 0; e < ctx.size(); ++e) {
    const auto x = ctx.from_encoding(e);
    EXPECT_EQ(evaluate(ctx, s, x), eval_slow(ctx, s, x));
  }
}

TEST(Evaluate, IsBaseLinear) {
  const auto ctx = build_field(5, 1, 3);
  const auto s = parse_poly(ctx, "0:g^3,2:g^100");
  for (std::uint64_t a = 0; a < ctx.size(); a += 3) {
    for (std::uint64_t b = 0; b < ctx.size(); b += 11) {
      const auto x = ctx.from_encoding(a), y = ctx.from_encoding(b);
      EXPECT_EQ(evaluate(ctx, s, add(ctx, x, y)), add(ctx, evaluate(ctx, s, x), evaluate(ctx, s, y)));
    }
    const auto lambda = ctx.from_int(3);
    const auto x = ctx.from_encoding(a);
    EXPECT_EQ(evaluate(ctx, s, mul(ctx, lambda, x)), mul(ctx, lambda, evaluate(ctx, s, x)));
  }
}

TEST(RatioMap, ConstantOnBaseFieldClassesAndGuarded) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "1:g^0,2:g^7");
  for (std::uint32_t k = 0; k < ctx.order(); ++k) {
    const auto x = ctx.from_log(k);
    EXPECT_EQ(ratio_map(ctx, s, 1, x), ratio_map(ctx, s, 1, neg(ctx, x)));
  }
  EXPECT_EQ(kind_of([&] { ratio_map(ctx, s, 1, ctx.zero()); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([&] { ratio_map(ctx, s, 4, ctx.one()); }), ErrorKind::BadIndex);
}

TEST(Transforms, ShiftStripAndT) {
  const auto ctx = build_field(3, 1, 5);
  const auto s = parse_poly(ctx, "1:g^4,3:g^9");
  EXPECT_EQ(shift_down(ctx, strip_min_term(ctx, s), 1), parse_poly(ctx, "2:g^9"));
  EXPECT_EQ(t_transform(ctx, s), parse_poly(ctx, "0:g^4,2:g^9"));
  EXPECT_EQ(kind_of([&] { shift_down(ctx, s, 2); }), ErrorKind::IndexExceedsMinExponent);
  EXPECT_EQ(kind_of([&] { strip_min_term(ctx, parse_poly(ctx, "2:g^1")); }), ErrorKind::WouldBeZero);

  const auto f55 = build_field(5, 1, 5);
  EXPECT_EQ(shift_down(f55, parse_poly(f55, "3:g^0,4:g^0"), 2), parse_poly(f55, "1:g^0,2:g^0"));
}

TEST(Transforms, RhoTransformIdentity) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "2:g^10,3:g^20");
  for (std::uint32_t t = 0; t <= 2; ++t) {
    const auto st = shift_down(ctx, s, t);
    for (std::uint32_t k = 1; k < ctx.order(); k += 3) {
      const auto rho = ctx.from_log(k);
      if (in_base_subfield(ctx, rho)) continue;
      const auto sr = rho_transform(ctx, s, t, rho);
      for (std::uint64_t e = 0; e < ctx.size(); ++e) {
        const auto x = ctx.from_encoding(e);
        const auto expected = sub(ctx, evaluate(ctx, st, mul(ctx, rho, x)), mul(ctx, rho, evaluate(ctx, st, x)));
        EXPECT_EQ(evaluate(ctx, sr, x), expected);
      }
    }
  }
  EXPECT_EQ(kind_of([&] { rho_transform(ctx, s, 1, ctx.from_int(2)); }), ErrorKind::RhoInBaseField);
  EXPECT_EQ(kind_of([&] { rho_transform(ctx, s, 3, ctx.gamma()); }), ErrorKind::IndexExceedsMinExponent);
}

// Equal ratios at index r_1 survive removing the least term (pairwise over F_{3^4}).
TEST(Transforms, StripMinTermPreservesRatioCollisions) {
  const auto ctx = build_field(3, 1, 4);
  for (const char* text : {"1:g^0,2:g^0", "1:g^0,3:g^40", "1:g^3,2:g^12,3:g^60"}) {
    const auto s = parse_poly(ctx, text);
    const auto stripped = strip_min_term(ctx, s);
    const std::uint32_t r1 = s.min_exponent();
    for (std::uint32_t a = 0; a < ctx.order(); ++a) {
      for (std::uint32_t b = a + 1; b < ctx.order(); ++b) {
        const auto y = ctx.from_log(a), z = ctx.from_log(b);
        EXPECT_EQ(ratio_map(ctx, s, r1, y) == ratio_map(ctx, s, r1, z),
                  ratio_map(ctx, stripped, r1, y) == ratio_map(ctx, stripped, r1, z))
            << text;
      }
    }
  }
}

TEST(Cyclotomic, FactorizeExponentsLargeField) {
  const auto ef = factorize_exponents(9, 8, {2, 4, 6});
  EXPECT_EQ(ef.r1, 2U);
  EXPECT_EQ(ef.d, 2U);
  EXPECT_EQ(ef.s, 80U);
  EXPECT_EQ(ef.f_exponents, (std::vector<std::uint64_t>{0, 1, 82}));
  EXPECT_EQ(kind_of([] { factorize_exponents(3, 4, {2, 1}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { factorize_exponents(3, 4, {1, 4}); }), ErrorKind::InvalidArgument);
}

TEST(Cyclotomic, DecomposeAndCosets) {
  const auto ctx = build_field(3, 1, 4);
  const auto d = decompose(ctx, 8);
  EXPECT_EQ(d.l, 10U);
  EXPECT_EQ(d.xi, ctx.from_log(8));
  EXPECT_EQ(d.coset_of(ctx.from_log(23)), 3U);
  EXPECT_EQ(kind_of([&] { decompose(ctx, 7); }), ErrorKind::NotADivisor);
  EXPECT_EQ(kind_of([&] { d.coset_of(ctx.zero()); }), ErrorKind::DivisionByZero);
}

TEST(Cyclotomic, BinomialTableOverF55) {
  const auto ctx = build_field(5, 1, 5);
  const auto form = cyclotomic_form(ctx, parse_poly(ctx, "3:g^0,4:g^0"));
  EXPECT_EQ(form.factorization.r1, 3U);
  EXPECT_EQ(form.factorization.s, 4U);
  EXPECT_EQ(form.decomposition.l, 781U);
  EXPECT_EQ(form.table.A.size(), 781U);
  EXPECT_EQ(form.table.A[0], ctx.from_int(2));  // f(1) = 1 + 1
}

TEST(Cyclotomic, RelationHoldsForMixedPolynomials) {
  const auto ctx = build_field(3, 1, 5);
  for (const char* text : {"0:g^1", "1:g^0,3:g^121", "0:g^5,2:g^77,4:g^200", "2:[1,1],3:[0,0,1]"})
    EXPECT_TRUE(lemma_relation_check(ctx, parse_poly(ctx, text))) << text;
}
