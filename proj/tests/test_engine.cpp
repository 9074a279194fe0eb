#include <gtest/gtest.h>

#include "naive_oracle.hpp"
#include "scatter/engine.hpp"
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

}  // namespace

TEST(Oracle, MonomialsOverF81) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "1:g^0");
  const auto r0 = is_scattered_bruteforce(ctx, s, 0);
  EXPECT_TRUE(r0.scattered);
  EXPECT_EQ(r0.projective_points, 40U);
  EXPECT_EQ(r0.distinct_ratio_values, 40U);
  EXPECT_FALSE(r0.witness);

  const auto r3 = is_scattered_bruteforce(ctx, s, 3);
  EXPECT_FALSE(r3.scattered);
  ASSERT_TRUE(r3.witness);
  const auto [y, z] = *r3.witness;
  EXPECT_EQ(ratio_map(ctx, s, 3, y), ratio_map(ctx, s, 3, z));
  EXPECT_FALSE(in_base_subfield(ctx, div(ctx, y, z)));
}

TEST(Oracle, AgreesWithNaiveAllPairs) {
  const auto ctx = build_field(3, 1, 4);
  for (const char* text : {"1:g^0", "2:g^0", "0:g^1,1:g^3", "1:g^0,3:g^40", "0:g^2,2:g^9,3:g^17", "1:g^0,2:g^0"}) {
    const auto s = parse_poly(ctx, text);
    for (std::uint32_t t = 0; t < 4; ++t)
      EXPECT_EQ(is_scattered_bruteforce(ctx, s, t).scattered, reference::naive_is_scattered(ctx, s, t))
          << text << " t=" << t;
  }
}

TEST(Oracle, WorkerCountDoesNotChangeTheReport) {
  const auto ctx = build_field(3, 1, 9);
  const auto s = parse_poly(ctx, "1:g^0,4:g^100");
  OracleOptions one, four;
  four.jobs = 4;
  one.census = four.census = true;
  for (std::uint32_t t : {0U, 1U, 4U}) EXPECT_EQ(is_scattered_bruteforce(ctx, s, t, one), is_scattered_bruteforce(ctx, s, t, four));
}

TEST(Oracle, Preconditions) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "1:g^0");
  EXPECT_EQ(kind_of([&] { is_scattered_bruteforce(ctx, s, 4); }), ErrorKind::BadIndex);
  OracleOptions tiny;
  tiny.cap = 27;
  EXPECT_EQ(kind_of([&] { is_scattered_bruteforce(ctx, s, 0, tiny); }), ErrorKind::FieldTooLarge);
}

TEST(DecidingPairs, CensusForScatteredMonomial) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "1:g^0");
  OracleOptions o;
  o.census = true;
  EXPECT_EQ(is_scattered_bruteforce(ctx, s, 0, o).deciding_pair_count, 80U);
  const auto c = deciding_pairs(ctx, s, 0, 1000);
  EXPECT_EQ(c.equal_ratio_pairs, 80U);
  EXPECT_EQ(c.proportional_pairs, 80U);
  EXPECT_EQ(c.non_proportional_pairs, 0U);
  ASSERT_EQ(c.pairs.size(), 80U);
  EXPECT_EQ(c.pairs.front(), (ElementPair{ctx.from_log(0), ctx.from_log(40)}));
}

TEST(DecidingPairs, CensusMatchesPairEnumeration) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "1:g^0,3:g^0");
  const auto c = deciding_pairs(ctx, s, 1, std::numeric_limits<std::uint64_t>::max());
  std::uint64_t brute = 0, proportional = 0;
  for (std::uint32_t a = 0; a < ctx.order(); ++a)
    for (std::uint32_t b = 0; b < ctx.order(); ++b) {
      if (a == b) continue;
      const auto y = ctx.from_log(a), z = ctx.from_log(b);
      if (ratio_map(ctx, s, 1, y) != ratio_map(ctx, s, 1, z)) continue;
      ++brute;
      proportional += in_base_subfield(ctx, div(ctx, y, z));
    }
  EXPECT_EQ(c.equal_ratio_pairs, brute);
  EXPECT_EQ(c.proportional_pairs, proportional);
  EXPECT_EQ(c.pairs.size(), brute);
  OracleOptions o;
  o.census = true;
  EXPECT_EQ(is_scattered_bruteforce(ctx, s, 1, o).deciding_pair_count, brute);
}

TEST(Permutation, KernelScan) {
  const auto ctx = build_field(3, 1, 4);
  EXPECT_TRUE(is_permutation(ctx, parse_poly(ctx, "1:g^0")));
  EXPECT_FALSE(is_permutation(ctx, parse_poly(ctx, "0:g^0,1:g^40")));  // x - x^3 kills F_3
  for (std::uint32_t k = 0; k < ctx.order(); k += 5) {
    const auto p = from_log_terms(ctx, {{0, 0}, {1, k}});
    std::vector<bool> hit(ctx.size(), false);
    for (std::uint64_t e = 0; e < ctx.size(); ++e) hit[evaluate(ctx, p, ctx.from_encoding(e)).enc] = true;
    EXPECT_EQ(is_permutation(ctx, p), std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST(PermutationCriterion, GuardsAndVerdicts) {
  const auto ctx = build_field(3, 1, 4);
  const auto s = parse_poly(ctx, "2:g^0,3:g^0");
  EXPECT_EQ(scattered_via_pp(ctx, s, 1), is_scattered_bruteforce(ctx, s, 1).scattered);
  EXPECT_EQ(kind_of([&] { scattered_via_pp(ctx, s, 0); }), ErrorKind::HypothesisViolated);
  EXPECT_EQ(kind_of([&] { scattered_via_pp(ctx, s, 2); }), ErrorKind::HypothesisViolated);
  EXPECT_EQ(kind_of([&] { scattered_via_pp(ctx, parse_poly(ctx, "2:g^1"), 1); }), ErrorKind::HypothesisViolated);
  PpOptions relaxed;
  relaxed.relaxed = true;
  for (std::uint32_t t = 0; t <= 2; ++t)
    EXPECT_EQ(scattered_via_pp(ctx, s, t, relaxed), is_scattered_bruteforce(ctx, s, t).scattered) << "t=" << t;
}

TEST(ExceptionalDesk, BaseFieldMatchesDirectOracle) {
  const auto ctx = build_field(3, 1, 5);
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> spec = {{1, 0}, {3, ctx.minus_one_log()}};
  const auto v = is_exceptional_desk(3, 1, 5, spec, 2, {1});
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].degree, 5U);
  EXPECT_EQ(v[0].report, is_scattered_bruteforce(ctx, from_log_terms(ctx, spec), 2));
  EXPECT_TRUE(v[0].report.scattered);
}

// x^3 - x^27 vanishes on F_9^* inside F_{3^10}: the degree-10 extension is a
// genuine counterexample at index 2, with the witness pair in F_9.
TEST(ExceptionalDesk, DegreeTenCollapsesOnF9) {
  const auto base = build_field(3, 1, 5);
  const auto v = is_exceptional_desk(3, 1, 5, {{1, 0}, {3, base.minus_one_log()}}, 2, {2});
  ASSERT_EQ(v.size(), 1U);
  EXPECT_FALSE(v[0].report.scattered);
  const auto ext = build_field(3, 1, 10);
  ASSERT_TRUE(v[0].report.witness);
  const auto [y, z] = *v[0].report.witness;
  EXPECT_EQ(pow(ext, y, 9), y);
  EXPECT_EQ(pow(ext, z, 9), z);
}

TEST(CosetConstancy, HoldsOnScatteredBinomial) {
  const auto ctx = build_field(5, 1, 5);
  const auto cc = coset_constancy_on_deciding_pairs(ctx, parse_poly(ctx, "3:g^0,4:g^0"), 3);
  EXPECT_TRUE(cc.holds);
  EXPECT_EQ(cc.pairs_checked, 781U * 4 * 3);
}
