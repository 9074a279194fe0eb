#include <gtest/gtest.h>

#include <sstream>

#include "scatter/cli.hpp"

using namespace scatter;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <class Fn>
Captured capture(Fn&& fn) {
  std::ostringstream out, err;
  const int code = fn(out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const cli::RunOptions kRun;

}  // namespace

TEST(FieldInfo, F9AndErrors) {
  auto r = capture([](auto& o, auto& e) { return cli::cmd_field_info(3, 1, 2, "text", kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("x^2 + 1"), std::string::npos);
  EXPECT_NE(r.out.find("x + 1"), std::string::npos);
  EXPECT_NE(r.out.find("8 = 2^3"), std::string::npos);

  r = capture([](auto& o, auto& e) { return cli::cmd_field_info(3, 1, 2, "json", kRun, o, e); });
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["modulus"], (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(j["projective_points"], 4);

  EXPECT_EQ(capture([](auto& o, auto& e) { return cli::cmd_field_info(4, 1, 2, "text", kRun, o, e); }).code,
            cli::kExitConstruction);
  EXPECT_EQ(capture([](auto& o, auto& e) { return cli::cmd_field_info(3, 1, 30, "text", kRun, o, e); }).code,
            cli::kExitConstruction);
}

TEST(Check, AgreementAndModes) {
  CheckRequest req{5, 1, 5, "3:g^0,4:g^0", 3, "both", "json"};
  auto r = capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["oracle"]["scattered"], true);
  EXPECT_EQ(j["criteria_verdict"], true);

  req = {101, 1, 6, "2:g^0,4:g^0", 2, "oracle", "json"};
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); }).code, cli::kExitConstruction);
  req.mode = "criteria";
  r = capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["criteria_verdict"], false);

  req = {3, 1, 4, "1:g^0", 4, "both", "json"};
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); }).code, cli::kExitUsage);
  req = {3, 1, 4, "1:q^0", 0, "both", "json"};
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); }).code, cli::kExitUsage);
}

TEST(Check, CsvAndTextOutputs) {
  CheckRequest req{3, 1, 4, "1:g^0", 3, "both", "csv"};
  auto r = capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); });
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2U);
  EXPECT_EQ(ls[0], cli::kCsvHeader);
  EXPECT_EQ(ls[1].rfind("3,1,4,1:g^0,3,false,false,true,g^", 0), 0U) << ls[1];

  req.output = "text";
  r = capture([&](auto& o, auto& e) { return cli::cmd_check(req, kRun, o, e); });
  EXPECT_NE(r.out.find("oracle: not scattered"), std::string::npos);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Scan, PseudoregulusGridMatchesGcdRule) {
  cli::ScanRequest req;
  req.p = 3;
  req.n = 4;
  auto r = capture([&](auto& o, auto& e) { return cli::cmd_scan(req, kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 17U);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const std::uint32_t rr = (i - 1) / 4, t = (i - 1) % 4;
    const bool expected = t != rr && std::gcd(rr > t ? rr - t : t - rr, 4U) == 1;
    EXPECT_NE(ls[i].find(expected ? ",true," : ",false,"), std::string::npos) << ls[i];
  }
}

TEST(Scan, BinomialSignsOverF35AllAgree) {
  cli::ScanRequest req;
  req.p = 3;
  req.n = 5;
  req.family = "binomial";
  req.coeff_logs = {0, 121};
  auto r = capture([&](auto& o, auto& e) { return cli::cmd_scan(req, kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 1U + 10 * 4 * 2);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const bool agree = ls[i].find(",true,true,true,") != std::string::npos ||
                       ls[i].find(",false,false,true,") != std::string::npos;
    EXPECT_TRUE(agree) << ls[i];
  }
}

TEST(Scan, EmptyCustomFamily) {
  cli::ScanRequest req;
  req.p = 3;
  req.n = 4;
  req.family = "custom";
  auto r = capture([&](auto& o, auto& e) { return cli::cmd_scan(req, kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{cli::kCsvHeader}));

  req.output = "json";
  r = capture([&](auto& o, auto& e) { return cli::cmd_scan(req, kRun, o, e); });
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::array());
}

TEST(Verify, KnownSuitePassesUnknownFails) {
  auto r = capture([](auto& o, auto& e) { return cli::cmd_verify("lemmas", kRun, o, e); });
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("verify lemmas: PASS"), std::string::npos);
  r = capture([](auto& o, auto& e) { return cli::cmd_verify("nosuchsuite", kRun, o, e); });
  EXPECT_NE(r.code, cli::kExitOk);
  EXPECT_NE(r.err.find("UnknownSuite"), std::string::npos);
}

TEST(Environment, CapOverride) {
  ::setenv("SCATTER_FIELD_CAP", "100", 1);
  EXPECT_EQ(cli::default_cap(), 100U);
  ::unsetenv("SCATTER_FIELD_CAP");
  EXPECT_EQ(cli::default_cap(), kDefaultFieldCap);
}
