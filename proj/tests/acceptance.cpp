// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance 4 9        selected criteria

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "naive_oracle.hpp"
#include "scatter/cli.hpp"
#include "scatter/suites.hpp"

using namespace scatter;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string tally_text(const CheckTally& c) {
  std::string s = c.name + " " + std::to_string(c.passed) + "/" + std::to_string(c.total);
  for (const auto& f : c.failures) s += "\n      " + f;
  return s;
}

class Acceptance {
 public:
  const SuiteResult& suite(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) it = cache_.emplace(name, std::move(run_suites(name).front())).first;
    return it->second;
  }

  /// Passes when every named check exists, is non-empty and fully green;
  /// limit_s <= 0 means no time limit.
  Outcome checks(const SuiteResult& r, const std::vector<std::string>& names, double limit_s) {
    Outcome o{true, ""};
    for (const auto& n : names) {
      const auto* c = r.find(n);
      if (!c || c->total == 0) {
        o.pass = false;
        o.detail += "[" + n + " missing] ";
        continue;
      }
      o.pass = o.pass && c->ok();
      o.detail += tally_text(*c) + "; ";
    }
    return within(o, r.seconds, limit_s);
  }

  static Outcome within(Outcome o, double seconds, double limit_s) {
    std::ostringstream s;
    s.precision(3);
    s << o.detail << "time " << seconds << " s";
    if (limit_s > 0) s << " (limit " << limit_s << " s)";
    o.detail = s.str();
    if (limit_s > 0 && seconds >= limit_s) o.pass = false;
    return o;
  }

 private:
  std::map<std::string, SuiteResult> cache_;
};

Outcome criterion_1(Acceptance& a) { return a.checks(a.suite("lemmas"), {"subfield exponent"}, 1.0); }

Outcome criterion_2(Acceptance& a) { return a.checks(a.suite("lemmas"), {"cyclotomic relation"}, 5.0); }

Outcome criterion_3(Acceptance& a) {
  return a.checks(a.suite("pseudoregulus"), {"criterion = oracle", "criterion-only index sets"}, 30.0);
}

Outcome criterion_4(Acceptance& a) {
  return a.checks(a.suite("binomials"),
                  {"binomial criterion = oracle", "x^{5^3}+x^{5^4} over F_{5^5}", "criterion-only large fields"}, 60.0);
}

Outcome criterion_5(Acceptance& a) { return a.checks(a.suite("binomials"), {"affine criterion = oracle"}, 30.0); }

Outcome criterion_6(Acceptance& a) {
  return a.checks(a.suite("reductions"), {"regime t<r1", "regime t=r1", "regime t>r1"}, 60.0);
}

Outcome criterion_7(Acceptance& a) { return a.checks(a.suite("pp-criterion"), {"pp criterion = oracle"}, 60.0); }

Outcome criterion_8(Acceptance& a) {
  const auto x = a.checks(a.suite("pseudoregulus"), {"A_i=A_j on deciding pairs"}, 0);
  const auto y = a.checks(a.suite("binomials"), {"A_i=A_j on deciding pairs"}, 0);
  return {x.pass && y.pass, "pseudoregulus " + x.detail + " | binomials " + y.detail};
}

Outcome criterion_9(Acceptance& a) {
  auto o = a.checks(a.suite("csajbok"), {"F_{5^8} oracle matches", "hypothesis scope"}, 120.0);
  // the same F_{5^8} scans with four workers
  const auto t0 = std::chrono::steady_clock::now();
  SuiteOptions four;
  four.jobs = 4;
  const auto r4 = run_suites("csajbok", four).front();
  const double s4 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto o4 = Acceptance::within({r4.ok(), "4 workers: "}, s4, 30.0);
  return {o.pass && o4.pass, o.detail + "; " + o4.detail};
}

Outcome criterion_10(Acceptance& a) {
  return a.checks(a.suite("exceptional"),
                  {"certificate", "scattered at {1,2,3} over F_{3^5}", "index 2 over F_{3^5}", "index 2 over F_{3^10}"},
                  120.0);
}

// Every oracle run on a field of at most 81 elements is replayed by the
// all-pairs checker.
Outcome criterion_11(Acceptance&) {
  std::uint64_t compared = 0, mismatched = 0;
  std::string first;
  SuiteOptions so;
  so.observer = [&](const FieldCtx& ctx, const LinearizedPolynomial& s, std::uint32_t t, const ScatterReport& rep) {
    if (ctx.size() > 81) return;
    ++compared;
    if (reference::naive_is_scattered(ctx, s, t) != rep.scattered) {
      if (!mismatched++) first = format_poly(s) + " t=" + std::to_string(t);
    }
  };
  for (const char* name : {"pseudoregulus", "binomials", "reductions", "pp-criterion"}) run_suites(name, so);
  return {compared > 0 && mismatched == 0, std::to_string(compared - mismatched) + "/" + std::to_string(compared) +
                                               " oracle runs match" + (first.empty() ? "" : "; first mismatch " + first)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome(Acceptance&)>> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  Acceptance acc;
  int failed = 0;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    const auto o = criteria[k - 1](acc);
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
