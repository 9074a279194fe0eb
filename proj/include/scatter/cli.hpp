#pragma once

// Command implementations behind the `scatter` tool. Each writes to the given
// streams and returns the process exit status.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter/criteria.hpp"
#include "scatter/engine.hpp"
#include "scatter/error.hpp"
#include "scatter/field.hpp"
#include "scatter/report.hpp"
#include "scatter/suites.hpp"
#include "scatter/symbolic.hpp"
#include "scatter/text_format.hpp"

namespace scatter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConstruction = 2;
inline constexpr int kExitVerification = 3;

inline constexpr const char* kCsvHeader = "p,m,n,poly,index,criteria,oracle,agree,witness_y,witness_z";

/// SCATTER_FIELD_CAP overrides the built-in table cap.
inline std::uint64_t default_cap() {
  if (const char* env = std::getenv("SCATTER_FIELD_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultFieldCap;
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime:
    case ErrorKind::FieldTooLarge:
    case ErrorKind::EvenCharacteristicRejected:
      return kExitConstruction;
    default:
      return kExitUsage;
  }
}

struct RunOptions {
  std::uint64_t cap = kDefaultFieldCap;
  unsigned jobs = 1;
};

inline std::string format_field_poly(const std::vector<std::uint32_t>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = c[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(c[i]);
    if (i > 0) out += (show_coeff ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.empty() ? "0" : out;
}

inline std::string format_factorization(const std::vector<std::pair<std::uint64_t, unsigned>>& f) {
  std::string out;
  for (const auto& [prime, e] : f) {
    if (!out.empty()) out += " * ";
    out += std::to_string(prime) + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return out.empty() ? "1" : out;
}

inline int cmd_field_info(std::uint32_t p, std::uint32_t m, std::uint32_t n, const std::string& output,
                          const RunOptions& ro, std::ostream& out, std::ostream& err) {
  try {
    FieldOptions fo;
    fo.cap = ro.cap;
    const auto ctx = build_field(p, m, n, fo);
    const auto gamma = ctx.coeffs(ctx.gamma());
    if (output == "json") {
      nlohmann::json j = FieldFingerprint::of(ctx);
      j["q"] = ctx.q();
      j["modulus"] = ctx.modulus();
      j["gamma"] = gamma;
      j["order"] = ctx.order();
      j["order_factorization"] = ctx.order_factorization();
      j["projective_points"] = ctx.projective_points();
      out << j.dump(2) << '\n';
    } else {
      out << "field      F_{" << ctx.q() << "^" << n << "} = F_{" << p << "^" << ctx.degree() << "}\n"
          << "modulus    " << format_field_poly(ctx.modulus()) << " (encoding " << ctx.modulus_encoding() << ")\n"
          << "gamma      " << format_field_poly(gamma) << " (encoding " << ctx.gamma().enc << ")\n"
          << "q^n-1      " << ctx.order() << " = " << format_factorization(ctx.order_factorization()) << '\n'
          << "(q^n-1)/(q-1) " << ctx.projective_points() << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

struct PreparedField {
  FieldParams params;
  std::optional<FieldCtx> ctx;  // absent when over the cap
};

inline PreparedField prepare_field(std::uint32_t p, std::uint32_t m, std::uint32_t n, const RunOptions& ro) {
  PreparedField pf{FieldParams::checked(p, m, n), std::nullopt};
  FieldOptions fo;
  fo.cap = ro.cap;
  try {
    pf.ctx.emplace(build_field(p, m, n, fo));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::FieldTooLarge) throw;
  }
  return pf;
}

/// Criteria first, then the oracle; disagreement is reported, not thrown.
inline ReportEnvelope evaluate(const PreparedField& pf, const CheckRequest& req, const RunOptions& ro) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  if (req.mode != "oracle" && req.mode != "criteria" && req.mode != "both")
    throw Error(ErrorKind::Parse, "mode must be oracle, criteria or both");
  if (req.index >= req.n) throw Error(ErrorKind::Parse, "index " + std::to_string(req.index) + " not below n");

  ReportEnvelope env;
  env.request = req;
  env.field = {req.p, req.m, req.n, std::nullopt, std::nullopt};
  if (pf.ctx) env.field = FieldFingerprint::of(*pf.ctx);

  const auto raw = parse_poly_text(req.poly);
  std::optional<LinearizedPolynomial> s;
  if (pf.ctx) s = to_polynomial(*pf.ctx, raw);

  if (req.mode != "oracle") {
    const auto t0 = clock::now();
    const SymbolicPoly sym = s ? to_symbolic(*s) : to_symbolic(pf.params, raw);
    env.criteria = criteria_for(pf.params, sym, req.index);
    env.criteria_verdict = combine(env.criteria).verdict;
    env.timing_ms["criteria"] = ms_since(t0);
  }
  if (req.mode != "criteria") {
    if (!pf.ctx) {
      if (req.mode == "oracle") throw Error(ErrorKind::FieldTooLarge, "field exceeds oracle cap " + std::to_string(ro.cap));
      env.oracle_status = "FieldTooLarge";
    } else {
      const auto t0 = clock::now();
      OracleOptions oo;
      oo.cap = ro.cap;
      oo.jobs = ro.jobs;
      env.oracle = is_scattered_bruteforce(*pf.ctx, *s, req.index, oo);
      env.oracle_status = "ok";
      env.timing_ms["oracle"] = ms_since(t0);
    }
  }
  if (env.criteria_verdict && env.oracle) env.agree = *env.criteria_verdict == env.oracle->scattered;
  return env;
}

inline bool is_failure(const ReportEnvelope& env) {
  return (env.agree && !*env.agree) || combine(env.criteria).conflict;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + '"';
}

inline std::string csv_row(const ReportEnvelope& env) {
  auto b = [](std::optional<bool> v, const char* none) { return v ? (*v ? "true" : "false") : none; };
  std::ostringstream row;
  row << env.request.p << ',' << env.request.m << ',' << env.request.n << ',' << csv_quote(env.request.poly) << ','
      << env.request.index << ',' << b(env.criteria_verdict, "none") << ','
      << (env.oracle ? (env.oracle->scattered ? "true" : "false") : env.oracle_status) << ',' << b(env.agree, "")
      << ',';
  if (env.oracle && env.oracle->witness)
    row << format_element(env.oracle->witness->first) << ',' << format_element(env.oracle->witness->second);
  else
    row << ',';
  return row.str();
}

inline void write_text(std::ostream& out, const ReportEnvelope& env) {
  out << "F_{" << env.request.p << "^" << env.request.m << "}^" << env.request.n << "  S = " << env.request.poly
      << "  index " << env.request.index << '\n';
  for (const auto& v : env.criteria) {
    out << "  criterion " << v.source << ": "
        << (v.applicable ? (*v.verdict ? "scattered" : "not scattered") : "not applicable") << '\n';
    for (const auto& h : v.hypotheses)
      out << "    [" << (h.satisfied ? "x" : " ") << "] " << h.name << (h.detail.empty() ? "" : " (" + h.detail + ")")
          << '\n';
  }
  if (env.criteria.empty() && env.request.mode != "oracle") out << "  no criterion covers this case\n";
  if (env.oracle) {
    out << "  oracle: " << (env.oracle->scattered ? "scattered" : "not scattered") << " ("
        << env.oracle->distinct_ratio_values << " of " << env.oracle->projective_points << " ratio values distinct)\n";
    if (env.oracle->witness)
      out << "  witness: y=" << format_element(env.oracle->witness->first)
          << " z=" << format_element(env.oracle->witness->second) << '\n';
  } else if (env.request.mode != "criteria") {
    out << "  oracle: " << env.oracle_status << '\n';
  }
  if (env.agree) out << "  agree: " << (*env.agree ? "yes" : "NO") << '\n';
}

inline int cmd_check(const CheckRequest& req, const RunOptions& ro, std::ostream& out, std::ostream& err) {
  try {
    if (req.output != "json" && req.output != "csv" && req.output != "text")
      throw Error(ErrorKind::Parse, "output must be json, csv or text");
    const auto pf = prepare_field(req.p, req.m, req.n, ro);
    const auto env = evaluate(pf, req, ro);
    if (req.output == "json") out << nlohmann::json(env).dump(2) << '\n';
    else if (req.output == "csv") out << kCsvHeader << '\n' << csv_row(env) << '\n';
    else write_text(out, env);
    if (is_failure(env)) {
      err << "error: criteria and oracle disagree\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

struct ScanRequest {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint32_t n = 0;
  std::string family = "pseudoregulus";  // pseudoregulus | binomial | custom
  std::vector<std::string> polys;         // custom family
  std::vector<std::uint32_t> indices;     // empty: every index (pseudoregulus, custom) or {r_1, r_2} (binomial)
  std::vector<std::uint64_t> coeff_logs = {0};  // binomial coefficient choices for a_1 and a_2
  bool order_filter = true;                     // binomial: keep only |a_2| | q^{r_1}-1
  std::string mode = "both";
  std::string output = "csv";  // csv | json
};

/// (poly text, indices) rows of a scan family.
inline std::vector<std::pair<std::string, std::vector<std::uint32_t>>> scan_family(const ScanRequest& req,
                                                                                   const PreparedField& pf) {
  std::vector<std::uint32_t> all(req.n);
  std::iota(all.begin(), all.end(), 0U);
  const auto& given = req.indices.empty() ? all : req.indices;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> rows;
  if (req.family == "pseudoregulus") {
    for (std::uint32_t r = 0; r < req.n; ++r) rows.push_back({std::to_string(r) + ":g^0", given});
  } else if (req.family == "binomial") {
    for (std::uint32_t r1 = 0; r1 < req.n; ++r1) {
      const BigInt e = big_pow(pf.params.q(), r1) - 1;
      for (std::uint32_t r2 = r1 + 1; r2 < req.n; ++r2) {
        for (auto a1 : req.coeff_logs) {
          for (auto a2 : req.coeff_logs) {
            if (req.order_filter && !order_divides(pf.params, BigInt(a2), e)) continue;
            const auto text = std::to_string(r1) + ":g^" + std::to_string(a1) + "," + std::to_string(r2) + ":g^" +
                              std::to_string(a2);
            rows.push_back({text, req.indices.empty() ? std::vector<std::uint32_t>{r1, r2} : req.indices});
          }
        }
      }
    }
  } else if (req.family == "custom") {
    for (const auto& poly : req.polys) rows.push_back({poly, given});
  } else {
    throw Error(ErrorKind::Parse, "family must be pseudoregulus, binomial or custom");
  }
  return rows;
}

inline int cmd_scan(const ScanRequest& req, const RunOptions& ro, std::ostream& out, std::ostream& err) {
  try {
    if (req.output != "csv" && req.output != "json") throw Error(ErrorKind::Parse, "scan output must be csv or json");
    for (auto t : req.indices)
      if (t >= req.n) throw Error(ErrorKind::Parse, "index " + std::to_string(t) + " not below n");
    const auto pf = prepare_field(req.p, req.m, req.n, ro);
    std::vector<ReportEnvelope> table;
    for (const auto& [poly, indices] : scan_family(req, pf)) {
      for (auto t : indices) {
        CheckRequest cr{req.p, req.m, req.n, poly, t, req.mode, req.output};
        table.push_back(evaluate(pf, cr, ro));
      }
    }
    if (req.output == "csv") {
      out << kCsvHeader << '\n';
      for (const auto& env : table) out << csv_row(env) << '\n';
    } else {
      out << nlohmann::json(table).dump(2) << '\n';
    }
    std::size_t bad = 0;
    for (const auto& env : table) bad += is_failure(env);
    if (bad) {
      err << "error: " << bad << " row(s) where criteria and oracle disagree\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

inline void write_suite(std::ostream& out, const SuiteResult& r) {
  out << r.suite << " (" << static_cast<long long>(r.seconds * 1000) << " ms)\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.ok() ? "pass" : "FAIL") << "  " << c.name << ": " << c.passed << "/" << c.total << '\n';
    for (const auto& f : c.failures) out << "        " << f << '\n';
  }
}

inline int cmd_verify(const std::string& suite, const RunOptions& ro, std::ostream& out, std::ostream& err) {
  try {
    SuiteOptions so;
    so.jobs = ro.jobs;
    const auto results = run_suites(suite, so);
    bool ok = true;
    for (const auto& r : results) {
      write_suite(out, r);
      ok = ok && r.ok();
    }
    out << "verify " << suite << ": " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

/// Oracle verdicts for S over F_{q^{nm}}, coefficients re-embedded from F_{q^n}.
inline int cmd_exceptional(std::uint32_t p, std::uint32_t m, std::uint32_t n, const std::string& poly,
                           std::uint32_t t, const std::vector<std::uint32_t>& m_list, const RunOptions& ro,
                           std::ostream& out, std::ostream& err) {
  try {
    const auto fp = FieldParams::checked(p, m, n);
    const auto sym = to_symbolic(fp, parse_poly_text(poly));
    std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
    for (const auto& term : sym.terms) terms.emplace_back(term.r, static_cast<std::uint64_t>(term.log));
    OracleOptions oo;
    oo.cap = ro.cap;
    oo.jobs = ro.jobs;
    for (const auto& dv : is_exceptional_desk(p, m, n, terms, t, m_list, oo)) {
      out << "m=" << dv.m << " F_{" << fp.q() << "^" << dv.degree << "} index " << t << ": "
          << (dv.report.scattered ? "scattered" : "not scattered");
      if (dv.report.witness)
        out << " (y=" << format_element(dv.report.witness->first) << " z=" << format_element(dv.report.witness->second)
            << ")";
      out << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace scatter::cli
