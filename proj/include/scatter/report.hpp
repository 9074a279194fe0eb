#pragma once

// Machine-readable check reports (JSON via nlohmann/json).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter/criteria.hpp"
#include "scatter/engine.hpp"
#include "scatter/field.hpp"

namespace scatter {

struct CheckRequest {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint32_t n = 0;
  std::string poly;
  std::uint32_t index = 0;
  std::string mode = "both";    // oracle | criteria | both
  std::string output = "json";  // json | csv | text

  friend bool operator==(const CheckRequest&, const CheckRequest&) = default;
};

/// Determines the arithmetic: same fingerprint, same tables.
struct FieldFingerprint {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::optional<std::uint64_t> modulus_encoding;  // absent when the field was not tabulated
  std::optional<std::uint64_t> gamma_encoding;

  static FieldFingerprint of(const FieldCtx& ctx) {
    return {ctx.p(), ctx.m(), ctx.n(), ctx.modulus_encoding(), ctx.gamma().enc};
  }
  friend bool operator==(const FieldFingerprint&, const FieldFingerprint&) = default;
};

struct ReportEnvelope {
  CheckRequest request;
  FieldFingerprint field;
  std::vector<CriterionVerdict> criteria;
  std::optional<bool> criteria_verdict;
  std::string oracle_status = "skipped";  // ok | skipped | FieldTooLarge
  std::optional<ScatterReport> oracle;
  std::optional<bool> agree;
  std::map<std::string, double> timing_ms;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

namespace detail {

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> opt_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const FFElement& a) {
  j = {{"enc", a.enc}, {"dlog", detail::opt_json(a.dlog())}};
}
inline void from_json(const nlohmann::json& j, FFElement& a) {
  a.enc = j.at("enc").get<std::uint32_t>();
  const auto d = detail::opt_from<std::uint32_t>(j, "dlog");
  a.log = d ? *d : FFElement::kNoLog;
}

inline void to_json(nlohmann::json& j, const ScatterReport& r) {
  j = {{"scattered", r.scattered},
       {"index", r.index},
       {"projective_points", r.projective_points},
       {"distinct_ratio_values", r.distinct_ratio_values},
       {"deciding_pair_count", detail::opt_json(r.deciding_pair_count)}};
  if (r.witness) j["witness"] = {{"y", r.witness->first}, {"z", r.witness->second}};
  else j["witness"] = nullptr;
}
inline void from_json(const nlohmann::json& j, ScatterReport& r) {
  r.scattered = j.at("scattered").get<bool>();
  r.index = j.at("index").get<std::uint32_t>();
  r.projective_points = j.at("projective_points").get<std::uint64_t>();
  r.distinct_ratio_values = j.at("distinct_ratio_values").get<std::uint64_t>();
  r.deciding_pair_count = detail::opt_from<std::uint64_t>(j, "deciding_pair_count");
  if (j.contains("witness") && !j.at("witness").is_null())
    r.witness = ElementPair{j.at("witness").at("y").get<FFElement>(), j.at("witness").at("z").get<FFElement>()};
  else
    r.witness.reset();
}

inline void to_json(nlohmann::json& j, const Hypothesis& h) {
  j = {{"name", h.name}, {"satisfied", h.satisfied}, {"detail", h.detail}};
}
inline void from_json(const nlohmann::json& j, Hypothesis& h) {
  h.name = j.at("name").get<std::string>();
  h.satisfied = j.at("satisfied").get<bool>();
  h.detail = j.at("detail").get<std::string>();
}

inline void to_json(nlohmann::json& j, const CriterionVerdict& v) {
  j = {{"source", v.source},
       {"applicable", v.applicable},
       {"verdict", detail::opt_json(v.verdict)},
       {"indices", v.indices},
       {"hypotheses", v.hypotheses}};
}
inline void from_json(const nlohmann::json& j, CriterionVerdict& v) {
  v.source = j.at("source").get<std::string>();
  v.applicable = j.at("applicable").get<bool>();
  v.verdict = detail::opt_from<bool>(j, "verdict");
  v.indices = j.at("indices").get<std::vector<std::uint32_t>>();
  v.hypotheses = j.at("hypotheses").get<std::vector<Hypothesis>>();
}

inline void to_json(nlohmann::json& j, const CheckRequest& r) {
  j = {{"p", r.p},         {"m", r.m},           {"n", r.n},          {"poly", r.poly},
       {"index", r.index}, {"mode", r.mode},     {"output", r.output}};
}
inline void from_json(const nlohmann::json& j, CheckRequest& r) {
  r.p = j.at("p").get<std::uint32_t>();
  r.m = j.at("m").get<std::uint32_t>();
  r.n = j.at("n").get<std::uint32_t>();
  r.poly = j.at("poly").get<std::string>();
  r.index = j.at("index").get<std::uint32_t>();
  r.mode = j.at("mode").get<std::string>();
  r.output = j.at("output").get<std::string>();
}

inline void to_json(nlohmann::json& j, const FieldFingerprint& f) {
  j = {{"p", f.p},
       {"m", f.m},
       {"n", f.n},
       {"modulus_encoding", detail::opt_json(f.modulus_encoding)},
       {"gamma_encoding", detail::opt_json(f.gamma_encoding)}};
}
inline void from_json(const nlohmann::json& j, FieldFingerprint& f) {
  f.p = j.at("p").get<std::uint32_t>();
  f.m = j.at("m").get<std::uint32_t>();
  f.n = j.at("n").get<std::uint32_t>();
  f.modulus_encoding = detail::opt_from<std::uint64_t>(j, "modulus_encoding");
  f.gamma_encoding = detail::opt_from<std::uint64_t>(j, "gamma_encoding");
}

inline void to_json(nlohmann::json& j, const ReportEnvelope& e) {
  j = {{"request", e.request},
       {"field", e.field},
       {"criteria", e.criteria},
       {"criteria_verdict", detail::opt_json(e.criteria_verdict)},
       {"oracle_status", e.oracle_status},
       {"oracle", detail::opt_json(e.oracle)},
       {"agree", detail::opt_json(e.agree)},
       {"timing_ms", e.timing_ms}};
}
inline void from_json(const nlohmann::json& j, ReportEnvelope& e) {
  e.request = j.at("request").get<CheckRequest>();
  e.field = j.at("field").get<FieldFingerprint>();
  e.criteria = j.at("criteria").get<std::vector<CriterionVerdict>>();
  e.criteria_verdict = detail::opt_from<bool>(j, "criteria_verdict");
  e.oracle_status = j.at("oracle_status").get<std::string>();
  e.oracle = detail::opt_from<ScatterReport>(j, "oracle");
  e.agree = detail::opt_from<bool>(j, "agree");
  e.timing_ms = j.value("timing_ms", std::map<std::string, double>{});
}

/// The envelope without wall-clock fields; stable across runs.
inline nlohmann::json report_body(const ReportEnvelope& e) {
  nlohmann::json j = e;
  j.erase("timing_ms");
  return j;
}

}  // namespace scatter
