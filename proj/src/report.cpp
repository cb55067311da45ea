#include "poisson/report.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "poisson/error.hpp"

namespace poisson {
namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json estimate_json(const Estimate& e) {
  return {{"mean", e.mean},
          {"stderr", e.std_error},
          {"n", e.n},
          {"ci", {e.lower(), e.upper()}}};
}

}  // namespace

ReportRow make_row(std::string suite, const IdentityReport& r, std::string inputs) {
  ReportRow row;
  row.suite = std::move(suite);
  row.check = r.id;
  row.inputs = std::move(inputs);
  row.left = r.left;
  row.right = r.right;
  row.difference = r.difference;
  row.tolerance = r.tolerance;
  row.verdict = r.verdict;
  row.note = r.note;
  return row;
}

Estimate exact_value(double v, double ci_level) { return {v, 0.0, 0, ci_level}; }

ReportRow oracle_row(std::string suite, std::string check, std::string inputs,
                     const Estimate& estimate, double exact) {
  Estimate diff = estimate;
  diff.mean = estimate.mean - exact;
  IdentityReport r = make_equality_report(std::move(check), estimate,
                                          exact_value(exact, estimate.ci_level), diff);
  r.note = "right side is the exact Poisson value";
  return make_row(std::move(suite), r, std::move(inputs));
}

bool Report::passed() const {
  for (const auto& r : rows)
    if (r.verdict == Verdict::violated) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : rows) {
    checks.push_back({{"suite", r.suite},
                      {"check", r.check},
                      {"inputs", r.inputs},
                      {"left", estimate_json(r.left)},
                      {"right", estimate_json(r.right)},
                      {"difference", estimate_json(r.difference)},
                      {"tolerance", r.tolerance},
                      {"verdict", to_string(r.verdict)},
                      {"note", r.note}});
  }
  return {{"version", version},
          {"config_hash", hex64(config_hash)},
          {"seed", seed},
          {"ci_level", ci_level},
          {"passed", passed()},
          {"checks", checks}};
}

std::string Report::to_csv() const {
  std::ostringstream o;
  o << "suite,check,inputs,left,left_stderr,right,right_stderr,difference,difference_stderr,"
       "tolerance,verdict,note\n";
  for (const auto& r : rows) {
    o << csv_field(r.suite) << ',' << csv_field(r.check) << ',' << csv_field(r.inputs) << ','
      << number(r.left.mean) << ',' << number(r.left.std_error) << ',' << number(r.right.mean)
      << ',' << number(r.right.std_error) << ',' << number(r.difference.mean) << ','
      << number(r.difference.std_error) << ',' << number(r.tolerance) << ','
      << to_string(r.verdict) << ',' << csv_field(r.note) << '\n';
  }
  return o.str();
}

void Report::write(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  const auto base = std::filesystem::path(dir);
  std::ofstream json(base / "report.json");
  std::ofstream csv(base / "report.csv");
  if (!json || !csv) throw Error("cannot write reports into " + dir);
  json << to_json().dump(2) << '\n';
  csv << to_csv();
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[v & 0xF];
    v >>= 4;
  }
  return std::string(buf, 16);
}

}  // namespace poisson
