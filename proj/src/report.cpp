#include "tate/report.hpp"

namespace tate {

namespace {
const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}
}  // namespace

std::string ReportLine::str() const {
  std::string s = "CHECK " + name + " " + status_word(status);
  for (const auto& [k, v] : kv) s += " " + k + "=" + v;
  return s;
}

ReportLine& Report::add(std::string name, CheckStatus status) {
  lines.push_back({std::move(name), status, {}});
  return lines.back();
}

ReportLine& Report::add(std::string name, bool pass) {
  return add(std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail);
}

void Report::append(const Report& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

bool Report::all_pass() const {
  for (const auto& l : lines)
    if (l.status != CheckStatus::Pass) return false;
  return true;
}

bool Report::any_fail() const {
  for (const auto& l : lines)
    if (l.status == CheckStatus::Fail) return true;
  return false;
}

int Report::exit_code() const {
  if (any_fail()) return 1;
  return all_pass() ? 0 : 2;
}

std::string Report::str() const {
  std::string s;
  long pass = 0, fail = 0, inc = 0;
  for (const auto& l : lines) {
    s += l.str() + "\n";
    switch (l.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Inconclusive: ++inc; break;
    }
  }
  s += "SUMMARY pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
       " inconclusive=" + std::to_string(inc) + "\n";
  return s;
}

}  // namespace tate
