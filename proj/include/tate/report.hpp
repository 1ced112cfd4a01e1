#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tate {

enum class CheckStatus { Pass, Fail, Inconclusive };

/// One machine-parsable record: CHECK <name> <PASS|FAIL|INCONCLUSIVE> k=v...
struct ReportLine {
  std::string name;
  CheckStatus status = CheckStatus::Inconclusive;
  std::vector<std::pair<std::string, std::string>> kv;  // emission order

  std::string str() const;
};

struct Report {
  std::vector<ReportLine> lines;

  ReportLine& add(std::string name, CheckStatus status);
  ReportLine& add(std::string name, bool pass);
  void append(const Report& other);

  bool all_pass() const;
  bool any_fail() const;
  /// 0 all pass, 1 any fail, 2 any inconclusive (and none fail).
  int exit_code() const;
  /// All CHECK lines plus the summary trailer.
  std::string str() const;
};

}  // namespace tate
