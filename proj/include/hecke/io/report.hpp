#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct CheckRecord {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  Verdict verdict = Verdict::Pass;
  /// The identity or criterion the check exercises.
  std::string anchor;
};

/// Ordered collection of check records with a pass/fail/inconclusive summary.
class Report {
 public:
  Report() = default;
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void merge(const Report& other);
  /// Sorts records by name, then by serialized inputs.
  void normalize();

  const std::string& command() const { return command_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t count(Verdict v) const;
  bool all_pass() const { return count(Verdict::Fail) == 0 && count(Verdict::Inconclusive) == 0; }
  /// 0 all pass, 1 any fail, 3 inconclusive without failures.
  int exit_code() const;

  nlohmann::json record_json(const CheckRecord& r) const;
  nlohmann::json to_json() const;
  /// One JSON object per line: the command echo, every record, then the summary.
  std::string to_jsonl() const;
  std::string human_summary() const;

 private:
  std::string command_;
  std::vector<CheckRecord> records_;
};

}  // namespace hecke
