#include "hecke/io/report.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

void Report::merge(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

void Report::normalize() {
  std::stable_sort(records_.begin(), records_.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.inputs.dump() < b.inputs.dump();
  });
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [v](const CheckRecord& r) { return r.verdict == v; }));
}

int Report::exit_code() const {
  if (count(Verdict::Fail) > 0) return 1;
  if (count(Verdict::Inconclusive) > 0) return 3;
  return 0;
}

nlohmann::json Report::record_json(const CheckRecord& r) const {
  return nlohmann::json{{"name", r.name},
                        {"inputs", r.inputs},
                        {"outputs", r.outputs},
                        {"verdict", to_string(r.verdict)},
                        {"anchor", r.anchor}};
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["command"] = command_;
  out["records"] = nlohmann::json::array();
  for (const auto& r : records_) out["records"].push_back(record_json(r));
  out["summary"] = {{"pass", count(Verdict::Pass)},
                    {"fail", count(Verdict::Fail)},
                    {"inconclusive", count(Verdict::Inconclusive)}};
  return out;
}

std::string Report::to_jsonl() const {
  std::ostringstream os;
  os << nlohmann::json{{"command", command_}}.dump() << '\n';
  for (const auto& r : records_) os << record_json(r).dump() << '\n';
  os << nlohmann::json{{"summary",
                        {{"pass", count(Verdict::Pass)},
                         {"fail", count(Verdict::Fail)},
                         {"inconclusive", count(Verdict::Inconclusive)}}}}
            .dump()
     << '\n';
  return os.str();
}

std::string Report::human_summary() const {
  std::ostringstream os;
  os << command_ << ": " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail) << " fail, "
     << count(Verdict::Inconclusive) << " inconclusive\n";
  for (const auto& r : records_)
    if (r.verdict != Verdict::Pass) os << "  [" << to_string(r.verdict) << "] " << r.name << " " << r.inputs.dump() << '\n';
  return os.str();
}

}  // namespace hecke
