#ifndef LATKIT_REPORT_HPP
#define LATKIT_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

namespace latkit {

/// One checked law: name, verdict, and a concrete witness when it fails.
struct LawResult {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when pass
};

struct Report {
  std::vector<LawResult> laws;

  void add_pass(const std::string& name) { laws.push_back({name, true, ""}); }
  void add_fail(const std::string& name, const std::string& witness) {
    laws.push_back({name, false, witness});
  }

  bool all_pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }

  /// Line-oriented rendering: `LAW <name> PASS|FAIL witness=...`
  std::string to_lines() const {
    std::ostringstream os;
    for (const auto& l : laws) {
      os << "LAW " << l.name << (l.pass ? " PASS" : " FAIL");
      if (!l.pass) os << " witness=" << l.witness;
      os << "\n";
    }
    return os.str();
  }
};

}  // namespace latkit

#endif  // LATKIT_REPORT_HPP
