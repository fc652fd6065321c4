#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tensorloc {

struct Violation {
  std::string law;
  std::string detail;
};

/// Tally of how many instances of a law were actually decided vs skipped
/// because a table entry lies outside a materialized fragment. For total
/// instances `skipped` is always zero.
struct LawCounts {
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
};

class ValidationReport {
 public:
  void fail(const std::string& law, const std::string& detail) {
    violations_.push_back({law, detail});
    counts_[law].checked++;
  }
  void pass(const std::string& law) { counts_[law].checked++; }
  void skip(const std::string& law) { counts_[law].skipped++; }

  bool ok() const { return violations_.empty(); }
  std::int64_t total_skipped() const {
    std::int64_t n = 0;
    for (const auto& [law, c] : counts_) n += c.skipped;
    return n;
  }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::map<std::string, LawCounts>& counts() const { return counts_; }

  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& v : other.violations_)
      violations_.push_back({prefix + v.law, v.detail});
    for (const auto& [law, c] : other.counts_) {
      counts_[prefix + law].checked += c.checked;
      counts_[prefix + law].skipped += c.skipped;
    }
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s = violations_.front().law + ": " + violations_.front().detail;
    if (violations_.size() > 1)
      s += " (+" + std::to_string(violations_.size() - 1) + " more)";
    return s;
  }

 private:
  std::vector<Violation> violations_;
  std::map<std::string, LawCounts> counts_;
};

}  // namespace tensorloc
