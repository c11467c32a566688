#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posfact/invariants.hpp"

namespace posfact {

inline constexpr int kReportSchemaVersion = 1;

/// Ordered `key = value` lines. Every report starts with schema_version and
/// the report name.
class Report {
 public:
  explicit Report(std::string name);

  void set(const std::string& key, std::string value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
  void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
  void set(const std::string& key, int value) { set(key, std::to_string(value)); }
  void set(const std::string& key, std::size_t value) { set(key, std::to_string(value)); }

  const std::string* get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string render() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Keys: genus, n_cycles, euler_closed, euler_filling, b1, torsion,
/// endo_sigma_num, endo_sigma_den, hyperelliptic_verdict, zero_class_letters.
Report invariants_report(const FibrationInvariants& inv);

}  // namespace posfact
