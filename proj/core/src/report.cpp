#include "posfact/report.hpp"

namespace posfact {

Report::Report(std::string name) {
  entries_.emplace_back("schema_version", std::to_string(kReportSchemaVersion));
  entries_.emplace_back("report", std::move(name));
}

void Report::set(const std::string& key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

const std::string* Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Report::render() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

Report invariants_report(const FibrationInvariants& inv) {
  Report r("invariants");
  r.set("genus", inv.genus);
  r.set("n_cycles", static_cast<long long>(inv.n_cycles));
  r.set("euler_closed", static_cast<long long>(inv.euler_closed));
  r.set("euler_filling", inv.euler_filling ? std::to_string(*inv.euler_filling) : "none");
  r.set("b1", inv.b1);
  std::string torsion = "[";
  for (std::size_t k = 0; k < inv.torsion.size(); ++k) {
    if (k) torsion += ", ";
    torsion += inv.torsion[k].str();
  }
  r.set("torsion", torsion + "]");
  r.set("endo_sigma_num", numerator(inv.endo_sigma).str());
  r.set("endo_sigma_den", denominator(inv.endo_sigma).str());
  r.set("hyperelliptic_verdict", to_string(inv.hyperelliptic_verdict));
  r.set("zero_class_letters", inv.zero_class_letters.size());
  return r;
}

}  // namespace posfact
