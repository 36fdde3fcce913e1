#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace orbitcat {

enum class ViolationKind { Structural, Axiom };

/// One violated axiom (or malformed component) together with the elements
/// that witness it.
struct Violation {
  ViolationKind kind = ViolationKind::Axiom;
  std::string axiom;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Output of the validators. Empty means valid.
using ValidationReport = std::vector<Violation>;

inline bool has_structural(const ValidationReport& report) {
  for (const auto& v : report)
    if (v.kind == ViolationKind::Structural) return true;
  return false;
}

/// One record per check: identifier, status, a one-line summary and the
/// witnesses of any failure.
struct CheckRecord {
  std::string id;
  bool passed = true;
  std::string summary;
  std::vector<std::string> witnesses;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

class Report {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }

  void append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  bool all_passed() const {
    for (const auto& r : records_)
      if (!r.passed) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : records_)
      if (!r.passed) ++n;
    return n;
  }

  const std::vector<CheckRecord>& records() const { return records_; }

  const CheckRecord* find(const std::string& id) const {
    for (const auto& r : records_)
      if (r.id == id) return &r;
    return nullptr;
  }

 private:
  std::vector<CheckRecord> records_;
};

/// Folds a validator result into a check record.
inline CheckRecord to_check(std::string id, const ValidationReport& report,
                            const std::string& pass_summary = "all axioms hold") {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.passed = report.empty();
  if (rec.passed) {
    rec.summary = pass_summary;
  } else {
    rec.summary = std::to_string(report.size()) + " violation(s)";
    for (const auto& v : report) {
      std::string prefix = v.kind == ViolationKind::Structural ? "structural " : "";
      rec.witnesses.push_back(prefix + v.axiom + ": " + v.witness);
    }
  }
  return rec;
}

}  // namespace orbitcat
