#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "motocell/error.hpp"

namespace motocell {

// A cellularity level: either stable, or "cellular after k simplicial
// suspensions" (k = 0 meaning honestly unstable).
struct CertLevel {
  enum class Kind { stable, suspended };
  Kind kind = Kind::suspended;
  int suspensions = 0;

  static CertLevel stable() { return {Kind::stable, 0}; }
  static CertLevel suspended(int k) { return {Kind::suspended, k}; }

  bool is_stable() const { return kind == Kind::stable; }

  friend bool operator==(const CertLevel&, const CertLevel&) = default;

  std::string to_string() const {
    if (kind == Kind::stable) return "stable";
    return "suspended(" + std::to_string(suspensions) + ")";
  }
};

// The gluing rules a derivation step may invoke.
enum class Rule { bruhat, arrangement, purity, completion, suspension, atacc };

constexpr std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::bruhat: return "bruhat";
    case Rule::arrangement: return "arrangement";
    case Rule::purity: return "purity";
    case Rule::completion: return "completion";
    case Rule::suspension: return "suspension";
    case Rule::atacc: return "atacc";
  }
  return "unknown";
}

struct TraceStep {
  Rule rule;
  std::string detail;
  CertLevel level;  // level claimed after this step
};

// A cellularity claim together with the derivation that produced it.
class CellCertificate {
 public:
  CellCertificate(CertLevel level, std::vector<TraceStep> trace)
      : level_(level), trace_(std::move(trace)) {
    require(!trace_.empty(), Errc::invalid_input,
            "certificate trace must be nonempty");
    require(validate(), Errc::internal_check, "certificate trace inconsistent");
  }

  const CertLevel& level() const { return level_; }
  const std::vector<TraceStep>& trace() const { return trace_; }

  // Structural checks: a suspension step raises the suspended level by
  // exactly one, and the certificate claims the final step's level.
  bool validate() const {
    if (trace_.empty()) return false;
    for (std::size_t i = 0; i < trace_.size(); ++i) {
      const TraceStep& step = trace_[i];
      if (step.rule == Rule::suspension) {
        if (i == 0) return false;
        const CertLevel& prev = trace_[i - 1].level;
        if (prev.is_stable() || step.level.is_stable()) return false;
        if (step.level.suspensions != prev.suspensions + 1) return false;
      }
      if (!step.level.is_stable() && step.level.suspensions < 0) return false;
    }
    return trace_.back().level == level_;
  }

 private:
  CertLevel level_;
  std::vector<TraceStep> trace_;
};

}  // namespace motocell
