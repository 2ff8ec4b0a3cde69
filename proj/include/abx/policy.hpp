#pragma once

#include <stdexcept>
#include <string>

namespace abx {

/// Truncation/tolerance contract applied to every series evaluation.
/// max_terms is a per-index budget: a double series may spend up to
/// max_terms along each of its indices.
struct SeriesPolicy {
  int max_terms = 100000;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  void validate() const;
};

enum class EvalStatus { ok, non_convergence, domain_error, overflow };

/// Result of a series evaluation. est_error is an upper estimate of the
/// truncation remainder under the policy in force; terms_used counts the
/// terms actually summed.
struct SpecialValue {
  double value = 0.0;
  double est_error = 0.0;
  long terms_used = 0;
  EvalStatus status = EvalStatus::ok;
  bool ok() const { return status == EvalStatus::ok; }
};

/// Thrown when a closed-form evaluation cannot meet its policy; carries the
/// partial result so callers can report it.
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& what, SpecialValue partial)
      : std::runtime_error(what), partial_(partial) {}
  const SpecialValue& partial() const { return partial_; }

 private:
  SpecialValue partial_;
};

/// Unwrap a SpecialValue or throw EvalError tagged with `what`.
double require(const SpecialValue& v, const char* what);

}  // namespace abx
