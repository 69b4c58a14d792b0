#ifndef KHF_ERRORS_HPP
#define KHF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace khf {

// Base of all library errors. `code` is a stable machine-readable tag; the
// CLI maps it straight into error JSON. Verdicts like "fails_hypothesis" or
// "inapplicable" are data, never exceptions.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error("validation_error", m) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("domain_error", m) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& m) : Error("unknown_name", m) {}
};

// Tail policy could not be met within the available/permitted coefficient
// range (non-extendable series, or the term ceiling was hit).
struct TruncationInsufficient : Error {
  explicit TruncationInsufficient(const std::string& m)
      : Error("truncation_insufficient", m) {}
};

// The probed mean never exceeded the requested index within budget; carries
// the largest mean value actually observed.
struct MeanBounded : Error {
  MeanBounded(const std::string& m, double ceiling)
      : Error("mean_bounded", m), probed_ceiling(ceiling) {}
  double probed_ceiling;
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& m) : Error("no_convergence", m) {}
};

struct DegenerateSecondDerivative : Error {
  explicit DegenerateSecondDerivative(const std::string& m)
      : Error("degenerate_second_derivative", m) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error("budget_exceeded", m) {}
};

struct CutOutsideWindow : Error {
  explicit CutOutsideWindow(const std::string& m)
      : Error("cut_outside_window", m) {}
};

}  // namespace khf

#endif
