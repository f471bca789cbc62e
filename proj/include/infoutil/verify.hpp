#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "infoutil/analysis.hpp"
#include "infoutil/experiments.hpp"

namespace infoutil {

enum class Comparison {
  /// |lhs - rhs| <= tolerance; equal infinities agree.
  kAbsolute,
  /// |lhs - rhs| <= tolerance * |rhs|.
  kRelative,
  /// lhs >= rhs - tolerance.
  kAtLeast,
};

/// The worst observed instance of one named identity across all cases.
struct IdentityCheck {
  std::string name;
  Comparison comparison = Comparison::kAbsolute;
  double tolerance = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;

  std::string worst_context;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  /// Violation measure of the worst case: the absolute (or relative) gap, or
  /// the shortfall for kAtLeast.
  double worst_gap = 0.0;

  bool passed() const { return failures == 0; }
};

/// Collects identity evaluations by name, keeping the worst case of each.
class CheckLedger {
 public:
  void record(const std::string& name, Comparison comparison, double tolerance, double lhs, double rhs,
              const std::string& context);

  std::vector<IdentityCheck> checks() const;
  bool all_passed() const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, IdentityCheck> checks_;
};

/// Gap between two extended reals under `comparison` (0 when satisfied
/// exactly, +inf when one side is infinite and the other is not).
double comparison_gap(Comparison comparison, double lhs, double rhs);

/// Deliberate defects used to test that the verifier detects them.
enum class VerifyFault { kNone, kFlipKlObsSign };

struct VerifyOptions {
  std::uint64_t seed = 1;
  double bias = 0.9;
  double alpha = 4.0;
  std::size_t random_couplings = 24;
  VerifyFault fault = VerifyFault::kNone;
};

/// Records the expected-reward and expected-utility identities for one
/// coupling and horizon.
void check_coupling(CheckLedger& ledger, const GenerativeCoupling& c, std::size_t horizon, const std::string& context,
                    VerifyFault fault = VerifyFault::kNone);

/// Runs every identity over the built-in couplings, randomized couplings and
/// processes, and randomized reward sets.
CheckLedger run_verification(const VerifyOptions& options);

void print_checks(std::ostream& out, const CheckLedger& ledger);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               VerifyFault fault = VerifyFault::kNone);

}  // namespace infoutil
