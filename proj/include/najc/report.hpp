#pragma once

#include "najc/albanese.hpp"
#include "najc/cyclemap.hpp"
#include "najc/hodge.hpp"
#include "najc/io.hpp"
#include "najc/kernels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace najc {

struct AnalyzeOptions {
  bool cycle = false;
  std::optional<int> digits;
};

/// Albanese fragments are only computed up to this weight (facet enumeration
/// is exponential in w).
inline constexpr std::size_t max_albanese_weight = 12;

Json hodge_fragment(const AnalysisInput& input, const HodgeData& hodge);
Json operator_fragment(const Decomposition& dec);
Json cycle_fragment(const CycleDivisor& divisor, std::optional<int> digits);
Json albanese_fragment(std::size_t weight);

/// Full report. Propagates NotRegular / NotPolarizing; never returns a partial report.
Json build_report(const AnalysisInput& input, const AnalyzeOptions& options);

struct SweepSample {
  Vector coeffs;
  bool regular = false;
  bool polarizing = false;
  std::optional<std::size_t> weight;
  std::vector<std::size_t> ranks;
};

struct SweepResult {
  std::uint64_t seed = 0;
  std::int64_t box = 10;
  std::vector<SweepSample> samples;
  std::optional<std::size_t> generic_weight;  // most frequent weight, smallest on ties
  double polarizing_fraction = 0.0;
};

/// Evaluates `samples` seeded alpha draws from the integer box [-box, box]^delta.
SweepResult sweep(const AnalysisInput& input, std::size_t samples, std::uint64_t seed,
                  std::int64_t box = 10, Backend backend = Backend::automatic);

Json to_json(const SweepResult& result);

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Adds the first basis vector of H^0 to the first basis vector of H^1. The
/// span of H~_{-w} is unchanged but the grading is no longer orthogonal. With
/// dim H^0 <= 2 the relations are vacuous (H^0 contains 1), so the fault then
/// shows up only as leakage.
Decomposition inject_fault(Decomposition dec);

/// Every end-to-end invariant check, in a fixed order.
std::vector<CheckResult> run_verify(const AnalysisInput& input, bool inject = false);

}  // namespace najc
