#ifndef SAL_REPORT_HPP
#define SAL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sal/algebra.hpp"
#include "sal/sts.hpp"

namespace sal {

struct AnalyzeOptions {
  std::vector<std::string> checks;  // empty = the full battery
  std::uint64_t closure_cap = 1000000;
  bool include_timings = false;
  int frame_samples = 5;
  std::uint64_t rng_seed = 0x5a1u;  // frame-vector sampling seed, fixed for determinism
};

struct AnalyzeOutcome {
  std::string json;
  int failed = 0;
  int undecided = 0;
};

// The per-(system, beta) verification battery. Every check is listed in the
// README traceability table; statuses are pass / fail / excluded / undecided.
AnalyzeOutcome analyze(const SteinerTripleSystem& s, const Rational& beta,
                       const AnalyzeOptions& opts = {});

// One row per beta with (beta_plus, beta_minus, omega, regime flags,
// simplicity); the transitional values for this n are always included.
std::string sweep_json(const SteinerTripleSystem& s, const std::vector<Rational>& betas,
                       const AnalyzeOptions& opts = {});

// Block-idempotent catalogs for all blocks (or one given block).
std::string catalog_json(const SteinerTripleSystem& s, const Rational& beta);

// Miyamoto group summary.
std::string group_json(const SteinerTripleSystem& s, std::uint64_t cap);

// Validation summary of a raw block set.
std::string validate_json(const BlockSet& b);

std::vector<Rational> transitional_betas(int n);

const std::vector<std::string>& all_check_names();

}  // namespace sal

#endif
