#pragma once

// From a target weighted projection to an ASM, and the exhaustive check that
// the achievable projections are exactly the positive vectors majorized by
// (n,...,1).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asmproj/core.hpp"
#include "asmproj/monotonize.hpp"

namespace asmproj {

// Every intermediate object of one construction.
struct SynthesisTrace {
  IntMatrix zero_one;
  RowIncreasingTriangle row_increasing;
  std::vector<SwitchRecord> switches;
  MonotoneTriangle monotone;
};

struct SynthesisResult {
  Asm matrix;
  std::optional<SynthesisTrace> trace;
};

// Gale-Ryser fill -> row-increasing triangle -> trapezoid switching ->
// monotone triangle -> ASM, with the seam between each stage checked.
// Throws NonPositiveEntry or NotMajorized; a failed seam is Internal.
SynthesisResult synthesize(const IntVector& v, bool trace = false);
inline Asm asm_with_projection(const IntVector& v) { return synthesize(v).matrix; }

std::string format_synthesis_trace(const SynthesisTrace& trace);

inline constexpr std::size_t kDefaultTheoremLimit = 5;

struct Theorem4Report {
  std::size_t n = 0;
  std::size_t asm_count = 0;
  std::size_t projection_count = 0;  // distinct v(A) over all ASMs
  std::size_t majorized_count = 0;   // positive v majorized by (n,...,1)
  bool sets_equal = false;
  std::size_t constructions_checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return sets_equal && failures.empty(); }
};

// Throws LimitExceeded above `limit`. `jobs` splits the construction checks.
Theorem4Report verify_theorem4(std::size_t n, std::size_t limit = kDefaultTheoremLimit,
                               unsigned jobs = 1);

}  // namespace asmproj
