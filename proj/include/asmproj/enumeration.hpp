#pragma once

// Exhaustive generators used as oracles at small order. Every generator
// returns its objects in ascending lexicographic order and throws
// LimitExceeded above its limit.

#include <cstddef>
#include <functional>
#include <vector>

#include "asmproj/core.hpp"

namespace asmproj {

inline constexpr std::size_t kDefaultTriangleLimit = 6;
inline constexpr std::size_t kDefaultAsmLimit = 6;
inline constexpr std::size_t kDefaultRowIncreasingLimit = 5;
inline constexpr std::size_t kDefaultVectorLimit = 6;

// Bottom row fixed to (1..n), each higher row chosen between its two lower
// neighbours.
std::vector<MonotoneTriangle> enumerate_monotone(std::size_t n,
                                                 std::size_t limit = kDefaultTriangleLimit);

// Row-by-row backtracking over matrix entries, pruning on running row and
// column prefix sums. Does not go through triangles.
std::vector<Asm> enumerate_asms(std::size_t n, std::size_t limit = kDefaultAsmLimit);

// Streams ASMs whose first row has its +1 in column first_one (0-based);
// the ordered union over first_one is enumerate_asms(n).
void for_each_asm_with_first_one(std::size_t n, std::size_t first_one,
                                 const std::function<void(const IntMatrix&)>& visit);

// Counts n x n ASMs, splitting on the first row across up to `jobs` threads.
std::size_t count_asms(std::size_t n, unsigned jobs = 1, std::size_t limit = kDefaultAsmLimit);

// All triangles whose row i is an i-subset of 1..n.
std::vector<RowIncreasingTriangle> enumerate_row_increasing(
    std::size_t n, std::size_t limit = kDefaultRowIncreasingLimit);

// Positive integer vectors majorized by (n,...,1): partitions of n(n+1)/2
// into n positive parts filtered by majorization, then their distinct
// permutations.
std::vector<IntVector> enumerate_majorized_vectors(std::size_t n,
                                                   std::size_t limit = kDefaultVectorLimit);

}  // namespace asmproj
