#include "asmproj/synthesis.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "asmproj/bijection.hpp"
#include "asmproj/enumeration.hpp"
#include "asmproj/galeryser.hpp"
#include "asmproj/io.hpp"

namespace asmproj {

namespace {

[[noreturn]] void seam_failure(const std::string& seam, const IntVector& v, const std::string& detail) {
  throw Error(ErrorKind::Internal, seam + " failed for " + format_vector(v) + ": " + detail);
}

}  // namespace

SynthesisResult synthesize(const IntVector& v, bool trace) {
  for (const auto& x : v) {
    if (x <= 0) throw Error(ErrorKind::NonPositiveEntry, format_vector(v));
  }
  if (!majorized_by(v, staircase(v.size()))) {
    throw Error(ErrorKind::NotMajorized,
                format_vector(v) + " is not majorized by " + format_vector(staircase(v.size())));
  }

  const IntMatrix zero_one = construct_01_matrix(v);
  if (column_sums(zero_one) != v) seam_failure("0-1 margins", v, "column sums differ");

  const RowIncreasingTriangle triangle = [&] {
    try {
      return triangle_from_01(zero_one);
    } catch (const Error& e) {
      seam_failure("row-increasing triangle", v, e.what());
    }
  }();
  if (entry_multiset(triangle) != v) seam_failure("row-increasing triangle", v, "entry counts differ");

  MonotonizeResult monotone = monotonize(triangle, trace);
  if (entry_multiset(monotone.triangle) != v) seam_failure("monotone triangle", v, "entry counts differ");

  Asm result = asm_from_monotone(monotone.triangle);
  if (weighted_projection(result) != v) seam_failure("ASM", v, "projection differs");

  std::optional<SynthesisTrace> recorded;
  if (trace) {
    recorded = SynthesisTrace{zero_one, triangle, std::move(monotone.trace), monotone.triangle};
  }
  return {std::move(result), std::move(recorded)};
}

std::string format_synthesis_trace(const SynthesisTrace& trace) {
  std::ostringstream out;
  out << "# 0-1 matrix\n" << format_matrix(trace.zero_one);
  out << "# row-increasing triangle and switches\n"
      << format_trace(trace.row_increasing, trace.switches);
  out << "# monotone triangle\n" << format_triangle(trace.monotone);
  return out.str();
}

Theorem4Report verify_theorem4(std::size_t n, std::size_t limit, unsigned jobs) {
  if (n > limit) {
    throw Error(ErrorKind::LimitExceeded,
                "order " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
  }
  Theorem4Report report;
  report.n = n;

  std::set<IntVector> projections;
  const auto asms = enumerate_asms(n, std::max(n, kDefaultAsmLimit));
  report.asm_count = asms.size();
  for (const auto& a : asms) projections.insert(weighted_projection(a));
  report.projection_count = projections.size();

  const auto vectors = enumerate_majorized_vectors(n, std::max(n, kDefaultVectorLimit));
  const std::set<IntVector> majorized(vectors.begin(), vectors.end());
  report.majorized_count = majorized.size();
  report.sets_equal = projections == majorized;

  std::mutex guard;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t index;
      {
        std::lock_guard lock(guard);
        if (next == vectors.size()) return;
        index = next++;
      }
      const IntVector& v = vectors[index];
      std::string failure;
      try {
        const Asm a = asm_with_projection(v);
        if (weighted_projection(a) != v) failure = "projection mismatch for " + format_vector(v);
      } catch (const Error& e) {
        failure = format_vector(v) + ": " + e.what();
      }
      std::lock_guard lock(guard);
      ++report.constructions_checked;
      if (!failure.empty()) report.failures.push_back(failure);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned k = 1; k < std::max(1u, jobs); ++k) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

}  // namespace asmproj
