#pragma once

#include <cstdint>
#include <vector>

#include "hypconj/context.hpp"
#include "hypconj/words.hpp"

namespace hypconj {

struct BenchPoint {
  long long mu = 0;
  int m = 0;
  int reps = 0;
  double mean_seconds = 0.0;
};

/// A random normal form of exactly the requested length (padded random
/// letters, reduced, truncated; prefixes of normal forms are normal forms).
Word random_normal_form(const GroupContext& ctx, std::uint64_t& state,
                        std::size_t length);

/// Times conjugate round-trip instances of `m` words of length `mu` per
/// entry of `mus`: B is a short random conjugate of A and both lists go
/// through the full solver. Deterministic for a fixed seed.
std::vector<BenchPoint> run_conjugacy_bench(const GroupContext& ctx, int m,
                                            const std::vector<long long>& mus,
                                            int reps, std::uint64_t seed);

}  // namespace hypconj
