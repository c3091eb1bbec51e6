#pragma once

#include <optional>
#include <vector>

#include "hypconj/context.hpp"
#include "hypconj/words.hpp"

namespace hypconj::oracle {

/// All distinct normal forms of length <= radius, shortlex order. Built by
/// reducing every raw word up to the radius, independently of the library's
/// level-by-level enumeration.
std::vector<Word> ball(const GroupContext& ctx, long long radius);

/// Shortlex-least g with |g| <= radius and A^g == B, by exhaustive scan.
std::optional<Word> brute_conjugator(const GroupContext& ctx,
                                     const std::vector<Word>& a_list,
                                     const std::vector<Word>& b_list,
                                     long long radius);

/// Every normal form of length <= radius centralising the list.
std::vector<Word> brute_centraliser(const GroupContext& ctx,
                                    const std::vector<Word>& a_list,
                                    long long radius);

/// Free-group ground truth: conjugate exactly when the cyclic reductions
/// are rotations of each other. Rejects non-free backends.
bool free_conjugacy_oracle(const GroupContext& ctx, const Word& u,
                           const Word& v);

/// Largest distance between corresponding points over all shortlex-geodesic
/// triangles with corners in the ball. Can refute a configured delta at
/// small radius; never certifies it globally.
long long estimate_delta(const GroupContext& ctx, long long radius);

}  // namespace hypconj::oracle
