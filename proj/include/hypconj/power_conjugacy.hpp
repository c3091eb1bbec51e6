#pragma once

#include "hypconj/context.hpp"
#include "hypconj/words.hpp"

namespace hypconj {

/// Behaviour of the conjugates g^(y^n) for a straight word y: either some
/// power of y (of exponent at most V) centralises g and the conjugates stay
/// within 2 delta of |g|, or their lengths escape linearly.
struct LargePowerClass {
  bool bounded_central = false;
  long long conjugate_length = 0;  // |g^(y^N)| for the probe power N
};

/// The exponents n with u^(y^n) == v in the group: a full residue class, a
/// single integer, or nothing.
struct PowerConjResult {
  enum class Tag { Periodic, Unique, None } tag;
  long long r = 0;  // Periodic: 0 <= r < t <= V; Unique: the sole exponent
  long long t = 0;

  static PowerConjResult periodic(long long r, long long t) {
    return {Tag::Periodic, r, t};
  }
  static PowerConjResult unique(long long r) { return {Tag::Unique, r, 0}; }
  static PowerConjResult none() { return {Tag::None, 0, 0}; }
  bool operator==(const PowerConjResult&) const = default;
};

struct PowerConjStats {
  long long escaping_probes = 0;  // at most 6 delta + 1 per call
};

/// Probes g^(y^N) at N = V + 1 + floor((|g| + delta) / |y|); the conjugate
/// stays short exactly when some power of y centralises g.
LargePowerClass classify_large_power(const GroupContext& ctx, const Word& g,
                                     const Word& y);

/// Finds every exponent n with u^(y^n) == v for a straight nonempty y.
/// Mixed growth classes rule conjugation out; the bounded case scans the
/// residues below the least centralising exponent; the escaping case scans
/// a window of at most 6 delta + 1 candidate exponents.
PowerConjResult test_conj_vs_sls(const GroupContext& ctx, const Word& u,
                                 const Word& v, const Word& y,
                                 PowerConjStats* stats = nullptr);

}  // namespace hypconj
