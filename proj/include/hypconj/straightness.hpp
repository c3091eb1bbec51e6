#pragma once

#include "hypconj/context.hpp"
#include "hypconj/words.hpp"

namespace hypconj {

/// Order classification of a group element. Infinite results carry the
/// doubling-schedule power whose conjugate-of-power length certified the
/// classification (the 2L growth criterion).
struct OrderClass {
  enum class Tag { Finite, Infinite } tag;
  long long value;  // Finite: the order; Infinite: the witness power

  static OrderClass finite(long long order) {
    return {Tag::Finite, order};
  }
  static OrderClass infinite(long long witness_power) {
    return {Tag::Infinite, witness_power};
  }
  bool is_infinite() const { return tag == Tag::Infinite; }
  bool operator==(const OrderClass&) const = default;
};

/// A power and conjugator carrying u onto a shortlex straight word:
/// straight == reduce(conjugator^-1 u^power conjugator), with
/// 1 <= power <= V^4 and |conjugator| <= 4 delta.
struct StraighteningResult {
  long long power = 1;
  Word conjugator;
  Word straight;
};

struct LongPowerResult {
  long long power = 0;  // common doubling-schedule entry
  Word u_long, v_long;  // reduce((u_C)^power), reduce((v_C)^power)
};

/// True when reduce(u^k) == u^k for every k up to the configured check
/// power. Exact for the free and free-product backends with power >= 2.
/// u must be nonempty and shortlex reduced.
bool is_shortlex_straight(const GroupContext& ctx, const Word& u);

/// Growth certificate: |reduce((reduce((w_C)^n))_C)| > 2L. Sound evidence
/// of infinite order for shortlex-reduced w at any n, and monotone along
/// the doubling schedule from L upwards.
bool long_cyclic_criterion(const GroupContext& ctx, const Word& w,
                           long long n);

/// Exact order classification: a fast growth certificate for the infinite
/// case, then a torsion scan bounded by the (4 delta + 2)-ball size, which
/// is decisive because finite subgroups conjugate into that ball.
OrderClass test_inf_order(const GroupContext& ctx, const Word& w);

/// Smallest power (ties by shortlex-least conjugator) whose conjugate is
/// shortlex straight. u must be shortlex reduced with |u| > L and have all
/// its powers labelling the local quasigeodesics the growth criterion
/// guarantees.
StraighteningResult straighten_power(const GroupContext& ctx, const Word& u);

/// Least doubling-schedule entry n (starting at L) at which both u and v
/// pass the growth criterion; returns the corresponding long powers.
/// Inputs must be shortlex reduced and of infinite order.
LongPowerResult common_long_power(const GroupContext& ctx, const Word& u,
                                  const Word& v);

}  // namespace hypconj
