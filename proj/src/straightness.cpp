#include "hypconj/straightness.hpp"

#include <algorithm>

#include "hypconj/intmath.hpp"

namespace hypconj {

namespace {

constexpr long long kWordBudget = 1LL << 27;

void require_reduced(const GroupContext& ctx, const Word& w,
                     const char* who) {
  if (ctx.reduce(w) != w)
    throw ArgumentError(std::string(who) + ": input must be shortlex reduced");
}

struct CyclicPowerProbe {
  Word power;        // reduce((w_C)^n)
  bool long_enough;  // |reduce(power_C)| > 2L
};

CyclicPowerProbe probe_cyclic_power(const GroupContext& ctx, const Word& w,
                                    long long n) {
  Word cyclic = w.half_cyclic();
  if (n > 0 && static_cast<long long>(cyclic.size()) > kWordBudget / n)
    throw ResourceError("long power exceeds the word length budget");
  Word power = ctx.reduce(cyclic.repeated(n));
  bool ok = ctx.geodesic_length(power.half_cyclic()) > 2 * ctx.constants().L;
  return {std::move(power), ok};
}

bool fits_word_budget(const Word& w, long long n) {
  return w.empty() ||
         static_cast<long long>(w.size()) <= kWordBudget / std::max(1LL, n);
}

}  // namespace

bool is_shortlex_straight(const GroupContext& ctx, const Word& u) {
  if (u.empty())
    throw ArgumentError("is_shortlex_straight: empty input");
  require_reduced(ctx, u, "is_shortlex_straight");
  int check_power = std::max(2, ctx.caps().straight_check_power);
  Word power = u;
  for (int k = 2; k <= check_power; ++k) {
    power += u;
    if (ctx.reduce(power) != power) return false;
  }
  return true;
}

bool long_cyclic_criterion(const GroupContext& ctx, const Word& w,
                           long long n) {
  return probe_cyclic_power(ctx, w, n).long_enough;
}

OrderClass test_inf_order(const GroupContext& ctx, const Word& w) {
  const Word reduced = ctx.reduce(w);
  if (reduced.empty()) return OrderClass::finite(1);
  const Constants& c = ctx.constants();

  // Small orders of short words are caught by a few multiplications,
  // without materializing any schedule power.
  if (reduced.size() <= 256) {
    Word probe = reduced;
    long long quick_cap = std::min<long long>(c.torsion_order_bound, 64);
    for (long long order = 2; order <= quick_cap; ++order) {
      probe = ctx.reduce(probe + reduced);
      if (probe.empty()) return OrderClass::finite(order);
    }
  }

  // Fast path: the growth certificate fires quickly on infinite-order
  // input, usually at the first schedule entry.
  long long cap = ctx.schedule_cap();
  long long n = c.L;
  for (; n <= cap && fits_word_budget(reduced, n); n = sat_mul(n, 2))
    if (long_cyclic_criterion(ctx, reduced, n)) return OrderClass::infinite(n);

  // Torsion scan. Any finite order is at most the size of the closed
  // (4 delta + 2)-ball, so exhausting it settles the finite case.
  Word power = reduced;
  for (long long order = 2; order <= c.torsion_order_bound; ++order) {
    power = ctx.reduce(power + reduced);
    if (power.empty()) return OrderClass::finite(order);
  }

  // Infinite order without a certificate yet: push the schedule further
  // within the word budget.
  for (;; n = sat_mul(n, 2)) {
    if (!fits_word_budget(reduced, n))
      throw InternalError(
          "test_inf_order: no growth certificate within the word budget; "
          "delta is likely wrong for this group");
    if (long_cyclic_criterion(ctx, reduced, n)) return OrderClass::infinite(n);
  }
}

StraighteningResult straighten_power(const GroupContext& ctx, const Word& u) {
  if (u.empty()) throw ArgumentError("straighten_power: empty input");
  require_reduced(ctx, u, "straighten_power");
  const Constants& c = ctx.constants();
  if (static_cast<long long>(u.size()) <= c.L)
    throw ArgumentError("straighten_power: input not longer than L");

  std::vector<Word> conjugators = ctx.ball(4LL * c.delta);
  long long power_bound = sat_pow(c.V, 4);
  Word power;
  for (long long k = 1; k <= power_bound; ++k) {
    if (static_cast<long long>(u.size()) > kWordBudget / k)
      throw ResourceError("straighten_power: power exceeds the word budget");
    power += u;
    for (const Word& a : conjugators) {
      Word candidate = ctx.conjugate(power, a);
      if (candidate.empty()) continue;
      if (is_shortlex_straight(ctx, candidate))
        return {k, a, std::move(candidate)};
    }
  }
  throw InternalError(
      "straighten_power: no straight conjugate within bounds; the input "
      "violates the precondition or delta is wrong");
}

LongPowerResult common_long_power(const GroupContext& ctx, const Word& u,
                                  const Word& v) {
  require_reduced(ctx, u, "common_long_power");
  require_reduced(ctx, v, "common_long_power");
  const Constants& c = ctx.constants();
  long long cap = ctx.schedule_cap();
  const Word longer = u.size() >= v.size() ? u : v;

  for (long long n = c.L; n <= cap; n = sat_mul(n, 2)) {
    if (!fits_word_budget(longer, n)) {
      if (ctx.profile() == Profile::Paper)
        throw ConfigError(
            "paper profile: the doubling schedule cannot be materialized "
            "within the word budget; rerun with the practical profile");
      break;
    }
    auto probe_u = probe_cyclic_power(ctx, u, n);
    auto probe_v = probe_cyclic_power(ctx, v, n);
    if (probe_u.long_enough && probe_v.long_enough)
      return {n, std::move(probe_u.power), std::move(probe_v.power)};
  }

  // Distinguish a violated precondition from a cap that is simply too low.
  if (!test_inf_order(ctx, u).is_infinite() ||
      !test_inf_order(ctx, v).is_infinite())
    throw ArgumentError("common_long_power: input of finite order");
  if (ctx.profile() == Profile::Paper)
    throw InternalError(
        "common_long_power: criterion failed up to M; delta is likely wrong");
  throw CapExceeded(
      "common_long_power: doubling schedule exhausted the practical power "
      "cap before both words grew long");
}

}  // namespace hypconj
