#include "hypconj/power_conjugacy.hpp"

#include "hypconj/intmath.hpp"

namespace hypconj {

namespace {

Word conjugate_by_power(const GroupContext& ctx, const Word& g, const Word& y,
                        long long n) {
  return ctx.reduce(ctx.power_word(y, -n) + g + ctx.power_word(y, n));
}

void require_straight_axis(const GroupContext& ctx, const Word& y,
                           const char* who) {
  if (y.empty()) throw ArgumentError(std::string(who) + ": empty power word");
  ensure(ctx.reduce(y) == y,
         std::string(who) + ": the power word must be shortlex reduced");
}

}  // namespace

LargePowerClass classify_large_power(const GroupContext& ctx, const Word& g,
                                     const Word& y) {
  require_straight_axis(ctx, y, "classify_large_power");
  const Constants& c = ctx.constants();
  Word g0 = ctx.reduce(g);
  long long glen = static_cast<long long>(g0.size());
  long long n = c.V + 1 + (glen + c.delta) / static_cast<long long>(y.size());
  long long conj_len =
      static_cast<long long>(conjugate_by_power(ctx, g0, y, n).size());
  return {conj_len <= glen + 2 * c.delta, conj_len};
}

PowerConjResult test_conj_vs_sls(const GroupContext& ctx, const Word& u,
                                 const Word& v, const Word& y,
                                 PowerConjStats* stats) {
  require_straight_axis(ctx, y, "test_conj_vs_sls");
  const Constants& c = ctx.constants();
  const Word u0 = ctx.reduce(u);
  const Word v0 = ctx.reduce(v);
  const long long ulen = static_cast<long long>(u0.size());
  const long long vlen = static_cast<long long>(v0.size());
  const long long ylen = static_cast<long long>(y.size());

  long long probe = c.V + 1 + (ulen + vlen + c.delta) / ylen;
  long long l_u =
      static_cast<long long>(conjugate_by_power(ctx, u0, y, probe).size());
  long long l_v =
      static_cast<long long>(conjugate_by_power(ctx, v0, y, probe).size());
  bool central_u = l_u <= ulen + 2 * c.delta;
  bool central_v = l_v <= vlen + 2 * c.delta;
  if (central_u != central_v) return PowerConjResult::none();

  if (central_u) {
    // Some y^e with e <= V centralises u; its least period bounds the scan.
    long long period = 0;
    for (long long t = 1; t <= c.V; ++t) {
      if (conjugate_by_power(ctx, u0, y, t) == u0) {
        period = t;
        break;
      }
    }
    ensure(period > 0,
           "test_conj_vs_sls: bounded conjugates without a centralising "
           "power of y");
    for (long long r = 0; r < period; ++r)
      if (conjugate_by_power(ctx, u0, y, r) == v0)
        return PowerConjResult::periodic(r, period);
    return PowerConjResult::none();
  }

  // Escaping case: conjugate lengths grow linearly in the exponent, which
  // pins any solution into a window of at most 6 delta + 1 integers.
  long long lo = ceil_div(l_v - l_u - 6 * c.delta, 2 * ylen);
  long long hi = floor_div(l_v - l_u + 6 * c.delta, 2 * ylen);
  for (long long r = lo; r <= hi; ++r) {
    if (stats) ++stats->escaping_probes;
    if (conjugate_by_power(ctx, u0, y, r) == v0)
      return PowerConjResult::unique(r);
  }
  return PowerConjResult::none();
}

}  // namespace hypconj
