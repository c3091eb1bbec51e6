#include "hypconj/list_solver.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "hypconj/intmath.hpp"
#include "hypconj/power_conjugacy.hpp"
#include "hypconj/single_conjugacy.hpp"
#include "hypconj/straightness.hpp"

namespace hypconj {

namespace {

std::vector<Word> reduce_all(const GroupContext& ctx,
                             const std::vector<Word>& list) {
  std::vector<Word> out;
  out.reserve(list.size());
  for (const Word& w : list) out.push_back(ctx.reduce(w));
  return out;
}

// Unreduced concatenation of list[i..j], zero-based inclusive bounds.
Word concat_range(const std::vector<Word>& list, std::size_t i,
                  std::size_t j) {
  Word out;
  for (std::size_t t = i; t <= j; ++t) out += list[t];
  return out;
}

bool conjugates_lists(const GroupContext& ctx, const std::vector<Word>& a_list,
                      const Word& g, const std::vector<Word>& b_reduced,
                      long long* checks = nullptr) {
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    if (checks) ++*checks;
    if (ctx.conjugate(a_list[i], g) != b_reduced[i]) return false;
  }
  return true;
}

bool centralises_list(const GroupContext& ctx, const std::vector<Word>& list,
                      const Word& g) {
  for (const Word& w : list) {
    Word nf = ctx.reduce(w);
    if (ctx.conjugate(nf, g) != nf) return false;
  }
  return true;
}

// Theoretical radius within which a conjugator between bounded torsion
// lists must exist; saturates for any realistic delta.
long long conjugacy_exp_bound(const Constants& c, long long mu) {
  long long base = sat_mul(c.R, sat_add(mu, 2 * c.delta));
  return sat_add(base, sat_pow(c.V, sat_mul(4, sat_pow(c.V, 4))));
}

long long centraliser_exp_bound(const Constants& c, long long mu) {
  return sat_mul(c.R, sat_add(mu, 2 * c.delta));
}

long long max_length(const std::vector<Word>& list) {
  std::size_t mu = 0;
  for (const Word& w : list) mu = std::max(mu, w.size());
  return static_cast<long long>(mu);
}

bool orders_match(const OrderClass& a, const OrderClass& b) {
  return a == b;  // Finite orders must agree; Infinite pairs always match.
}

// All normal forms of length <= limit that centralise the list. Sets
// `group_exhausted` when the enumeration ran out of new normal forms, i.e.
// the whole (finite) group was searched.
std::vector<Word> centralising_ball(const GroupContext& ctx,
                                    const std::vector<Word>& list,
                                    long long limit, bool* group_exhausted) {
  std::vector<Word> reduced = reduce_all(ctx, list);
  std::vector<Word> found;
  BallEnumerator levels(ctx);
  for (long long d = 0; d <= limit; ++d) {
    const auto& level = levels.next_level();
    if (level.empty()) {
      if (group_exhausted) *group_exhausted = true;
      break;
    }
    for (const Word& g : level) {
      bool ok = true;
      for (const Word& w : reduced)
        if (ctx.conjugate(w, g) != w) {
          ok = false;
          break;
        }
      if (ok) found.push_back(g);
    }
  }
  return found;
}

struct CentraliserCertificate {
  bool finite_certified = false;  // distinct torsion list longer than V^4
  long long theoretical_radius = kSaturated;
};

CentraliserCertificate certify_centraliser(const GroupContext& ctx,
                                           const std::vector<Word>& reduced) {
  const Constants& c = ctx.constants();
  CentraliserCertificate cert;
  if (static_cast<long long>(reduced.size()) <= sat_pow(c.V, 4)) return cert;
  std::unordered_set<Word, WordHash> seen;
  for (const Word& w : reduced) {
    if (!seen.insert(w).second) return cert;
    if (test_inf_order(ctx, w).is_infinite()) return cert;
  }
  cert.finite_certified = true;
  cert.theoretical_radius = centraliser_exp_bound(c, max_length(reduced));
  return cert;
}

}  // namespace

ListOutcome ListOutcome::conjugate(Word w, std::string branch) {
  return {Tag::Conjugate, std::move(w), "", std::move(branch), 0};
}
ListOutcome ListOutcome::not_conjugate(std::string branch) {
  return {Tag::NotConjugate, Word{}, "", std::move(branch), 0};
}
ListOutcome ListOutcome::unverified(std::string note, std::string branch) {
  return {Tag::UnverifiedAtCap, Word{}, std::move(note), std::move(branch), 0};
}

std::optional<std::pair<long long, long long>> crt_combine(
    const std::vector<std::pair<long long, long long>>& congruences) {
  long long r = 0, t = 1;
  for (auto [ri, ti] : congruences) {
    if (ti < 1) throw ArgumentError("crt_combine: modulus must be >= 1");
    long long g = gcd_ll(t, ti);
    if ((ri - r) % g != 0) return std::nullopt;
    long long lcm = t / g * ti;
    // Step r forward through multiples of t until it also satisfies the
    // new congruence; the step count is bounded by ti / g.
    long long step = t;
    long long target = ((ri % ti) + ti) % ti;
    while (((r % ti) + ti) % ti != target) r += step;
    t = lcm;
    r %= t;
    if (r < 0) r += t;
  }
  return std::make_pair(r, t);
}

InfiniteCaseResult solve_infinite_case(const GroupContext& ctx,
                                       const std::vector<Word>& a_list,
                                       const std::vector<Word>& b_list) {
  if (a_list.size() != b_list.size())
    throw ArgumentError("solve_infinite_case: lists differ in length");
  if (a_list.empty())
    throw ArgumentError("solve_infinite_case: empty lists");
  std::vector<Word> a0 = reduce_all(ctx, a_list);
  std::vector<Word> b0 = reduce_all(ctx, b_list);

  if (!test_inf_order(ctx, a0[0]).is_infinite())
    throw ArgumentError(
        "solve_infinite_case: the first word must have infinite order");
  if (!test_inf_order(ctx, b0[0]).is_infinite())
    return {ListOutcome::not_conjugate("infinite-order"), std::nullopt};

  auto family = conj_candidates(ctx, a0[0], b0[0]);
  if (!family)
    return {ListOutcome::not_conjugate("infinite-order"), std::nullopt};

  // Conjugating by p does not depend on the tail; hoist it.
  std::vector<Word> a_conj;
  a_conj.reserve(a0.size());
  for (const Word& a : a0) a_conj.push_back(ctx.conjugate(a, family->p));

  ProgressionFamily progressions{family->p, family->y, {}};
  long long checks = 0;
  for (const Word& s : family->tails) {
    Word s_inv = invert(s, ctx.alphabet());
    std::vector<std::pair<long long, long long>> periodic;
    std::optional<long long> forced_exponent;
    bool dead = false;
    for (std::size_t i = 0; i < a0.size() && !dead; ++i) {
      Word b_conj = ctx.reduce(s + b0[i] + s_inv);
      PowerConjResult res =
          test_conj_vs_sls(ctx, a_conj[i], b_conj, family->y);
      switch (res.tag) {
        case PowerConjResult::Tag::None:
          dead = true;
          break;
        case PowerConjResult::Tag::Unique:
          if (forced_exponent && *forced_exponent != res.r) dead = true;
          forced_exponent = res.r;
          break;
        case PowerConjResult::Tag::Periodic:
          periodic.push_back({res.r, res.t});
          break;
      }
    }
    if (dead) continue;
    if (forced_exponent) {
      Word g = ctx.reduce(family->p + ctx.power_word(family->y, *forced_exponent) + s);
      if (conjugates_lists(ctx, a0, g, b0, &checks))
        progressions.entries.push_back({s, *forced_exponent, 0});
    } else {
      auto solution = crt_combine(periodic);
      if (solution)
        progressions.entries.push_back({s, solution->first, solution->second});
    }
  }

  if (progressions.entries.empty())
    return {ListOutcome::not_conjugate("infinite-order"), std::nullopt};

  const ProgressionEntry& first = progressions.entries.front();
  Word witness = ctx.reduce(progressions.p +
                            ctx.power_word(progressions.y, first.offset) +
                            first.tail);
  ensure(conjugates_lists(ctx, a0, witness, b0, &checks),
         "solve_infinite_case: witness failed verification");
  ListOutcome outcome = ListOutcome::conjugate(witness, "infinite-order");
  outcome.assertions_checked = checks;
  return {std::move(outcome), std::move(progressions)};
}

CentraliserResult centraliser_infinite_case(const GroupContext& ctx,
                                            const std::vector<Word>& a_list) {
  InfiniteCaseResult res = solve_infinite_case(ctx, a_list, a_list);
  ensure(res.outcome.tag == ListOutcome::Tag::Conjugate && res.family,
         "centraliser_infinite_case: the identity must centralise the list");
  const ProgressionFamily& fam = *res.family;

  std::vector<Word> generators;
  long long period = 0;
  for (const ProgressionEntry& e : fam.entries) {
    generators.push_back(
        ctx.reduce(fam.p + ctx.power_word(fam.y, e.offset) + e.tail));
    if (e.period > 0) {
      ensure(period == 0 || period == e.period,
             "centraliser_infinite_case: nonzero periods must agree");
      period = e.period;
    }
  }
  if (period > 0)
    generators.push_back(ctx.reduce(fam.p + ctx.power_word(fam.y, period) +
                                    invert(fam.p, ctx.alphabet())));
  std::sort(generators.begin(), generators.end(), ShortlexLess{});
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (const Word& g : generators)
    ensure(centralises_list(ctx, a_list, g),
           "centraliser_infinite_case: generator fails to centralise");
  return {std::move(generators), true, "infinite-order"};
}

std::vector<Word> prefix_products(const std::vector<Word>& list,
                                  std::size_t n) {
  if (n < 1 || n > list.size())
    throw ArgumentError("prefix_products: index out of range");
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(concat_range(list, i, n - 1));
  return out;
}

std::optional<std::pair<std::vector<Word>, std::vector<Word>>> ensure_distinct(
    const GroupContext& ctx, const std::vector<Word>& a_list,
    const std::vector<Word>& b_list, std::size_t n) {
  if (a_list.size() != b_list.size())
    throw ArgumentError("ensure_distinct: lists differ in length");
  std::vector<Word> a = a_list, b = b_list;
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t bound = std::min(n, a.size());
    for (std::size_t i = 1; i <= bound && !changed; ++i) {
      for (std::size_t j = i; j <= bound; ++j) {
        bool ta = ctx.is_trivial(concat_range(a, i - 1, j - 1));
        bool tb = ctx.is_trivial(concat_range(b, i - 1, j - 1));
        if (ta != tb) return std::nullopt;
        if (ta) {
          a.erase(a.begin() + (j - 1));
          b.erase(b.begin() + (j - 1));
          changed = true;  // rescan from scratch
          break;
        }
      }
    }
  }
  return std::make_pair(std::move(a), std::move(b));
}

ShortenResult shorten_words(const GroupContext& ctx,
                            const std::vector<Word>& list) {
  const Constants& c = ctx.constants();
  const std::size_t m = list.size();
  Word conj;  // c_k, shortlex reduced throughout
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Word w = ctx.conjugate(concat_range(list, j - 1, k - 1), conj);
      if (ctx.geodesic_length(w.half_cyclic()) > 2 * c.L)
        return {ShortenResult::Tag::InfiniteWitness, Word{}, j, k};
    }
    Word turned = ctx.conjugate(list[k - 1], conj);
    conj = ctx.reduce(conj + turned.left_half());
  }
  // The suffix products conjugated by the result stay within the tower of
  // bounds 3^(m-i) (7L + delta + 1/2); doubled to keep the check integral.
  for (std::size_t i = 1; i <= m; ++i) {
    long long len =
        ctx.geodesic_length(ctx.conjugate(concat_range(list, i - 1, m - 1), conj));
    long long bound_x2 =
        sat_mul(sat_pow(3, static_cast<long long>(m - i)), 14 * c.L + 2 * c.delta + 1);
    ensure(2 * len <= bound_x2, "shorten_words: length bound violated");
  }
  return {ShortenResult::Tag::Shortened, std::move(conj), 0, 0};
}

ListOutcome test_conjugacy_exp(const GroupContext& ctx,
                               const std::vector<Word>& a_list,
                               const std::vector<Word>& b_list,
                               long long radius_cap) {
  if (a_list.size() != b_list.size())
    throw ArgumentError("test_conjugacy_exp: lists differ in length");
  std::vector<Word> a0 = reduce_all(ctx, a_list);
  std::vector<Word> b0 = reduce_all(ctx, b_list);
  if (a0.empty())
    return ListOutcome::conjugate(Word{}, "exp-search");

  for (std::size_t i = 0; i < a0.size(); ++i)
    if (!orders_match(test_inf_order(ctx, a0[i]), test_inf_order(ctx, b0[i])))
      return ListOutcome::not_conjugate("order-prefilter");

  const Constants& c = ctx.constants();
  long long mu = std::max(max_length(a0), max_length(b0));
  long long theoretical = conjugacy_exp_bound(c, mu);
  long long limit = ctx.exp_search_limit(radius_cap, theoretical);

  bool group_exhausted = false;
  BallEnumerator levels(ctx);
  for (long long d = 0; d <= limit; ++d) {
    const auto& level = levels.next_level();
    if (level.empty()) {  // the whole group fits inside the radius
      group_exhausted = true;
      break;
    }
    for (const Word& g : level)
      if (conjugates_lists(ctx, a0, g, b0))
        return ListOutcome::conjugate(g, "exp-search");
  }
  if (group_exhausted || limit >= theoretical)
    return ListOutcome::not_conjugate("exp-search");
  std::ostringstream note;
  note << "conjugator search stopped at radius " << limit
       << " short of the theoretical bound";
  return ListOutcome::unverified(note.str(), "exp-search");
}

CentraliserResult find_centraliser_exp(const GroupContext& ctx,
                                       const std::vector<Word>& a_list,
                                       long long radius_cap) {
  std::vector<Word> reduced = reduce_all(ctx, a_list);
  CentraliserCertificate cert = certify_centraliser(ctx, reduced);
  long long limit = ctx.exp_search_limit(radius_cap, cert.theoretical_radius);
  bool exhausted = false;
  std::vector<Word> gens = centralising_ball(ctx, reduced, limit, &exhausted);
  bool complete = exhausted ||
                  (cert.finite_certified && limit >= cert.theoretical_radius);
  return {std::move(gens), complete, "exp-centraliser"};
}

CentraliserResult bounded_centraliser_generators(
    const GroupContext& ctx, const std::vector<Word>& a_list,
    long long radius_cap) {
  std::vector<Word> reduced = reduce_all(ctx, a_list);
  bool exhausted = false;
  std::vector<Word> gens =
      centralising_ball(ctx, reduced, radius_cap, &exhausted);
  CentraliserCertificate cert = certify_centraliser(ctx, reduced);
  bool complete = exhausted || (cert.finite_certified &&
                                radius_cap >= cert.theoretical_radius);
  return {std::move(gens), complete, "bounded-centraliser"};
}

namespace {

struct InfiniteDispatch {
  bool not_conjugate = false;
  std::optional<std::pair<std::size_t, std::size_t>> range;  // 1-based
};

// Locates a subproduct range on which both lists have infinite order, or
// detects an order mismatch between the two sides.
InfiniteDispatch find_infinite_dispatch(const GroupContext& ctx,
                                        const std::vector<Word>& a0,
                                        const std::vector<Word>& b0,
                                        std::size_t n,
                                        const ShortenResult& sa,
                                        const ShortenResult& sb) {
  InfiniteDispatch out;
  auto both_infinite = [&](std::size_t j, std::size_t k,
                           bool a_known) -> bool {
    const std::vector<Word>& other = a_known ? b0 : a0;
    bool other_infinite =
        test_inf_order(ctx, concat_range(other, j - 1, k - 1)).is_infinite();
    if (!other_infinite) {
      out.not_conjugate = true;
      return false;
    }
    out.range = {j, k};
    return true;
  };
  if (sa.tag == ShortenResult::Tag::InfiniteWitness) {
    both_infinite(sa.j, sa.k, /*a_known=*/true);
    return out;
  }
  if (sb.tag == ShortenResult::Tag::InfiniteWitness) {
    both_infinite(sb.j, sb.k, /*a_known=*/false);
    return out;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    bool a_inf =
        test_inf_order(ctx, concat_range(a0, i - 1, n - 1)).is_infinite();
    bool b_inf =
        test_inf_order(ctx, concat_range(b0, i - 1, n - 1)).is_infinite();
    if (a_inf != b_inf) {
      out.not_conjugate = true;
      return out;
    }
    if (a_inf) {
      out.range = {i, n};
      return out;
    }
  }
  return out;
}

}  // namespace

ListOutcome solve_lists(const GroupContext& ctx,
                        const std::vector<Word>& a_list,
                        const std::vector<Word>& b_list) {
  if (a_list.size() != b_list.size())
    throw ArgumentError("solve_lists: lists differ in length");
  const Constants& c = ctx.constants();
  std::vector<Word> a0 = reduce_all(ctx, a_list);
  std::vector<Word> b0 = reduce_all(ctx, b_list);
  if (a0.empty()) return ListOutcome::conjugate(Word{}, "empty-lists");

  std::size_t n =
      static_cast<std::size_t>(std::min<long long>(sat_add(sat_pow(c.V, 4), 1),
                                                   static_cast<long long>(a0.size())));
  auto distinct = ensure_distinct(ctx, a0, b0, n);
  if (!distinct) return ListOutcome::not_conjugate("ensure-distinct");
  a0 = std::move(distinct->first);
  b0 = std::move(distinct->second);
  if (a0.empty()) return ListOutcome::conjugate(Word{}, "ensure-distinct");
  const std::size_t m = a0.size();
  n = static_cast<std::size_t>(std::min<long long>(
      sat_add(sat_pow(c.V, 4), 1), static_cast<long long>(m)));

  std::vector<Word> a_head(a0.begin(), a0.begin() + n);
  std::vector<Word> b_head(b0.begin(), b0.begin() + n);
  ShortenResult sa = shorten_words(ctx, a_head);
  ShortenResult sb = shorten_words(ctx, b_head);

  InfiniteDispatch dispatch = find_infinite_dispatch(ctx, a0, b0, n, sa, sb);
  if (dispatch.not_conjugate)
    return ListOutcome::not_conjugate("order-mismatch");
  if (dispatch.range) {
    auto [j, k] = *dispatch.range;
    std::vector<Word> a_ext{concat_range(a0, j - 1, k - 1)};
    a_ext.insert(a_ext.end(), a0.begin(), a0.end());
    std::vector<Word> b_ext{concat_range(b0, j - 1, k - 1)};
    b_ext.insert(b_ext.end(), b0.begin(), b0.end());
    try {
      return solve_infinite_case(ctx, a_ext, b_ext).outcome;
    } catch (const CapExceeded& e) {
      return ListOutcome::unverified(e.what(), "infinite-order");
    }
  }

  // Fully torsion remnant: conjugate the suffix products into the bounded
  // ball and search exhaustively there.
  std::vector<Word> a_short, b_short;
  for (std::size_t i = 1; i <= n; ++i) {
    a_short.push_back(
        ctx.conjugate(concat_range(a0, i - 1, n - 1), sa.conjugator));
    b_short.push_back(
        ctx.conjugate(concat_range(b0, i - 1, n - 1), sb.conjugator));
  }
  ListOutcome sub =
      test_conjugacy_exp(ctx, a_short, b_short, c.caps.conjugator_radius_cap);
  if (sub.tag != ListOutcome::Tag::Conjugate) return sub;
  const Word& u = sub.witness;
  Word cb_inv = invert(sb.conjugator, ctx.alphabet());

  long long checks = 0;
  if (m == n) {
    Word witness = ctx.reduce(sa.conjugator + u + cb_inv);
    ensure(conjugates_lists(ctx, a0, witness, b0, &checks),
           "solve_lists: witness failed verification");
    ListOutcome out = ListOutcome::conjugate(witness, "exp-direct");
    out.assertions_checked = checks;
    return out;
  }

  CentraliserResult cent =
      find_centraliser_exp(ctx, a_short, c.caps.centraliser_radius_cap);
  std::vector<Word> b_conj;
  b_conj.reserve(m);
  for (const Word& b : b0) b_conj.push_back(ctx.conjugate(b, sb.conjugator));
  for (const Word& w : cent.generators) {
    Word g = ctx.reduce(sa.conjugator + w + u);
    if (!conjugates_lists(ctx, a0, g, b_conj, &checks)) continue;
    Word witness = ctx.reduce(g + cb_inv);
    ensure(conjugates_lists(ctx, a0, witness, b0, &checks),
           "solve_lists: witness failed verification");
    ListOutcome out = ListOutcome::conjugate(witness, "exp-centraliser");
    out.assertions_checked = checks;
    return out;
  }
  if (cent.complete) return ListOutcome::not_conjugate("exp-centraliser");
  return ListOutcome::unverified(
      "centraliser search stopped short of the theoretical bound",
      "exp-centraliser");
}

CentraliserResult centraliser_lists(const GroupContext& ctx,
                                    const std::vector<Word>& a_list) {
  const Constants& c = ctx.constants();
  std::vector<Word> a0 = reduce_all(ctx, a_list);

  // The centraliser of the empty list is the whole group.
  auto whole_group = [&]() {
    std::vector<Word> gens;
    for (int l = 0; l < ctx.alphabet().size(); ++l)
      gens.push_back(Word{std::vector<Letter>{static_cast<Letter>(l)}});
    return CentraliserResult{std::move(gens), true, "empty-list"};
  };
  if (a0.empty()) return whole_group();

  std::size_t n = static_cast<std::size_t>(std::min<long long>(
      sat_add(sat_pow(c.V, 4), 1), static_cast<long long>(a0.size())));
  auto distinct = ensure_distinct(ctx, a0, a0, n);
  ensure(distinct.has_value(),
         "centraliser_lists: identical lists cannot mismatch");
  a0 = std::move(distinct->first);
  if (a0.empty()) return whole_group();
  const std::size_t m = a0.size();
  n = static_cast<std::size_t>(std::min<long long>(
      sat_add(sat_pow(c.V, 4), 1), static_cast<long long>(m)));

  std::vector<Word> head(a0.begin(), a0.begin() + n);
  ShortenResult sa = shorten_words(ctx, head);
  InfiniteDispatch dispatch = find_infinite_dispatch(ctx, a0, a0, n, sa, sa);
  ensure(!dispatch.not_conjugate,
         "centraliser_lists: identical lists cannot mismatch");
  if (dispatch.range) {
    auto [j, k] = *dispatch.range;
    std::vector<Word> extended{concat_range(a0, j - 1, k - 1)};
    extended.insert(extended.end(), a0.begin(), a0.end());
    return centraliser_infinite_case(ctx, extended);
  }

  std::vector<Word> shortened;
  for (std::size_t i = 1; i <= n; ++i)
    shortened.push_back(
        ctx.conjugate(concat_range(a0, i - 1, n - 1), sa.conjugator));
  ListOutcome sub =
      test_conjugacy_exp(ctx, shortened, shortened, c.caps.conjugator_radius_cap);
  ensure(sub.tag == ListOutcome::Tag::Conjugate,
         "centraliser_lists: a list is always conjugate to itself");
  const Word& u = sub.witness;
  Word ca_inv = invert(sa.conjugator, ctx.alphabet());

  CentraliserResult inner =
      m == n ? bounded_centraliser_generators(ctx, shortened,
                                              c.caps.centraliser_radius_cap)
             : find_centraliser_exp(ctx, shortened,
                                    c.caps.centraliser_radius_cap);
  std::vector<Word> generators;
  for (const Word& w : inner.generators) {
    Word g = ctx.reduce(sa.conjugator + w + u + ca_inv);
    if (m != n && !centralises_list(ctx, a0, g)) continue;
    ensure(centralises_list(ctx, a0, g),
           "centraliser_lists: generator fails to centralise");
    generators.push_back(std::move(g));
  }
  std::sort(generators.begin(), generators.end(), ShortlexLess{});
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  return {std::move(generators), inner.complete, inner.branch};
}

}  // namespace hypconj
