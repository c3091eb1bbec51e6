#include "hypconj/single_conjugacy.hpp"

#include <algorithm>

#include "hypconj/straightness.hpp"
#include "hypconj/stringology.hpp"

namespace hypconj {

namespace {

// Same left coset of <y>: a b^-1 == y^n for some integer n. Since y is
// straight, |y^n| determines |n| exactly.
bool same_root_coset(const GroupContext& ctx, const Word& y, const Word& a,
                     const Word& b) {
  Word d = ctx.reduce(a + invert(b, ctx.alphabet()));
  if (d.empty()) return true;
  if (d.size() % y.size() != 0) return false;
  long long n = static_cast<long long>(d.size() / y.size());
  return d == ctx.power_word(y, n) || d == ctx.reduce(ctx.power_word(y, -n));
}

std::vector<Word> dedupe_shortlex(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), ShortlexLess{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace

SlsCentraliser sls_centraliser(const GroupContext& ctx, const Word& z) {
  if (z.empty()) throw ArgumentError("sls_centraliser: empty input");
  if (!is_shortlex_straight(ctx, z))
    throw ArgumentError("sls_centraliser: input must be shortlex straight");
  const Constants& c = ctx.constants();

  auto [root, power] = primitive_root(z);
  ensure(is_shortlex_straight(ctx, root),
         "sls_centraliser: primitive root of a straight word must be "
         "straight");

  // A candidate y1 h fixes z exactly when the rotation of z by |y1| equals
  // h z h^-1. Rotations of z are substrings of the reduced word z^2, hence
  // themselves normal forms, so the matches are literal and one KMP pass
  // per h finds every admissible prefix length at once.
  const Word doubled = z + z;
  std::vector<Word> candidates;
  for (const Word& h : ctx.ball(2LL * c.delta)) {
    Word target = ctx.reduce(h + z + invert(h, ctx.alphabet()));
    if (target.size() != z.size()) continue;
    std::vector<bool> prefix_seen(root.size(), false);
    for (std::size_t k : kmp_find_all(target, doubled)) {
      if (k >= z.size()) break;
      std::size_t j = k % root.size();
      if (prefix_seen[j]) continue;
      prefix_seen[j] = true;
      candidates.push_back(ctx.reduce(root.prefix(j) + h));
    }
  }
  candidates = dedupe_shortlex(std::move(candidates));

  // One representative per <root> coset; the shortlex-least survives.
  std::vector<Word> reps;
  for (const Word& cand : candidates) {
    bool covered = false;
    for (const Word& rep : reps)
      if (same_root_coset(ctx, root, cand, rep)) {
        covered = true;
        break;
      }
    if (!covered) reps.push_back(cand);
  }
  ensure(static_cast<long long>(reps.size()) <= c.V,
         "sls_centraliser: more coset representatives than V");
  ensure(!reps.empty() && reps.front().empty(),
         "sls_centraliser: the trivial representative must survive");
  return {std::move(root), power, std::move(reps)};
}

std::optional<ConjugatorFamily> eh_solve_conj(const GroupContext& ctx,
                                              const Word& u, const Word& v) {
  const Constants& c = ctx.constants();
  if (ctx.reduce(u) != u || ctx.reduce(v) != v)
    throw ArgumentError("eh_solve_conj: inputs must be shortlex reduced");
  Word u_cyclic = ctx.reduce(u.half_cyclic());
  Word v_cyclic = ctx.reduce(v.half_cyclic());
  if (static_cast<long long>(u_cyclic.size()) <= 2 * c.L ||
      static_cast<long long>(v_cyclic.size()) <= 2 * c.L)
    throw ArgumentError(
        "eh_solve_conj: half-cyclic conjugates must be longer than 2L");

  StraighteningResult sp = straighten_power(ctx, u_cyclic);
  const Word& z = sp.straight;
  Word v_power = v_cyclic.repeated(sp.power);

  for (const Word& b : ctx.ball(6LL * c.delta)) {
    Word conjugated = ctx.conjugate(v_power, b);
    auto offset = cyclic_match(conjugated, z);
    if (!offset) continue;

    // First match wins: the candidate transporter back to z.
    Word c_word = z.prefix(*offset) + invert(b, ctx.alphabet());
    SlsCentraliser cent = sls_centraliser(ctx, z);
    Word p = ctx.reduce(u.left_half() + sp.conjugator);
    Word v_left_inv = invert(v.left_half(), ctx.alphabet());
    std::vector<Word> tails;
    tails.reserve(cent.coset_reps.size());
    for (const Word& rep : cent.coset_reps)
      tails.push_back(ctx.reduce(rep + c_word + v_left_inv));
    tails = dedupe_shortlex(std::move(tails));
    ensure(static_cast<long long>(tails.size()) <= c.V,
           "eh_solve_conj: more tails than V");
    return ConjugatorFamily{std::move(p), cent.root, std::move(tails)};
  }
  return std::nullopt;
}

std::optional<ConjugatorFamily> conj_candidates(const GroupContext& ctx,
                                                const Word& u, const Word& v) {
  Word u0 = ctx.reduce(u);
  Word v0 = ctx.reduce(v);
  if (u0.empty() || v0.empty())
    throw ArgumentError("conj_candidates: input of finite order");

  LongPowerResult lp = common_long_power(ctx, u0, v0);
  auto inner = eh_solve_conj(ctx, lp.u_long, lp.v_long);
  if (!inner) return std::nullopt;

  Word p = ctx.reduce(u0.left_half() + inner->p);
  Word v_left_inv = invert(v0.left_half(), ctx.alphabet());
  std::vector<Word> tails;
  tails.reserve(inner->tails.size());
  for (const Word& s : inner->tails)
    tails.push_back(ctx.reduce(s + v_left_inv));
  tails = dedupe_shortlex(std::move(tails));
  ensure(static_cast<long long>(tails.size()) <= ctx.constants().V,
         "conj_candidates: more tails than V");
  return ConjugatorFamily{std::move(p), inner->y, std::move(tails)};
}

}  // namespace hypconj
