#include "hypconj/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "hypconj/stringology.hpp"

namespace hypconj::oracle {

namespace {

void collect_reductions(const GroupContext& ctx, Word& raw, long long depth,
                        std::unordered_set<Word, WordHash>& seen,
                        long long budget) {
  Word nf = ctx.reduce(raw);
  if (seen.insert(nf).second &&
      static_cast<long long>(seen.size()) > budget)
    throw ResourceError("oracle ball exceeded the node budget");
  if (depth == 0) return;
  for (int l = 0; l < ctx.alphabet().size(); ++l) {
    raw.push_back(static_cast<Letter>(l));
    collect_reductions(ctx, raw, depth - 1, seen, budget);
    Word trimmed = raw.prefix(raw.size() - 1);
    raw = std::move(trimmed);
  }
}

Word cyclic_reduction(const GroupContext& ctx, const Word& w) {
  Word out = ctx.reduce(w);
  while (out.size() >= 2 &&
         out[0] == ctx.alphabet().inverse(out[out.size() - 1]))
    out = ctx.reduce(out.subword(1, out.size() - 1));
  return out;
}

}  // namespace

std::vector<Word> ball(const GroupContext& ctx, long long radius) {
  if (radius < 0) throw ArgumentError("oracle ball: negative radius");
  std::unordered_set<Word, WordHash> seen;
  Word raw;
  collect_reductions(ctx, raw, radius, seen, ctx.caps().node_budget);
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

std::optional<Word> brute_conjugator(const GroupContext& ctx,
                                     const std::vector<Word>& a_list,
                                     const std::vector<Word>& b_list,
                                     long long radius) {
  if (a_list.size() != b_list.size())
    throw ArgumentError("brute_conjugator: lists differ in length");
  std::vector<Word> b_reduced;
  for (const Word& b : b_list) b_reduced.push_back(ctx.reduce(b));
  for (const Word& g : ball(ctx, radius)) {
    bool ok = true;
    for (std::size_t i = 0; i < a_list.size() && ok; ++i)
      ok = ctx.conjugate(a_list[i], g) == b_reduced[i];
    if (ok) return g;
  }
  return std::nullopt;
}

std::vector<Word> brute_centraliser(const GroupContext& ctx,
                                    const std::vector<Word>& a_list,
                                    long long radius) {
  std::vector<Word> reduced;
  for (const Word& a : a_list) reduced.push_back(ctx.reduce(a));
  std::vector<Word> out;
  for (const Word& g : ball(ctx, radius)) {
    bool ok = true;
    for (const Word& a : reduced)
      if (ctx.conjugate(a, g) != a) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

bool free_conjugacy_oracle(const GroupContext& ctx, const Word& u,
                           const Word& v) {
  if (!ctx.is_free())
    throw ArgumentError("free_conjugacy_oracle: needs a free-group backend");
  Word cu = cyclic_reduction(ctx, u);
  Word cv = cyclic_reduction(ctx, v);
  if (cu.size() != cv.size()) return false;
  if (cu.empty()) return true;
  return cyclic_match(cu, cv).has_value();
}

long long estimate_delta(const GroupContext& ctx, long long radius) {
  std::vector<Word> points = ball(ctx, radius);
  long long count = static_cast<long long>(points.size());
  if (count * count * count > ctx.caps().node_budget)
    throw ResourceError("estimate_delta: radius too large for the budget");

  const Alphabet& alphabet = ctx.alphabet();
  long long worst = 0;
  for (const Word& corner : points) {
    Word corner_inv = invert(corner, alphabet);
    for (const Word& x : points) {
      Word side_x = ctx.reduce(corner_inv + x);  // geodesic corner -> x
      for (const Word& y : points) {
        Word side_y = ctx.reduce(corner_inv + y);
        long long opposite = ctx.geodesic_length(invert(x, alphabet) + y);
        long long product = (static_cast<long long>(side_x.size()) +
                             static_cast<long long>(side_y.size()) -
                             opposite) /
                            2;
        for (long long t = 1; t <= product; ++t) {
          Word px = corner + side_x.prefix(static_cast<std::size_t>(t));
          Word py = corner + side_y.prefix(static_cast<std::size_t>(t));
          worst = std::max(
              worst, ctx.geodesic_length(invert(px, alphabet) + py));
        }
      }
    }
  }
  return worst;
}

}  // namespace hypconj::oracle
