#include "hypconj/bench.hpp"

#include <chrono>

#include "hypconj/list_solver.hpp"

namespace hypconj {

namespace {

// splitmix64; deterministic across platforms, unlike the standard
// distributions.
std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Word random_normal_form(const GroupContext& ctx, std::uint64_t& state,
                        std::size_t length) {
  const int letters = ctx.alphabet().size();
  Word raw;
  Word nf;
  while (nf.size() < length) {
    for (std::size_t i = 0; i < length + 8; ++i)
      raw.push_back(static_cast<Letter>(next_random(state) % letters));
    nf = ctx.reduce(raw);
    raw = nf;
  }
  return nf.prefix(length);
}

std::vector<BenchPoint> run_conjugacy_bench(const GroupContext& ctx, int m,
                                            const std::vector<long long>& mus,
                                            int reps, std::uint64_t seed) {
  std::vector<BenchPoint> points;
  for (long long mu : mus) {
    std::uint64_t state = seed ^ (0xabcdULL * static_cast<std::uint64_t>(mu));
    double total = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      std::vector<Word> a_list, b_list;
      Word g = random_normal_form(ctx, state, 4);
      for (int i = 0; i < m; ++i) {
        a_list.push_back(
            random_normal_form(ctx, state, static_cast<std::size_t>(mu)));
        b_list.push_back(ctx.conjugate(a_list.back(), g));
      }
      auto start = std::chrono::steady_clock::now();
      ListOutcome outcome = solve_lists(ctx, a_list, b_list);
      auto stop = std::chrono::steady_clock::now();
      ensure(outcome.tag == ListOutcome::Tag::Conjugate,
             "bench: a round-trip instance must be conjugate");
      total += std::chrono::duration<double>(stop - start).count();
    }
    points.push_back({mu, m, reps, total / reps});
  }
  return points;
}

}  // namespace hypconj
