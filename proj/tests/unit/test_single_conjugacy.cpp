#include <algorithm>

#include "doctest.h"
#include "hypconj/single_conjugacy.hpp"
#include "hypconj/straightness.hpp"
#include "support/test_support.hpp"

using namespace hypconj;

namespace {

Word rw(const GroupContext& ctx, const char* text) {
  return parse_word(text, ctx.alphabet());
}

// Does the family reach some conjugator carrying u to v, scanning a small
// window of root exponents?
bool family_covers_conjugation(const GroupContext& ctx,
                               const ConjugatorFamily& fam, const Word& u,
                               const Word& v, long long window) {
  Word v0 = ctx.reduce(v);
  for (const Word& s : fam.tails) {
    for (long long n = -window; n <= window; ++n) {
      Word g = ctx.reduce(fam.p + ctx.power_word(fam.y, n) + s);
      if (ctx.conjugate(u, g) == v0) return true;
    }
  }
  return false;
}

bool family_reaches_element(const GroupContext& ctx,
                            const ConjugatorFamily& fam, const Word& target,
                            long long window) {
  Word t0 = ctx.reduce(target);
  for (const Word& s : fam.tails)
    for (long long n = -window; n <= window; ++n)
      if (ctx.reduce(fam.p + ctx.power_word(fam.y, n) + s) == t0) return true;
  return false;
}

}  // namespace

TEST_SUITE("single_conjugacy") {
  TEST_CASE("centraliser of a straight free-group word is its root") {
    GroupContext f2 = GroupContext::free_group(2);
    SlsCentraliser cent = sls_centraliser(f2, rw(f2, "ab"));
    CHECK(format_word(cent.root, f2.alphabet()) == "ab");
    CHECK(cent.power == 1);
    REQUIRE(cent.coset_reps.size() == 1);
    CHECK(cent.coset_reps[0].empty());

    SlsCentraliser cent2 = sls_centraliser(f2, rw(f2, "abab"));
    CHECK(format_word(cent2.root, f2.alphabet()) == "ab");
    CHECK(cent2.power == 2);
    REQUIRE(cent2.coset_reps.size() == 1);
    CHECK(cent2.coset_reps[0].empty());

    CHECK_THROWS_AS(sls_centraliser(f2, Word{}), ArgumentError);
  }

  TEST_CASE("coset representatives centralise and stay within the bound") {
    GroupContext g = GroupContext::free_product({2, 3}, 1, "xy");
    Word z = g.reduce(rw(g, "xy").repeated(12));
    SlsCentraliser cent = sls_centraliser(g, z);
    CHECK(static_cast<long long>(cent.coset_reps.size()) <=
          g.constants().V);
    for (const Word& rep : cent.coset_reps)
      CHECK(g.conjugate(z, rep) == z);
    CHECK(cent.root.repeated(cent.power) == z);
  }

  TEST_CASE("conjugate long powers produce a covering family") {
    GroupContext f2 = GroupContext::free_group(2);
    Word u = f2.reduce(rw(f2, "ab").repeated(40));
    Word v = f2.reduce(rw(f2, "ba").repeated(40));

    auto self_family = eh_solve_conj(f2, u, u);
    REQUIRE(self_family.has_value());
    CHECK(family_reaches_element(f2, *self_family, Word{}, 80));

    auto cross_family = eh_solve_conj(f2, u, v);
    REQUIRE(cross_family.has_value());
    CHECK(family_covers_conjugation(f2, *cross_family, u, v, 80));
    CHECK(family_reaches_element(f2, *cross_family, rw(f2, "a"), 80));

    Word w = f2.reduce(rw(f2, "aab").repeated(40));
    CHECK_FALSE(eh_solve_conj(f2, u, w).has_value());

    CHECK_THROWS_AS(eh_solve_conj(f2, rw(f2, "ab"), rw(f2, "ba")),
                    ArgumentError);
  }

  TEST_CASE("candidate families for short infinite-order words") {
    GroupContext f2 = GroupContext::free_group(2);
    auto fam = conj_candidates(f2, rw(f2, "ab"), rw(f2, "ba"));
    REQUIRE(fam.has_value());
    CHECK(is_shortlex_straight(f2, fam->y));
    CHECK(family_reaches_element(f2, *fam, rw(f2, "a"), 80));

    auto self = conj_candidates(f2, rw(f2, "ab"), rw(f2, "ab"));
    REQUIRE(self.has_value());
    CHECK(family_reaches_element(f2, *self, Word{}, 80));

    CHECK_FALSE(conj_candidates(f2, rw(f2, "ab"), rw(f2, "aab")).has_value());
    CHECK_THROWS_AS(conj_candidates(f2, Word{}, rw(f2, "ab")), ArgumentError);
  }

  TEST_CASE("random conjugate pairs are always covered by the family") {
    GroupContext f2 = GroupContext::free_group(2);
    const Constants& c = f2.constants();
    std::uint64_t state = 4242;
    int covered = 0;
    for (int i = 0; i < 100; ++i) {
      Word w = testsupport::random_normal_form(
          f2, state, 1 + testsupport::rand_below(state, 10));
      Word g = testsupport::random_normal_form(
          f2, state, testsupport::rand_below(state, 7));
      Word v = f2.conjugate(w, g);
      auto fam = conj_candidates(f2, w, v);
      REQUIRE(fam.has_value());
      CHECK(static_cast<long long>(fam->tails.size()) <= c.V);
      CHECK(is_shortlex_straight(f2, fam->y));
      // peak exponents on such small instances are tiny
      if (family_covers_conjugation(f2, *fam, w, v, 8)) ++covered;
      // every output word stays linear in the input size
      long long input = static_cast<long long>(w.size() + v.size());
      CHECK(static_cast<long long>(fam->p.size()) <= 200 * input);
      for (const Word& s : fam->tails)
        CHECK(static_cast<long long>(s.size()) <= 200 * input);
    }
    CHECK(covered == 100);
  }
}
