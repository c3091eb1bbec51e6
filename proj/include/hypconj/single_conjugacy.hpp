#pragma once

#include <optional>
#include <vector>

#include "hypconj/context.hpp"
#include "hypconj/words.hpp"

namespace hypconj {

/// Candidate conjugators of the form p y^n s with s in `tails`, n any
/// integer. Soundness contract: every g with u^g == v satisfies
/// g == p y^n s for some n and some tail. y is shortlex straight and
/// `tails` holds at most V words.
struct ConjugatorFamily {
  Word p;
  Word y;
  std::vector<Word> tails;
};

/// Centraliser description of a shortlex straight word z: root is the
/// primitive root y with y^power == z, and every centralising element
/// equals y^i s for some coset representative s. At most V
/// representatives.
struct SlsCentraliser {
  Word root;
  long long power = 1;
  std::vector<Word> coset_reps;
};

/// Decomposes the centraliser of a nonempty shortlex straight word into
/// root powers times finitely many coset representatives. Candidates are
/// the prefix-times-short-word conjugators that fix z, located by matching
/// conjugated copies of z against rotations inside z^2, deduplicated by
/// normal form and folded to one representative per root-power coset.
SlsCentraliser sls_centraliser(const GroupContext& ctx, const Word& z);

/// Conjugator family for shortlex reduced u, v whose half-cyclic
/// conjugates are longer than 2L. Nothing means not conjugate.
std::optional<ConjugatorFamily> eh_solve_conj(const GroupContext& ctx,
                                              const Word& u, const Word& v);

/// Conjugator family for arbitrary infinite-order u, v: raises both to a
/// common long power first, then transports the family back. The family is
/// a necessary condition only; callers verify candidates.
std::optional<ConjugatorFamily> conj_candidates(const GroupContext& ctx,
                                                const Word& u, const Word& v);

}  // namespace hypconj
