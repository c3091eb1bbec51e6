#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypconj/context.hpp"
#include "hypconj/words.hpp"

namespace hypconj {

/// Verdict of a list-conjugacy query. Conjugate witnesses are always
/// verified against the definitions before they escape. `branch` records
/// which part of the orchestration decided, for audit output.
struct ListOutcome {
  enum class Tag { Conjugate, NotConjugate, UnverifiedAtCap } tag;
  Word witness;          // meaningful when Conjugate
  std::string cap_note;  // meaningful when UnverifiedAtCap
  std::string branch;
  long long assertions_checked = 0;

  static ListOutcome conjugate(Word w, std::string branch);
  static ListOutcome not_conjugate(std::string branch);
  static ListOutcome unverified(std::string note, std::string branch);
  bool decided() const { return tag != Tag::UnverifiedAtCap; }
};

/// Solutions for one tail s: the conjugators p y^(offset + n period) s.
/// A zero period means the single exponent `offset`.
struct ProgressionEntry {
  Word tail;
  long long offset = 0;
  long long period = 0;
};

/// All elements conjugating one list to another, as arithmetic
/// progressions of root powers: p y^(offset + n period) tail.
struct ProgressionFamily {
  Word p;
  Word y;
  std::vector<ProgressionEntry> entries;
};

struct CentraliserResult {
  std::vector<Word> generators;
  bool complete = false;
  std::string branch;
};

struct InfiniteCaseResult {
  ListOutcome outcome;
  std::optional<ProgressionFamily> family;
};

/// Simultaneous congruences j == r_i mod t_i. Returns (R, T) describing the
/// solution set {R + nT} with T = lcm(t_i) and 0 <= R < T, or nothing when
/// the system is inconsistent. Every t_i must be >= 1.
std::optional<std::pair<long long, long long>> crt_combine(
    const std::vector<std::pair<long long, long long>>& congruences);

/// Decides A^g == B when the first word of A has infinite order, returning
/// the witness and the full progression family of conjugators.
InfiniteCaseResult solve_infinite_case(const GroupContext& ctx,
                                       const std::vector<Word>& a_list,
                                       const std::vector<Word>& b_list);

/// Centraliser generating set when the first word has infinite order:
/// one conjugator per surviving tail plus the common-period generator.
CentraliserResult centraliser_infinite_case(const GroupContext& ctx,
                                            const std::vector<Word>& a_list);

/// (a_1...a_n, a_2...a_n, ..., a_n), unreduced concatenations. Conjugation
/// problems for the original and transformed lists have the same solutions.
std::vector<Word> prefix_products(const std::vector<Word>& list,
                                  std::size_t n);

/// Deletes paired trivial products until the length-(<= n) suffix products
/// within each list are pairwise distinct; nothing when exactly one side
/// has a trivial product, which rules conjugacy out.
std::optional<std::pair<std::vector<Word>, std::vector<Word>>> ensure_distinct(
    const GroupContext& ctx, const std::vector<Word>& a_list,
    const std::vector<Word>& b_list, std::size_t n);

/// Either a conjugator pulling every suffix product of the list into a
/// bounded ball, or indices (j, k) of an infinite-order subproduct.
struct ShortenResult {
  enum class Tag { Shortened, InfiniteWitness } tag;
  Word conjugator;        // Shortened
  std::size_t j = 0, k = 0;  // InfiniteWitness, 1-based inclusive range
};
ShortenResult shorten_words(const GroupContext& ctx,
                            const std::vector<Word>& list);

/// Exhaustive conjugacy search over normal forms by increasing length, with
/// an element-order prefilter. NotConjugate is only reported when the
/// theoretical radius was fully explored or the prefilter rejected.
ListOutcome test_conjugacy_exp(const GroupContext& ctx,
                               const std::vector<Word>& a_list,
                               const std::vector<Word>& b_list,
                               long long radius_cap);

/// Exhaustive centraliser search. Complete only when the list certifies a
/// finite centraliser (long list of distinct torsion elements) and the full
/// theoretical radius was explored.
CentraliserResult find_centraliser_exp(const GroupContext& ctx,
                                       const std::vector<Word>& a_list,
                                       long long radius_cap);

/// All centralising elements up to the cap, as a generating set with an
/// explicit completeness flag.
CentraliserResult bounded_centraliser_generators(const GroupContext& ctx,
                                                 const std::vector<Word>& a_list,
                                                 long long radius_cap);

/// Full list-conjugacy decision: trivial-product cleanup, shortening,
/// dispatch to the infinite-order pipeline when any subproduct has infinite
/// order, exhaustive search on the bounded remnant otherwise.
ListOutcome solve_lists(const GroupContext& ctx,
                        const std::vector<Word>& a_list,
                        const std::vector<Word>& b_list);

/// Centraliser generating set for an arbitrary list, via the same
/// orchestration with both lists equal.
CentraliserResult centraliser_lists(const GroupContext& ctx,
                                    const std::vector<Word>& a_list);

}  // namespace hypconj
