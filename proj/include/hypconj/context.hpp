#pragma once

#include <filesystem>
#include <string_view>
#include <variant>
#include <vector>

#include "hypconj/words.hpp"

namespace hypconj {

enum class Profile { Practical, Paper };

/// Tunable limits consulted by the algorithms at run time. The defaults are
/// the practical profile; under Profile::Paper the theoretical bounds are
/// used instead and hitting the hard budget is a refusal, never a silent cap.
struct Caps {
  int straight_check_power = 4;            // powers tested for straightness
  long long conjugator_radius_cap = 8;     // exhaustive conjugator search
  long long centraliser_radius_cap = 8;    // exhaustive centraliser search
  long long power_cap = 1LL << 14;         // doubling-schedule ceiling
  long long node_budget = 5'000'000;       // ball enumeration safety valve
  long long rws_step_budget = 20'000'000;  // rewrite steps per reduction
};

/// Group-derived constants. L, M and R follow the fixed formulas; V and
/// torsion_order_bound are exact ball sizes found by breadth-first search
/// over normal forms. M and R saturate at LLONG_MAX rather than overflow.
struct Constants {
  int delta = 1;
  int gen_count = 0;                 // generators before inverse closure
  long long L = 0;                   // 34*delta + 2
  long long V = 0;                   // |closed 2*delta ball|
  long long M = 0;                   // 20 * delta^2 * V^3 * L^2
  long long R = 0;                   // (2*gen_count + 5)^(4*delta + 2)
  long long torsion_order_bound = 0; // |closed (4*delta+2) ball|
  Caps caps;
};

struct FreeGroupBackend {
  int rank;
};

struct FreeProductBackend {
  std::vector<int> orders;       // per factor, each >= 2
  std::vector<int> factor_of;    // per letter
  std::vector<int> sign_of;      // per letter: +1 generator, -1 inverse
  std::vector<Letter> gen_of;    // per factor: its generator letter
};

struct RwsRule {
  Word lhs, rhs;  // rhs strictly shortlex-smaller than lhs
};

struct RwsBackend {
  std::vector<RwsRule> rules;
};

/// A fixed group given by a shortlex-reducing backend plus the
/// hyperbolicity constant delta. Immutable once configured; all operations
/// are pure, so a context can be shared freely between threads.
class GroupContext {
 public:
  static GroupContext free_group(int rank, int delta = 1);
  static GroupContext free_product(const std::vector<int>& orders, int delta,
                                   std::string_view gens = {});
  static GroupContext rewriting_system(Alphabet alphabet,
                                       std::vector<RwsRule> rules, int delta);
  /// Line-based key/value group file; see the README for the grammar.
  static GroupContext load(const std::filesystem::path& path);

  const Alphabet& alphabet() const { return alphabet_; }
  int delta() const { return constants_.delta; }
  const Constants& constants() const { return constants_; }
  const Caps& caps() const { return constants_.caps; }
  void set_caps(const Caps& caps) { constants_.caps = caps; }
  Profile profile() const { return profile_; }
  void set_profile(Profile p) { profile_ = p; }

  bool is_free() const {
    return std::holds_alternative<FreeGroupBackend>(backend_);
  }

  /// The shortlex-least word equal to w in the group; a fixed point of
  /// itself. Linear time for the built-in backends.
  Word reduce(const Word& w) const;
  long long geodesic_length(const Word& w) const {
    return static_cast<long long>(reduce(w).size());
  }
  bool is_trivial(const Word& w) const { return reduce(w).empty(); }
  bool equal(const Word& u, const Word& v) const {
    return reduce(u) == reduce(v);
  }
  /// reduce(c^-1 g c)
  Word conjugate(const Word& g, const Word& c) const;
  /// y^n for any integer n, materialized as a word.
  Word power_word(const Word& y, long long n) const;

  /// All normal forms of length <= radius in shortlex order.
  std::vector<Word> ball(long long radius) const;

  /// The doubling-schedule ceiling for the active profile.
  long long schedule_cap() const;

  /// Search radius for the exhaustive fallbacks: the requested cap under the
  /// practical profile, the theoretical bound under the paper profile
  /// (refusing when that bound exceeds the hard budget).
  long long exp_search_limit(long long requested_cap,
                             long long theoretical_bound) const;

 private:
  GroupContext(Alphabet alphabet,
               std::variant<FreeGroupBackend, FreeProductBackend, RwsBackend> b,
               int delta);
  void derive_constants();

  Alphabet alphabet_;
  std::variant<FreeGroupBackend, FreeProductBackend, RwsBackend> backend_;
  Constants constants_;
  Profile profile_ = Profile::Practical;
};

/// Level-by-level enumeration of normal forms, shortlex-sorted within each
/// level. Level 0 is {empty}; level d holds the normal forms of length d.
class BallEnumerator {
 public:
  explicit BallEnumerator(const GroupContext& ctx);
  /// Words of the next length; empty once the sphere is exhausted.
  const std::vector<Word>& next_level();
  long long level() const { return level_; }
  long long nodes_seen() const { return nodes_; }

 private:
  const GroupContext& ctx_;
  std::vector<Word> current_;
  long long level_ = -1;
  long long nodes_ = 0;
};

// Hard ceiling for paper-profile bounds; beyond it the operation refuses.
constexpr long long kPaperHardBudget = 10'000'000;

}  // namespace hypconj
