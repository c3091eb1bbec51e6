#include "hypconj/context.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hypconj/intmath.hpp"

namespace hypconj {

namespace {

Word reduce_free(const Word& w, const Alphabet& alphabet) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == alphabet.inverse(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word reduce_product(const Word& w, const Alphabet& alphabet,
                    const FreeProductBackend& b) {
  // Collapse to alternating syllables (factor, exponent mod order).
  std::vector<std::pair<int, int>> syllables;
  for (Letter l : w) {
    int f = b.factor_of[l];
    int order = b.orders[f];
    int v = b.sign_of[l];
    if (!syllables.empty() && syllables.back().first == f) {
      int e = (syllables.back().second + v + order) % order;
      if (e == 0)
        syllables.pop_back();
      else
        syllables.back().second = e;
    } else {
      syllables.push_back({f, (v + order) % order});
    }
  }
  // Spell each syllable with the shorter of gen^e and inv^(order-e);
  // ties go to the generator letter, which precedes its inverse.
  std::vector<Letter> out;
  for (auto [f, e] : syllables) {
    int order = b.orders[f];
    Letter gen = b.gen_of[f];
    if (e <= order - e) {
      for (int i = 0; i < e; ++i) out.push_back(gen);
    } else {
      Letter inv = alphabet.inverse(gen);
      for (int i = 0; i < order - e; ++i) out.push_back(inv);
    }
  }
  return Word(std::move(out));
}

bool ends_with(const std::vector<Letter>& stack, const Word& suffix) {
  if (stack.size() < suffix.size()) return false;
  std::size_t base = stack.size() - suffix.size();
  for (std::size_t i = 0; i < suffix.size(); ++i)
    if (stack[base + i] != suffix[i]) return false;
  return true;
}

Word reduce_rws(const Word& w, const RwsBackend& b, long long step_budget) {
  // `out` stays irreducible: a new left-hand side can only appear as a
  // suffix after a push, and removing that suffix leaves a prefix of an
  // irreducible word. Replacement letters re-enter through `pending`.
  std::vector<Letter> out;
  out.reserve(w.size());
  std::deque<Letter> pending(w.begin(), w.end());
  long long steps = 0;
  while (!pending.empty()) {
    out.push_back(pending.front());
    pending.pop_front();
    for (const RwsRule& rule : b.rules) {
      if (!ends_with(out, rule.lhs)) continue;
      if (++steps > step_budget)
        throw ConfigError(
            "rewriting exceeded its step budget; the rule file is likely "
            "invalid or not confluent");
      out.resize(out.size() - rule.lhs.size());
      for (std::size_t i = rule.rhs.size(); i-- > 0;)
        pending.push_front(rule.rhs[i]);
      break;
    }
  }
  return Word(std::move(out));
}

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void file_error(const std::string& file, int line,
                             const std::string& what) {
  std::ostringstream msg;
  msg << file << ": line " << line << ": " << what;
  throw ParseError(msg.str());
}

}  // namespace

GroupContext::GroupContext(
    Alphabet alphabet,
    std::variant<FreeGroupBackend, FreeProductBackend, RwsBackend> b,
    int delta)
    : alphabet_(std::move(alphabet)), backend_(std::move(b)) {
  if (delta < 1) throw ConfigError("delta must be at least 1");
  constants_.delta = delta;
  derive_constants();
}

GroupContext GroupContext::free_group(int rank, int delta) {
  return GroupContext(Alphabet::free_group(rank), FreeGroupBackend{rank},
                      delta);
}

GroupContext GroupContext::free_product(const std::vector<int>& orders,
                                        int delta, std::string_view gens) {
  Alphabet alphabet = Alphabet::free_product(orders, gens);
  FreeProductBackend b;
  b.orders = orders;
  b.factor_of.resize(alphabet.size());
  b.sign_of.resize(alphabet.size());
  Letter next = 0;
  for (std::size_t f = 0; f < orders.size(); ++f) {
    b.gen_of.push_back(next);
    b.factor_of[next] = static_cast<int>(f);
    b.sign_of[next] = 1;
    ++next;
    if (orders[f] > 2) {
      b.factor_of[next] = static_cast<int>(f);
      b.sign_of[next] = -1;
      ++next;
    }
  }
  return GroupContext(std::move(alphabet), std::move(b), delta);
}

GroupContext GroupContext::rewriting_system(Alphabet alphabet,
                                            std::vector<RwsRule> rules,
                                            int delta) {
  for (const RwsRule& rule : rules) {
    if (rule.lhs.empty())
      throw ConfigError("rewriting rule with empty left-hand side");
    if (!shortlex_less(rule.rhs, rule.lhs))
      throw ConfigError("rewriting rule is not shortlex-reducing: " +
                        format_word(rule.lhs, alphabet) + " -> " +
                        format_word(rule.rhs, alphabet));
  }
  return GroupContext(std::move(alphabet), RwsBackend{std::move(rules)}, delta);
}

Word GroupContext::reduce(const Word& w) const {
  return std::visit(
      [&](const auto& b) -> Word {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, FreeGroupBackend>)
          return reduce_free(w, alphabet_);
        else if constexpr (std::is_same_v<T, FreeProductBackend>)
          return reduce_product(w, alphabet_, b);
        else
          return reduce_rws(w, b, constants_.caps.rws_step_budget);
      },
      backend_);
}

Word GroupContext::conjugate(const Word& g, const Word& c) const {
  return reduce(invert(c, alphabet_) + g + c);
}

Word GroupContext::power_word(const Word& y, long long n) const {
  if (n >= 0) return y.repeated(n);
  return invert(y, alphabet_).repeated(-n);
}

std::vector<Word> GroupContext::ball(long long radius) const {
  if (radius < 0) throw ArgumentError("ball: negative radius");
  std::vector<Word> result;
  BallEnumerator levels(*this);
  for (long long d = 0; d <= radius; ++d) {
    const auto& level = levels.next_level();
    if (level.empty()) break;
    result.insert(result.end(), level.begin(), level.end());
  }
  return result;
}

long long GroupContext::schedule_cap() const {
  if (profile_ == Profile::Paper) return constants_.M;
  return constants_.caps.power_cap;
}

long long GroupContext::exp_search_limit(long long requested_cap,
                                         long long theoretical_bound) const {
  if (profile_ == Profile::Paper) {
    if (theoretical_bound > kPaperHardBudget) {
      std::ostringstream msg;
      msg << "paper profile: theoretical search radius "
          << (theoretical_bound == kSaturated
                  ? std::string("(astronomical)")
                  : std::to_string(theoretical_bound))
          << " exceeds the hard budget " << kPaperHardBudget
          << "; rerun with the practical profile";
      throw ConfigError(msg.str());
    }
    return theoretical_bound;
  }
  return std::min(requested_cap, theoretical_bound);
}

void GroupContext::derive_constants() {
  Constants& c = constants_;
  c.gen_count = alphabet_.gen_count();
  c.L = 34LL * c.delta + 2;
  std::vector<Word> small_ball = ball(2LL * c.delta);
  c.V = static_cast<long long>(small_ball.size());
  c.M = sat_mul(sat_mul(20LL * c.delta * c.delta, sat_pow(c.V, 3)),
                sat_mul(c.L, c.L));
  c.R = sat_pow(2LL * c.gen_count + 5, 4LL * c.delta + 2);
  c.torsion_order_bound =
      static_cast<long long>(ball(4LL * c.delta + 2).size());
}

BallEnumerator::BallEnumerator(const GroupContext& ctx) : ctx_(ctx) {}

const std::vector<Word>& BallEnumerator::next_level() {
  if (level_ < 0) {
    current_ = {Word{}};
    level_ = 0;
    nodes_ = 1;
    return current_;
  }
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> next;
  for (const Word& w : current_) {
    for (int l = 0; l < ctx_.alphabet().size(); ++l) {
      Word extended = w;
      extended.push_back(static_cast<Letter>(l));
      Word nf = ctx_.reduce(extended);
      if (static_cast<long long>(nf.size()) != level_ + 1) continue;
      if (seen.insert(nf).second) next.push_back(std::move(nf));
    }
  }
  nodes_ += static_cast<long long>(next.size());
  if (nodes_ > ctx_.caps().node_budget)
    throw ResourceError("ball enumeration exceeded the node budget");
  std::sort(next.begin(), next.end(), ShortlexLess{});
  current_ = std::move(next);
  ++level_;
  return current_;
}

GroupContext GroupContext::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path.string());
  const std::string file = path.string();

  std::string kind;
  int rank = -1;
  std::vector<int> factors;
  std::string gens;
  int delta = -1;
  std::vector<std::string> letter_tokens;
  std::vector<std::pair<char, char>> inverse_pairs;
  std::vector<std::pair<std::string, std::string>> rule_texts;
  std::vector<int> rule_lines;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    std::istringstream words(body);
    std::string key;
    words >> key;
    if (key == "group") {
      words >> kind;
      if (kind != "free" && kind != "free_product" && kind != "rws")
        file_error(file, line_no, "unknown group kind '" + kind + "'");
    } else if (key == "rank") {
      if (!(words >> rank)) file_error(file, line_no, "rank expects an integer");
    } else if (key == "delta") {
      if (!(words >> delta) || delta < 1)
        file_error(file, line_no, "delta expects an integer >= 1");
    } else if (key == "factors") {
      int n;
      while (words >> n) factors.push_back(n);
      if (factors.empty())
        file_error(file, line_no, "factors expects a list of orders");
    } else if (key == "letters") {
      std::string tok;
      while (words >> tok) letter_tokens.push_back(tok);
    } else if (key == "inverses") {
      std::string tok;
      while (words >> tok) {
        if (tok.size() != 3 || tok[1] != ':')
          file_error(file, line_no, "inverses expects entries like a:A");
        inverse_pairs.emplace_back(tok[0], tok[2]);
      }
    } else if (key == "rule") {
      std::string rest = trim(body.substr(4));
      auto arrow = rest.find("->");
      if (arrow == std::string::npos)
        file_error(file, line_no, "rule expects 'LHS -> RHS'");
      rule_texts.emplace_back(trim(rest.substr(0, arrow)),
                              trim(rest.substr(arrow + 2)));
      rule_lines.push_back(line_no);
    } else {
      file_error(file, line_no, "unknown key '" + key + "'");
    }
  }

  if (kind.empty()) throw ParseError(file + ": missing 'group' line");
  try {
    if (kind == "free") {
      if (rank < 1) throw ParseError(file + ": free group needs 'rank N'");
      return free_group(rank, delta < 0 ? 1 : delta);
    }
    if (kind == "free_product") {
      if (factors.empty())
        throw ParseError(file + ": free product needs 'factors n1 n2 ...'");
      if (delta < 0) throw ParseError(file + ": missing 'delta D'");
      std::string g;
      for (const std::string& tok : letter_tokens) {
        if (tok.size() != 1)
          throw ParseError(file + ": free product letters must be single characters");
        g.push_back(tok[0]);
      }
      return free_product(factors, delta, g);
    }
    // rws
    if (delta < 0) throw ParseError(file + ": missing 'delta D'");
    if (letter_tokens.empty()) throw ParseError(file + ": missing 'letters'");
    std::string symbols;
    for (const std::string& tok : letter_tokens) {
      if (tok.size() != 1)
        throw ParseError(file + ": letters must be single characters");
      symbols.push_back(tok[0]);
    }
    std::vector<Letter> inverses(symbols.size(), 0);
    std::vector<bool> assigned(symbols.size(), false);
    auto index_of = [&](char ch) -> Letter {
      auto pos = symbols.find(ch);
      if (pos == std::string::npos)
        throw ParseError(file + ": inverse entry uses undeclared letter '" +
                         std::string(1, ch) + "'");
      return static_cast<Letter>(pos);
    };
    for (auto [a, b] : inverse_pairs) {
      Letter i = index_of(a), j = index_of(b);
      inverses[i] = j;
      inverses[j] = i;
      assigned[i] = assigned[j] = true;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (!assigned[i])
        throw ParseError(file + ": letter '" + std::string(1, symbols[i]) +
                         "' has no inverse entry");
    int gen_count = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (inverses[i] >= i) ++gen_count;
    Alphabet alphabet(symbols, inverses, gen_count);
    std::vector<RwsRule> rules;
    for (std::size_t r = 0; r < rule_texts.size(); ++r) {
      try {
        rules.push_back(RwsRule{parse_word(rule_texts[r].first, alphabet),
                                parse_word(rule_texts[r].second, alphabet)});
      } catch (const ParseError& e) {
        file_error(file, rule_lines[r], e.what());
      }
    }
    return rewriting_system(std::move(alphabet), std::move(rules), delta);
  } catch (const ConfigError& e) {
    throw ConfigError(file + ": " + e.what());
  }
}

}  // namespace hypconj
