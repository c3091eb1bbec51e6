#include "hypconj/words.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace hypconj {

Alphabet::Alphabet(std::string symbols, std::vector<Letter> inverses,
                   int gen_count)
    : symbols_(std::move(symbols)),
      inverses_(std::move(inverses)),
      gen_count_(gen_count) {
  if (symbols_.empty() || symbols_.size() > 200)
    throw ConfigError("alphabet must have between 1 and 200 letters");
  if (inverses_.size() != symbols_.size())
    throw ConfigError("alphabet inverse table has the wrong size");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (lookup_[c] != -1)
      throw ConfigError(std::string("duplicate alphabet symbol '") +
                        symbols_[i] + "'");
    lookup_[c] = static_cast<std::int16_t>(i);
  }
  for (std::size_t i = 0; i < inverses_.size(); ++i) {
    Letter j = inverses_[i];
    if (j >= symbols_.size() || inverses_[j] != i)
      throw ConfigError("alphabet inverse map is not an involution");
  }
}

bool Alphabet::operator==(const Alphabet& other) const {
  return symbols_ == other.symbols_ && inverses_ == other.inverses_ &&
         gen_count_ == other.gen_count_;
}

Alphabet Alphabet::free_group(int rank) {
  if (rank < 1 || rank > 26)
    throw ConfigError("free group rank must be between 1 and 26");
  std::string symbols;
  std::vector<Letter> inverses;
  for (int i = 0; i < rank; ++i) {
    symbols.push_back(static_cast<char>('a' + i));
    symbols.push_back(static_cast<char>('A' + i));
    inverses.push_back(static_cast<Letter>(2 * i + 1));
    inverses.push_back(static_cast<Letter>(2 * i));
  }
  return Alphabet(std::move(symbols), std::move(inverses), rank);
}

Alphabet Alphabet::free_product(const std::vector<int>& orders,
                                std::string_view gens) {
  if (orders.empty()) throw ConfigError("free product needs at least one factor");
  if (!gens.empty() && gens.size() != orders.size())
    throw ConfigError("free product: one generator letter per factor expected");
  std::string symbols;
  std::vector<Letter> inverses;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2)
      throw ConfigError("free product factor orders must be at least 2");
    char g = gens.empty() ? static_cast<char>('a' + i) : gens[i];
    if (!std::islower(static_cast<unsigned char>(g)))
      throw ConfigError("free product generator letters must be lowercase");
    Letter base = static_cast<Letter>(symbols.size());
    if (orders[i] == 2) {
      symbols.push_back(g);
      inverses.push_back(base);  // self-inverse
    } else {
      symbols.push_back(g);
      symbols.push_back(static_cast<char>(std::toupper(g)));
      inverses.push_back(static_cast<Letter>(base + 1));
      inverses.push_back(base);
    }
  }
  return Alphabet(std::move(symbols), std::move(inverses),
                  static_cast<int>(orders.size()));
}

std::optional<Letter> Alphabet::index_of(char c) const {
  std::int16_t i = lookup_[static_cast<unsigned char>(c)];
  if (i < 0) return std::nullopt;
  return static_cast<Letter>(i);
}

Word Word::prefix(std::size_t n) const { return subword(0, n); }

Word Word::subword(std::size_t a, std::size_t b) const {
  if (a > b || b > size()) throw ArgumentError("subword range out of bounds");
  return Word(std::vector<Letter>(letters_.begin() + a, letters_.begin() + b));
}

Word Word::half_cyclic() const { return right_half() + left_half(); }

Word Word::rotated(std::size_t k) const {
  if (k > size()) throw ArgumentError("rotation offset out of bounds");
  return subword(k, size()) + prefix(k);
}

Word Word::repeated(long long n) const {
  if (n < 0) throw ArgumentError("repeated: negative power");
  constexpr long long kWordBudget = 1LL << 27;
  if (n > 0 && static_cast<long long>(size()) > kWordBudget / n)
    throw ResourceError("repeated: word power exceeds the length budget");
  Word out;
  out.letters_.reserve(static_cast<std::size_t>(n) * size());
  for (long long i = 0; i < n; ++i)
    out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
  return out;
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const {
  std::string_view bytes(reinterpret_cast<const char*>(w.letters().data()),
                         w.size());
  return std::hash<std::string_view>{}(bytes);
}

Word invert(const Word& w, const Alphabet& alphabet) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;)
    out.push_back(alphabet.inverse(w[i]));
  return Word(std::move(out));
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto idx = alphabet.index_of(text[i]);
    if (!idx) {
      std::ostringstream msg;
      msg << "unknown symbol '" << text[i] << "' at position " << (i + 1);
      throw ParseError(msg.str());
    }
    letters.push_back(*idx);
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(alphabet.symbol(l));
  return out;
}

std::vector<Word> parse_word_list(std::istream& in, const Alphabet& alphabet,
                                  const std::string& source_name) {
  std::vector<Word> words;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    // trim
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string token = line.substr(first, last - first + 1);
    try {
      words.push_back(parse_word(token, alphabet));
    } catch (const ParseError& e) {
      std::ostringstream msg;
      msg << source_name << ": line " << line_no << ": " << e.what();
      throw ParseError(msg.str());
    }
  }
  return words;
}

std::vector<Word> load_word_list(const std::filesystem::path& path,
                                 const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open word list file: " + path.string());
  return parse_word_list(in, alphabet, path.string());
}

}  // namespace hypconj
