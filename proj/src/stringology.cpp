#include "hypconj/stringology.hpp"

namespace hypconj {

namespace {

// failure[i] = length of the longest proper border of pattern(0:i+1)
std::vector<std::size_t> failure_function(const Word& pattern,
                                          std::size_t* comparisons) {
  std::vector<std::size_t> failure(pattern.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (k > 0 && pattern[k] != pattern[i]) {
      if (comparisons) ++*comparisons;
      k = failure[k - 1];
    }
    if (comparisons) ++*comparisons;
    if (pattern[k] == pattern[i]) ++k;
    failure[i] = k;
  }
  return failure;
}

}  // namespace

std::vector<std::size_t> kmp_find_all(const Word& pattern, const Word& text,
                                      std::size_t* comparisons) {
  if (pattern.empty()) throw ArgumentError("kmp_find_all: empty pattern");
  std::vector<std::size_t> offsets;
  auto failure = failure_function(pattern, comparisons);
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && pattern[k] != text[i]) {
      if (comparisons) ++*comparisons;
      k = failure[k - 1];
    }
    if (comparisons) ++*comparisons;
    if (pattern[k] == text[i]) ++k;
    if (k == pattern.size()) {
      offsets.push_back(i + 1 - pattern.size());
      k = failure[k - 1];
    }
  }
  return offsets;
}

std::pair<Word, long long> primitive_root(const Word& z) {
  if (z.empty()) throw ArgumentError("primitive_root: empty word");
  auto offsets = kmp_find_all(z, z + z);
  // offsets[0] == 0; the next one is the least period of the rotation group.
  ensure(offsets.size() >= 2, "primitive_root: z must occur twice in z z");
  std::size_t j = offsets[1];
  ensure(z.size() % j == 0, "primitive_root: least rotation must divide |z|");
  return {z.prefix(j), static_cast<long long>(z.size() / j)};
}

std::optional<std::size_t> cyclic_match(const Word& u, const Word& z) {
  if (u.size() != z.size()) return std::nullopt;
  if (u.empty()) return 0;
  auto offsets = kmp_find_all(u, z + z);
  if (offsets.empty()) return std::nullopt;
  return offsets.front();
}

}  // namespace hypconj
