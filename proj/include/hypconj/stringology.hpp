#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hypconj/words.hpp"

namespace hypconj {

/// All start offsets of `pattern` in `text`, ascending, in
/// O(|pattern| + |text|) letter comparisons. The optional counter records
/// the number of letter comparisons performed.
std::vector<std::size_t> kmp_find_all(const Word& pattern, const Word& text,
                                      std::size_t* comparisons = nullptr);

/// The shortest word y and the maximal l >= 1 with z == y^l, found via the
/// first nontrivial occurrence of z inside z^2.
std::pair<Word, long long> primitive_root(const Word& z);

/// If |u| == |z| and u occurs in z z at some offset, the smallest such
/// offset k (so u == z(k:|z|) z(k)); otherwise nothing.
std::optional<std::size_t> cyclic_match(const Word& u, const Word& z);

}  // namespace hypconj
