#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logdup {

// Splits on whitespace, punctuation, underscores, digit/letter boundaries
// and lower->upper camel-case boundaries, then lowercases. "doScaleUp" ->
// {do, scale, up}; "mlockall" stays one word. Bytes >= 0x80 count as
// letters.
std::vector<std::string> split_words(std::string_view text);

// Classic Porter (1980) stemmer, published rules only: short words are
// stemmed too ("as" -> "a"). Words with characters outside a-z are returned
// unchanged.
std::string porter_stem(std::string_view word);

// split_words + porter_stem, with message placeholders removed first.
std::vector<std::string> message_words(std::string_view static_text);

// The min(cap, |vocabulary|) most frequent words; ties ordered
// lexicographically ascending. Frequencies count every occurrence.
std::set<std::string> compute_stop_words(std::span<const std::vector<std::string>> messages,
                                         std::size_t cap = 50);

}  // namespace logdup
