#include "logdup/text_analysis.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "logdup/log_extraction.hpp"

namespace logdup {

namespace {

enum class CharClass { Separator, Lower, Upper, Digit };

CharClass classify(unsigned char c) {
  if (c >= 0x80) return CharClass::Lower;
  if (std::islower(c)) return CharClass::Lower;
  if (std::isupper(c)) return CharClass::Upper;
  if (std::isdigit(c)) return CharClass::Digit;
  return CharClass::Separator;
}

}  // namespace

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  CharClass prev = CharClass::Separator;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    const CharClass cls = classify(c);
    if (cls == CharClass::Separator) {
      flush();
      prev = cls;
      continue;
    }
    const bool letter = cls == CharClass::Lower || cls == CharClass::Upper;
    const bool prev_letter = prev == CharClass::Lower || prev == CharClass::Upper;
    if ((prev == CharClass::Lower && cls == CharClass::Upper) ||
        (prev == CharClass::Digit && letter) || (prev_letter && cls == CharClass::Digit)) {
      flush();
    }
    current.push_back(static_cast<char>(std::tolower(c)));
    prev = cls;
  }
  flush();
  return words;
}

std::vector<std::string> message_words(std::string_view static_text) {
  std::string cleaned;
  cleaned.reserve(static_text.size());
  for (std::size_t pos = 0; pos < static_text.size();) {
    if (static_text.substr(pos, kPlaceholder.size()) == kPlaceholder) {
      cleaned.push_back(' ');
      pos += kPlaceholder.size();
    } else {
      cleaned.push_back(static_text[pos++]);
    }
  }
  std::vector<std::string> words = split_words(cleaned);
  for (std::string& w : words) w = porter_stem(w);
  return words;
}

std::set<std::string> compute_stop_words(std::span<const std::vector<std::string>> messages,
                                         std::size_t cap) {
  std::map<std::string, std::size_t> freq;
  for (const auto& words : messages) {
    for (const std::string& w : words) ++freq[w];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::set<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < cap; ++i) out.insert(ranked[i].first);
  return out;
}

}  // namespace logdup
