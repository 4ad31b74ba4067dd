// Porter, "An algorithm for suffix stripping", Program 14(3), 1980.
// Follows the published rule tables; none of the later departures
// (logi -> log, bli -> ble) are applied.

#include <algorithm>
#include <string>
#include <string_view>

#include "logdup/text_analysis.hpp"

namespace logdup {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word) {}

  std::string run() {
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_;
  }

 private:
  // Is b_[i] a consonant?
  bool cons(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, len).
  int measure(std::size_t len) const {
    int n = 0;
    std::size_t i = 0;
    while (i < len && cons(i)) ++i;
    while (i < len) {
      while (i < len && !cons(i)) ++i;
      if (i >= len) break;
      while (i < len && cons(i)) ++i;
      ++n;
    }
    return n;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && cons(len - 1);
  }

  // consonant-vowel-consonant ending, last consonant not w, x or y
  bool cvc(std::size_t len) const {
    if (len < 3 || !cons(len - 1) || cons(len - 2) || !cons(len - 3)) return false;
    const char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view suffix) const {
    return b_.size() >= suffix.size() &&
           std::string_view(b_).substr(b_.size() - suffix.size()) == suffix;
  }

  std::size_t stem_len(std::string_view suffix) const { return b_.size() - suffix.size(); }

  void replace(std::string_view suffix, std::string_view with) {
    b_.resize(stem_len(suffix));
    b_.append(with);
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  // Applies the longest matching rule when the remaining stem has
  // measure > min_measure. Once a suffix matches, no shorter rule is tried.
  template <std::size_t N>
  void apply_longest(const Rule (&rules)[N], int min_measure) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
      if (ends(r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    }
    if (best && measure(stem_len(best->suffix)) > min_measure) {
      replace(best->suffix, best->replacement);
    }
  }

  void step1a() {
    if (ends("sses")) {
      replace("sses", "ss");
    } else if (ends("ies")) {
      replace("ies", "i");
    } else if (ends("ss")) {
      // unchanged
    } else if (ends("s")) {
      replace("s", "");
    }
  }

  void step1b() {
    bool trimmed = false;
    if (ends("eed")) {
      if (measure(stem_len("eed")) > 0) replace("eed", "ee");
      return;
    }
    if (ends("ed") && has_vowel(stem_len("ed"))) {
      replace("ed", "");
      trimmed = true;
    } else if (ends("ing") && has_vowel(stem_len("ing"))) {
      replace("ing", "");
      trimmed = true;
    }
    if (!trimmed) return;
    if (ends("at") || ends("bl") || ends("iz")) {
      b_.push_back('e');
    } else if (double_consonant(b_.size())) {
      const char last = b_.back();
      if (last != 'l' && last != 's' && last != 'z') b_.pop_back();
    } else if (measure(b_.size()) == 1 && cvc(b_.size())) {
      b_.push_back('e');
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_len("y"))) b_.back() = 'i';
  }

  void step2() {
    static constexpr Rule kRules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},  {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},    {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"},
    };
    apply_longest(kRules, 0);
  }

  void step3() {
    static constexpr Rule kRules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    };
    apply_longest(kRules, 0);
  }

  void step4() {
    static constexpr std::string_view kSuffixes[] = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
    };
    std::string_view best;
    for (std::string_view s : kSuffixes) {
      if (ends(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    const std::size_t len = stem_len(best);
    if (measure(len) <= 1) return;
    if (best == "ion" && !(len > 0 && (b_[len - 1] == 's' || b_[len - 1] == 't'))) return;
    b_.resize(len);
  }

  void step5() {
    if (ends("e")) {
      const std::size_t len = stem_len("e");
      const int m = measure(len);
      if (m > 1 || (m == 1 && !cvc(len))) b_.pop_back();
    }
    if (ends("ll") && measure(b_.size()) > 1) b_.pop_back();
  }

  std::string b_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  const bool lowercase_ascii = std::all_of(
      word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; });
  if (word.empty() || !lowercase_ascii) return std::string(word);
  return Stemmer(word).run();
}

}  // namespace logdup
