#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "logdup/duplicate_index.hpp"

namespace logdup {
namespace {

LoggingStatement statement(std::uint32_t id, std::string text, std::string type = "p.A") {
  LoggingStatement s;
  s.id = id;
  s.file_path = "F.java";
  s.line = static_cast<int>(id) + 1;
  s.static_text = std::move(text);
  s.enclosing_type = std::move(type);
  return s;
}

TEST(DuplicateIndex, MessageTextRule) {
  EXPECT_TRUE(has_message_text("Done"));
  EXPECT_TRUE(has_message_text("⟨V⟩ x"));
  EXPECT_TRUE(has_message_text("404"));
  EXPECT_FALSE(has_message_text(""));
  EXPECT_FALSE(has_message_text("⟨V⟩"));
  EXPECT_FALSE(has_message_text(" : ⟨V⟩ - ⟨V⟩ !"));
  EXPECT_FALSE(has_message_text("{}⟨V⟩"));
}

TEST(DuplicateIndex, GroupsExactTextAndDropsSingletons) {
  const std::vector<LoggingStatement> s = {
      statement(0, "b"), statement(1, "a"), statement(2, "b", "p.B"), statement(3, "c"),
      statement(4, "a "), statement(5, "⟨V⟩"), statement(6, "⟨V⟩"), statement(7, "a"),
  };
  const auto sets = build_duplicate_sets(s);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0].key, "a");
  EXPECT_EQ(sets[0].members, (std::vector<std::uint32_t>{1, 7}));
  EXPECT_EQ(sets[1].key, "b");
  EXPECT_EQ(sets[1].span_types, (std::set<std::string>{"p.A", "p.B"}));
  const CorpusStats stats = corpus_stats(sets, s);
  EXPECT_EQ(stats, (CorpusStats{8, 4, 2}));
  EXPECT_DOUBLE_EQ(stats.nodl_percent(), 50.0);
  const auto membership = set_membership(sets, s.size());
  EXPECT_EQ(membership[7], 0u);
  EXPECT_EQ(membership[2], 1u);
  EXPECT_FALSE(membership[3].has_value());
}

TEST(DuplicateIndex, EmptyInput) {
  EXPECT_TRUE(build_duplicate_sets({}).empty());
  EXPECT_DOUBLE_EQ(corpus_stats({}, {}).nodl_percent(), 0.0);
}

// Pairwise oracle: two statements share a set iff their texts are equal and
// carry message text; set count and membership follow from that relation.
TEST(DuplicateIndex, RandomCorporaMatchPairwiseOracle) {
  const std::vector<std::string> alphabet = {"a", "b", " ", "⟨V⟩", ":", "Ab", "1"};
  std::mt19937 rng(99);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = rng() % 40;
    std::vector<LoggingStatement> statements;
    for (std::uint32_t i = 0; i < n; ++i) {
      std::string text;
      const std::size_t len = rng() % 3;
      for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
      statements.push_back(statement(i, text, "p.T" + std::to_string(rng() % 3)));
    }
    const auto sets = build_duplicate_sets(statements);
    const auto membership = set_membership(sets, n);

    auto textual = [](const std::string& t) {
      std::string rest = t;
      for (std::size_t pos; (pos = rest.find("⟨V⟩")) != std::string::npos;) rest.erase(pos, std::string("⟨V⟩").size());
      for (char c : rest) {
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return true;
      }
      return false;
    };
    std::size_t expected_members = 0;
    std::set<std::string> expected_keys;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t same = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const bool together = i != j && textual(statements[i].static_text) &&
                              statements[i].static_text == statements[j].static_text;
        same += together;
        const bool grouped =
            membership[i].has_value() && membership[j].has_value() && *membership[i] == *membership[j];
        if (i != j) EXPECT_EQ(grouped, together) << "round " << round;
      }
      if (same > 0) {
        ++expected_members;
        expected_keys.insert(statements[i].static_text);
      }
      EXPECT_EQ(membership[i].has_value(), same > 0);
    }
    ASSERT_EQ(sets.size(), expected_keys.size());
    std::size_t i = 0;
    for (const std::string& key : expected_keys) {
      EXPECT_EQ(sets[i].id, i);
      EXPECT_EQ(sets[i].key, key);
      EXPECT_TRUE(std::is_sorted(sets[i].members.begin(), sets[i].members.end()));
      std::set<std::string> types;
      for (auto m : sets[i].members) types.insert(statements[m].enclosing_type);
      EXPECT_EQ(sets[i].span_types, types);
      ++i;
    }
    EXPECT_EQ(corpus_stats(sets, statements), (CorpusStats{n, expected_members, expected_keys.size()}));
  }
}

}  // namespace
}  // namespace logdup
