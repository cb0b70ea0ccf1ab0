#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "amalgam/errors.hpp"
#include "amalgam/word.hpp"
#include "testing.hpp"

namespace amalgam {
namespace {

const Alphabet F2(2);

std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

TEST(Word, ParsesPowersAndInverses) {
  EXPECT_EQ(to_string(parse_word("a^3 B", F2)), "aaaB");
  EXPECT_EQ(to_string(parse_word("a^-2", F2)), "AA");
  EXPECT_EQ(to_string(parse_word("A^-1 b", F2)), "ab");
  EXPECT_EQ(to_string(parse_word("1", F2)), "1");
  EXPECT_EQ(to_string(parse_word("", F2)), "1");
  EXPECT_TRUE(parse_word("abBA", F2).empty());
}

TEST(Word, RejectsBadInput) {
  EXPECT_THROW(parse_word("abc", F2), ParseError);
  EXPECT_THROW(parse_word("a^", F2), ParseError);
  EXPECT_THROW(parse_word("a?b", F2), ParseError);
  EXPECT_THROW(Alphabet(0), DomainError);
}

TEST(Word, IdentityPrintsAsOne) {
  EXPECT_EQ(to_string(Word(F2)), "1");
  std::ostringstream os;
  os << parse_word("ab", F2);
  EXPECT_EQ(os.str(), "ab");
}

TEST(Word, MultiplicationCancelsAtTheSeam) {
  const Word u = parse_word("abA", F2);
  const Word v = parse_word("aBB", F2);
  EXPECT_EQ(to_string(mul(u, v)), "aB");
  EXPECT_TRUE(mul(u, inv(u)).empty());
}

TEST(Word, RankMismatchIsADomainError) {
  EXPECT_THROW(mul(parse_word("a", F2), parse_word("a", Alphabet(3))), DomainError);
}

TEST(Word, CommutatorAndConjugate) {
  const Word a = Word::generator(F2, 1);
  const Word b = Word::generator(F2, 2);
  EXPECT_EQ(to_string(commutator(a, b)), "ABab");
  EXPECT_EQ(to_string(conjugate(a, b)), "Bab");
  EXPECT_EQ(to_string(power(a, -3)), "AAA");
  EXPECT_TRUE(power(b, 0).empty());
}

TEST(Word, ShortlexOrder) {
  auto words = all_reduced_words(F2, 2);
  ASSERT_EQ(words.size(), 1u + 4u + 12u);
  EXPECT_EQ(to_string(words[0]), "1");
  EXPECT_EQ(to_string(words[1]), "a");
  EXPECT_EQ(to_string(words[2]), "A");
  EXPECT_EQ(to_string(words[3]), "b");
  EXPECT_EQ(to_string(words[4]), "B");
  EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
}

TEST(Word, SubstituteIsAHomomorphism) {
  std::vector<Word> images{parse_word("ab", F2), parse_word("B", F2)};
  EXPECT_EQ(to_string(substitute(parse_word("aB", F2), images, F2)), "abb");
  EXPECT_TRUE(substitute(parse_word("abAB", F2), std::vector<Word>{parse_word("a", F2), parse_word("a", F2)}, F2).empty());
}

TEST(WordProperty, ReductionMatchesNaiveOracle) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = testing::random_letters(rng, 3, rng.uniform(0, 20));
    const Word w = reduce(raw, Alphabet(3));
    EXPECT_EQ(letters_of(w), testing::naive_reduce(raw));
  }
}

TEST(WordProperty, GroupAxioms) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word u = testing::random_word(rng, F2, 0, 10);
    const Word v = testing::random_word(rng, F2, 0, 10);
    const Word w = testing::random_word(rng, F2, 0, 10);
    EXPECT_EQ(mul(mul(u, v), w), mul(u, mul(v, w)));
    EXPECT_TRUE(mul(u, inv(u)).empty());
    EXPECT_EQ(inv(mul(u, v)), mul(inv(v), inv(u)));
    EXPECT_EQ(mul(u, Word(F2)), u);
  }
}

TEST(WordProperty, PrintParseRoundTrip) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = testing::random_word(rng, Alphabet(3), 0, 15);
    EXPECT_EQ(parse_word(to_string(w), Alphabet(3)), w);
  }
}

TEST(WordProperty, HashAgreesWithEquality) {
  std::unordered_set<Word> seen;
  for (const Word& w : all_reduced_words(F2, 5)) EXPECT_TRUE(seen.insert(w).second);
  EXPECT_FALSE(seen.insert(mul(parse_word("ab", F2), parse_word("Ba", F2))).second);
}

}  // namespace
}  // namespace amalgam
