/* test_language.cpp -- limit-set languages, complexity, entropy, witnesses */

#include <doctest.h>

#include <cmath>

#include "expanse/errors.hpp"
#include "expanse/language.hpp"

using namespace expanse;

namespace {

AlphabetRef ab() { return Alphabet::make({"a", "b"}); }

Substitution make_ab(const std::string& img_a, const std::string& img_b) {
  AlphabetRef a = ab();
  return Substitution(a, a, {Word::parse(a, img_a), Word::parse(a, img_b)});
}

DirectiveSequence const_seq(const std::string& img_a, const std::string& img_b) {
  return DirectiveSequence::constant(make_ab(img_a, img_b));
}

bool has(const LanguageSource& lang, const std::string& w) {
  return lang.contains(Word::parse(lang.alphabet(), w));
}

}  // namespace

TEST_CASE("fibonacci language is sturmian") {
  LanguageSource lang = directive_language(const_seq("ab", "a"));
  CHECK(lang.words(1).size() == 2);
  CHECK(lang.words(2).size() == 3);
  CHECK(has(lang, "aa"));
  CHECK(has(lang, "ab"));
  CHECK(has(lang, "ba"));
  CHECK(!has(lang, "bb"));
  CHECK(!has(lang, "aaa"));
  for (int r = 1; r <= 12; ++r)
    CHECK(lang.words(r).size() == static_cast<size_t>(r) + 1);
}

TEST_CASE("thue-morse complexity matches the classical values") {
  LanguageSource lang = directive_language(const_seq("ab", "ba"));
  std::vector<uint64_t> expected = {2, 4, 6, 10, 12};
  CHECK(complexity(lang, 5) == expected);
  CHECK(!has(lang, "aaa"));
  CHECK(!has(lang, "ababa"));
}

TEST_CASE("letter-doubling languages") {
  LanguageSource two_blocks = directive_language(const_seq("aa", "bb"));
  // Words are a-runs followed by b-runs or the reverse: p(r) = 2r.
  for (int r = 1; r <= 10; ++r)
    CHECK(two_blocks.words(r).size() == 2 * static_cast<size_t>(r));
  CHECK(has(two_blocks, "aabb"));
  CHECK(has(two_blocks, "bbaa"));
  CHECK(!has(two_blocks, "aba"));

  LanguageSource one_marker = directive_language(const_seq("aa", "ab"));
  // At most one b ever appears: p(r) = r + 1.
  for (int r = 1; r <= 10; ++r)
    CHECK(one_marker.words(r).size() == static_cast<size_t>(r) + 1);
  CHECK(has(one_marker, "aabaa"));
  CHECK(!has(one_marker, "bb"));
}

TEST_CASE("language budget is enforced") {
  LanguageSource lang = directive_language(const_seq("ab", "a"), 8);
  CHECK(lang.words(8).size() == 9);
  CHECK_THROWS_AS(lang.words(9), budget_error);
}

TEST_CASE("non-growing sequences are rejected") {
  CHECK_THROWS_AS(directive_language(const_seq("ab", "b")), premise_error);
}

TEST_CASE("realizable pairs are a fixpoint across levels") {
  DirectiveSequence fib = const_seq("ab", "a");
  auto pairs = realizable_pairs(fib, 1);
  // Fibonacci pairs at any level: aa, ab, ba (never bb).
  CHECK(pairs.size() == 3);
  CHECK(pairs.count({0, 0}) == 1);
  CHECK(pairs.count({1, 1}) == 0);
  // The language read at deeper levels is identical.
  DirectiveSequence tm = const_seq("ab", "ba");
  std::set<Word> at3 = directive_language_at_level(tm, 4, 3);
  std::set<Word> at4 = directive_language_at_level(tm, 4, 4);
  CHECK(at3 == at4);
  CHECK(at3.size() == 10);
  CHECK_THROWS_AS(directive_language_at_level(tm, 4, 1), std::invalid_argument);
}

TEST_CASE("synthetic language sources") {
  LanguageSource full = full_shift_language(ab());
  CHECK(full.words(3).size() == 8);
  LanguageSource orbit = periodic_orbit_language(Word::parse(ab(), "ab"));
  CHECK(orbit.words(1).size() == 2);
  CHECK(orbit.words(5).size() == 2);
  CHECK(orbit.contains(Word::parse(ab(), "abab")));
  CHECK(!orbit.contains(Word::parse(ab(), "aa")));
}

TEST_CASE("entropy estimates") {
  // Synthetic full-shift table p(r) = 2^r: the tail recovers log 2 and the
  // running estimates are flat.
  std::vector<uint64_t> table;
  for (int r = 1; r <= 24; ++r) table.push_back(uint64_t{1} << r);
  EntropyEstimate est = entropy_estimate(table);
  CHECK(est.tail_estimate == doctest::Approx(std::log(2.0)).epsilon(0.01));
  CHECK(std::abs(est.slope) < 1e-12);

  // Linear-complexity languages drive the running estimate to zero.
  LanguageSource fib = directive_language(const_seq("ab", "a"), 32);
  EntropyEstimate fib_est = entropy_estimate(complexity(fib, 24));
  CHECK(std::abs(fib_est.slope) < 0.01);
  CHECK(fib_est.tail_estimate > 0.0);
}

TEST_CASE("asymptotic periodicity witnesses") {
  LanguageSource two_blocks = directive_language(const_seq("aa", "bb"));
  auto w1 = asymptotic_periodic_witness(two_blocks);
  REQUIRE(w1.has_value());
  CHECK(w1->pattern == "a^m b^m");
  CHECK(w1->m_max == 16);
  CHECK(w1->example.size() == 32);

  LanguageSource one_marker = directive_language(const_seq("aa", "ab"));
  auto w2 = asymptotic_periodic_witness(one_marker);
  REQUIRE(w2.has_value());
  CHECK(w2->pattern == "a^m b a^m");

  CHECK(!asymptotic_periodic_witness(directive_language(const_seq("ab", "a"))).has_value());
  CHECK(!asymptotic_periodic_witness(directive_language(const_seq("ab", "ba"))).has_value());
}
