/* test_words.cpp -- alphabets, words, and word-combinatorics predicates */

#include <doctest.h>

#include <stdexcept>

#include "expanse/errors.hpp"
#include "expanse/words.hpp"

using namespace expanse;

namespace {

AlphabetRef ab() { return Alphabet::make({"a", "b"}); }

Word w(const std::string& s) { return Word::parse(ab(), s); }

}  // namespace

TEST_CASE("alphabets validate their letters") {
  AlphabetRef alpha = Alphabet::make({"a", "b", "c"});
  CHECK(alpha->size() == 3);
  CHECK(alpha->letter(0) == "a");
  CHECK(alpha->index("c") == 2);
  CHECK_THROWS_AS(Alphabet::make({}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::make({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::make({"a", "b c"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::make({"a."}), std::invalid_argument);
}

TEST_CASE("multichar alphabets parse dotted words") {
  AlphabetRef alpha = Alphabet::make({"a1", "a2"});
  Word u = Word::parse(alpha, "a1.a2.a1");
  CHECK(u.size() == 3);
  CHECK(u.str() == "a1.a2.a1");
  CHECK(u[1] == 1);
}

TEST_CASE("word slicing and concatenation") {
  Word u = w("abba");
  CHECK(u.prefix(2).str() == "ab");
  CHECK(u.suffix(2).str() == "ba");
  CHECK(u.subword(1, 3).str() == "bb");
  CHECK((u + w("ab")).str() == "abbaab");
  CHECK(w("").empty());
  CHECK(u.prefix(0).empty());
}

TEST_CASE("prefix and suffix relations") {
  CHECK(is_prefix(w("ab"), w("abba")));
  CHECK(!is_prefix(w("bb"), w("abba")));
  CHECK(is_suffix(w("ba"), w("abba")));
  CHECK(is_suffix(w("abba"), w("abba")));
  CHECK(!is_suffix(w("ab"), w("abba")));
  CHECK(is_prefix(w(""), w("a")));
}

TEST_CASE("suffix code examples") {
  AlphabetRef alpha = Alphabet::make({"a", "b", "c"});
  auto W = [&](const std::string& s) { return Word::parse(alpha, s); };
  CHECK(is_suffix_code({W("abc"), W("bbc"), W("aba")}));
  CHECK(!is_suffix_code({W("a"), W("ba")}));
  CHECK(!is_suffix_code({W("ab"), W("b")}));
  CHECK(is_suffix_code({W("aa"), W("ba")}));
  // Duplicates collapse: a set-semantics check.
  CHECK(is_suffix_code({W("ab"), W("ab")}));
  CHECK_THROWS_AS(is_suffix_code({W("")}), premise_error);
}

TEST_CASE("smallest periods") {
  CHECK(smallest_period(w("aba")) == 2);
  CHECK(smallest_period(w("aaaa")) == 1);
  CHECK(smallest_period(Word::parse(Alphabet::make({"0", "1"}), "01")) == 2);
  CHECK(smallest_period(w("ab")) == 2);
  CHECK(smallest_period(w("a")) == 1);
  CHECK(smallest_period(w("abab")) == 2);
  // Weak period: positions 3 and 4 repeat positions 0 and 1.
  CHECK(smallest_period(w("abaab")) == 3);
  CHECK_THROWS_AS(smallest_period(w("")), std::invalid_argument);
}

TEST_CASE("nonoverlapping words have no border") {
  CHECK(!is_nonoverlapping(w("aa")));
  CHECK(is_nonoverlapping(w("ab")));
  CHECK(!is_nonoverlapping(w("aba")));
  CHECK(is_nonoverlapping(w("a")));
  CHECK(is_nonoverlapping(w("aab")));
  CHECK(!is_nonoverlapping(w("abab")));
}

TEST_CASE("occurrences count overlaps") {
  CHECK(occurrences(w("a"), w("aba")) == std::vector<int>{0, 2});
  CHECK(occurrences(w("aa"), w("aaaa")) == std::vector<int>{0, 1, 2});
  CHECK(occurrences(w("ab"), w("abab")) == std::vector<int>{0, 2});
  CHECK(occurrences(w("ba"), w("aaaa")).empty());
  CHECK_THROWS_AS(occurrences(w(""), w("a")), std::invalid_argument);
}

TEST_CASE("factor extraction") {
  std::set<Word> f = factors(w("abab"), 2);
  CHECK(f.size() == 2);
  CHECK(f.count(w("ab")) == 1);
  CHECK(f.count(w("ba")) == 1);
  CHECK(factors(w("ab"), 3).empty());
}

TEST_CASE("lexicographic comparison follows letter indices") {
  CHECK(w("ab") < w("ba"));
  CHECK(w("a") < w("ab"));
  CHECK(w("ab") == w("ab"));
}
