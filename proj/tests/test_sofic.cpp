/* test_sofic.cpp -- graph presentations, survivor families, degree profiles */

#include <doctest.h>

#include <stdexcept>

#include "expanse/errors.hpp"
#include "expanse/sofic.hpp"

using namespace expanse;

namespace {

SoficPresentation golden_mean() {
  return parse_graph("u 0 u\nu 1 v\nv 0 u\n");
}

SoficPresentation even_shift() {
  return parse_graph("A 0 B\nB 0 A\nA 1 A\n");
}

}  // namespace

TEST_CASE("graph parsing and trimming") {
  SoficPresentation g = golden_mean();
  CHECK(g.vertex_count() == 2);
  CHECK(g.alphabet()->letters() == std::vector<std::string>{"0", "1"});
  CHECK(g.edges().size() == 3);
  CHECK(g.is_deterministic());
  CHECK(parse_graph(print_graph(g)).edges().size() == 3);
  // A vertex with no return path is trimmed away.
  SoficPresentation trimmed = parse_graph("u 0 u\nu 1 w\n");
  CHECK(trimmed.vertex_count() == 1);
  CHECK(trimmed.trimmed_away() == std::vector<std::string>{"w"});
  CHECK_THROWS_AS(parse_graph("u 0\n"), std::invalid_argument);
}

TEST_CASE("determinization merges label-sharing edges") {
  // Two a-edges out of p make the presentation nondeterministic.
  SoficPresentation g = parse_graph("p a p\np a q\nq b p\n");
  CHECK(!g.is_deterministic());
  SoficPresentation d = determinize(g);
  CHECK(d.is_deterministic());
  CHECK(sofic_language(d, 8).words(4) == sofic_language(g, 8).words(4));
}

TEST_CASE("forbidden-word presentations") {
  AlphabetRef zo = Alphabet::make({"0", "1"});
  SoficPresentation g = sft_from_forbidden(zo, {Word::parse(zo, "11")});
  CHECK(g.vertex_count() == 2);
  LanguageSource lang = sofic_language(g, 8);
  CHECK(lang.words(2).size() == 3);
  CHECK(!lang.contains(Word::parse(zo, "11")));
  CHECK(lang.words(4) == sofic_language(golden_mean(), 8).words(4));
}

TEST_CASE("golden mean survivor family has two members") {
  SurvivorFamily family = predecessor_set_family(golden_mean());
  REQUIRE(family.members.size() == 2);
  // Words starting 1 are readable only after a 0; everything else everywhere.
  CHECK(family.members[0].size() == 1);
  CHECK(family.members[1].size() == 2);
}

TEST_CASE("even shift survivor family has three members") {
  // Hand computation: 1... is readable from A only; 0 0... from both;
  // 0 1... from B only (A reads the 0 but then cannot read 1 from B).
  SurvivorFamily family = predecessor_set_family(even_shift());
  CHECK(family.members.size() == 3);
}

TEST_CASE("single-cycle graphs present finite shifts") {
  SoficPresentation cycle = parse_graph("p a q\nq b p\n");
  CHECK(is_finite_shift(cycle));
  CHECK(predecessor_set_family(cycle).members.size() == 2);
  CHECK(!is_finite_shift(golden_mean()));
  CHECK(!is_finite_shift(even_shift()));
  SoficPresentation full = parse_graph("v a v\nv b v\n");
  CHECK(!is_finite_shift(full));
  CHECK(predecessor_set_family(full).members.size() == 1);
}

TEST_CASE("sofic languages read labels of paths") {
  LanguageSource lang = sofic_language(golden_mean(), 12);
  CHECK(lang.words(1).size() == 2);
  CHECK(lang.words(2).size() == 3);
  // Golden-mean counts follow the Fibonacci recurrence.
  CHECK(lang.words(5).size() == 13);
  CHECK(lang.words(10).size() == 144);
}

TEST_CASE("degree profiles grow for infinite sofic shifts") {
  SoficProfile gm = sofic_degree_profile(golden_mean(), 10);
  REQUIRE(gm.max_by_ell.size() == 10);
  for (size_t i = 1; i < gm.max_by_ell.size(); ++i)
    CHECK(gm.max_by_ell[i] > gm.max_by_ell[i - 1]);
  CHECK(gm.max_by_ell[9] > 10);
  CHECK(!gm.bounded_tail);

  SoficProfile even = sofic_degree_profile(even_shift(), 10);
  CHECK(even.max_by_ell[9] > 10);

  // A single periodic orbit has exactly one predecessor per length.
  SoficProfile orbit = sofic_degree_profile(parse_graph("p a q\nq b p\n"), 6);
  CHECK(orbit.max_by_ell == std::vector<uint64_t>(6, 1));
  CHECK(orbit.bounded_tail);
}
