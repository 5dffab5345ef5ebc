/* test_certify.cpp -- certificate engine verdicts on the bundled corpus */

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "expanse/certify.hpp"
#include "expanse/corpus.hpp"
#include "expanse/substitution.hpp"

using namespace expanse;

namespace {

DirectiveSequence corpus_sub(const std::string& id) {
  return DirectiveSequence::constant(parse_substitution(corpus_entry(id).content));
}

bool has_premise(const Certificate& cert, const std::string& name, const std::string& outcome) {
  return std::any_of(cert.premises.begin(), cert.premises.end(), [&](const Premise& p) {
    return p.name == name && p.outcome == outcome;
  });
}

}  // namespace

TEST_CASE("fibonacci certifies at the rank with conclusive recognizability") {
  Certificate cert = certify(corpus_sub("fibonacci"));
  CHECK(cert.verdict == "bound");
  CHECK(cert.bound == 2);
  CHECK(cert.sharp_above == 1);
  CHECK(cert.rule == "right_marked");
  CHECK(cert.rank == 2);
  CHECK(cert.weakly_primitive);
  CHECK(cert.caveats.empty());
  CHECK(has_premise(cert, "quasi_recognizability", "holds"));
  CHECK(has_premise(cert, "right_marked_levels", "holds"));
}

TEST_CASE("thue-morse certifies at the rank with probe-backed recognizability") {
  Certificate cert = certify(corpus_sub("thue_morse"));
  CHECK(cert.verdict == "bound");
  CHECK(cert.bound == 2);
  CHECK(cert.sharp_above == 1);
  CHECK(cert.rule == "right_marked");
  REQUIRE(cert.caveats.size() == 1);
  CHECK(cert.caveats[0] == "recognizability supported by probe evidence only");
  CHECK(has_premise(cert, "quasi_recognizability", "evidence"));
}

TEST_CASE("uniform left-proper substitutions certify at their rank conclusively") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    Certificate cert = certify(corpus_sub("toeplitz" + std::to_string(n)));
    CHECK(cert.verdict == "bound");
    CHECK(cert.bound == static_cast<uint64_t>(n));
    CHECK(cert.sharp_above == static_cast<uint64_t>(n) - 1);
    CHECK(cert.rule == "right_marked");
    CHECK(cert.caveats.empty());
    CHECK(has_premise(cert, "quasi_recognizability", "holds"));
  }
}

TEST_CASE("suffix-code images give the squared-rank bound") {
  Certificate cert = certify(corpus_sub("suffix_code_9"));
  CHECK(cert.verdict == "bound");
  CHECK(cert.bound == 9);
  CHECK(!cert.sharp_above.has_value());
  CHECK(cert.rule == "suffix_code");
  CHECK(cert.rank == 3);
  CHECK(has_premise(cert, "suffix_code_levels", "holds"));
  // The rule needs recognizability, which only probes support here.
  REQUIRE(cert.caveats.size() == 1);
  CHECK(cert.caveats[0] == "recognizability supported by probe evidence only");
}

TEST_CASE("doubling substitutions are refuted by periodic-cluster witnesses") {
  Certificate bb = certify(corpus_sub("doubling_aa_bb"));
  CHECK(bb.verdict == "negative");
  CHECK(bb.rule == "asymptotic_periodicity");
  CHECK(!bb.bound.has_value());
  CHECK(has_premise(bb, "periodic_cluster_witness", "holds"));
  REQUIRE(bb.caveats.size() == 1);
  CHECK(bb.caveats[0] == "witness patterns verified up to m_max = 16 only");

  Certificate ab = certify(corpus_sub("doubling_aa_ab"));
  CHECK(ab.verdict == "negative");
  CHECK(ab.rule == "asymptotic_periodicity");
}

TEST_CASE("degenerate inputs take the exact screens") {
  // Rank one: the cycle alphabet collapses to a single letter.
  Substitution square = parse_substitution("a -> aa\n");
  Certificate rank1 = certify(DirectiveSequence::constant(square));
  CHECK(rank1.verdict == "bound");
  CHECK(rank1.bound == 1);
  CHECK(rank1.rule == "finite_shift");

  // Complexity stabilizes: the limit set is one periodic orbit.
  Substitution glue = parse_substitution("a -> ab\nb -> ab\n");
  Certificate periodic = certify(DirectiveSequence::constant(glue));
  CHECK(periodic.verdict == "bound");
  CHECK(periodic.bound == 1);
  CHECK(periodic.rule == "finite_shift");
  CHECK(has_premise(periodic, "finite_limit_set", "holds"));

  // Not everywhere growing: no rule applies.
  Substitution lazy = parse_substitution("a -> ab\nb -> b\n");
  Certificate stuck = certify(DirectiveSequence::constant(lazy));
  CHECK(stuck.verdict == "inconclusive");
  CHECK(!stuck.bound.has_value());
  CHECK(has_premise(stuck, "everywhere_growing", "fails"));
}

TEST_CASE("generator sequences certify at their rank with no caveats") {
  Certificate cert = certify_arnoux_rauzy(3, {}, {0, 1, 2});
  CHECK(cert.verdict == "bound");
  CHECK(cert.bound == 3);
  CHECK(cert.sharp_above == 2);
  CHECK(cert.rule == "arnoux_rauzy");
  CHECK(cert.caveats.empty());
  CHECK(cert.premises.size() == 5);
  for (const Premise& p : cert.premises) {
    CAPTURE(p.name);
    CHECK(p.conclusive);
    CHECK(p.outcome == "holds");
  }
  CHECK(cert.weakly_primitive);

  Certificate with_transient = certify_arnoux_rauzy(2, {1, 0}, {0, 1});
  CHECK(with_transient.bound == 2);
  CHECK(with_transient.sharp_above == 1);
}

TEST_CASE("generator sequences reject degenerate directives") {
  CHECK_THROWS_AS(certify_arnoux_rauzy(2, {}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(certify_arnoux_rauzy(1, {}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(certify_arnoux_rauzy(3, {5}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(certify_arnoux_rauzy(3, {}, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(certify_arnoux_rauzy(3, {}, {}), std::invalid_argument);
}

TEST_CASE("the general engine agrees on a parsed generator directive") {
  Certificate cert = certify(parse_directive(corpus_entry("arnoux_rauzy_3").content));
  CHECK(cert.verdict == "bound");
  CHECK(cert.bound == 3);
  CHECK(cert.sharp_above == 2);
  CHECK(cert.rule == "right_marked");
  CHECK(cert.caveats.empty());
  CHECK(has_premise(cert, "quasi_recognizability", "holds"));
}

TEST_CASE("generator substitutions have the documented shape") {
  Substitution gen = arnoux_rauzy_generator(3, 1);
  CHECK(gen.domain()->letters() == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(gen.image(1).str() == "a2");
  CHECK(gen.image(0).str() == "a2.a1");
  CHECK(gen.image(2).str() == "a2.a3");
  CHECK(gen.is_right_marked());
  CHECK(is_return_substitution(gen, Word::parse(gen.domain(), "a2")));
  CHECK_THROWS_AS(arnoux_rauzy_generator(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(arnoux_rauzy_generator(3, 3), std::invalid_argument);
}
