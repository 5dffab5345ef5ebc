/* test_formats.cpp -- serialization round-trips and report determinism */

#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "expanse/corpus.hpp"
#include "expanse/predecessors.hpp"
#include "expanse/report.hpp"

using namespace expanse;

TEST_CASE("substitution text survives a print/parse round-trip") {
  for (const char* id : {"fibonacci", "thue_morse", "toeplitz3", "suffix_code_9"}) {
    CAPTURE(id);
    Substitution tau = parse_substitution(corpus_entry(id).content);
    Substitution again = parse_substitution(print_substitution(tau));
    CHECK(again.images() == tau.images());
    CHECK(again.domain()->letters() == tau.domain()->letters());
  }
}

TEST_CASE("directive text survives a print/parse round-trip") {
  DirectiveSequence seq = parse_directive(corpus_entry("arnoux_rauzy_3").content);
  DirectiveSequence again = parse_directive(print_directive(seq));
  CHECK(again.transient_size() == seq.transient_size());
  CHECK(again.cycle_size() == seq.cycle_size());
  for (int t = 0; t < seq.cycle_size(); ++t)
    CHECK(again.cycle()[static_cast<size_t>(t)].images() ==
          seq.cycle()[static_cast<size_t>(t)].images());
}

TEST_CASE("graph text survives a print/parse round-trip") {
  SoficPresentation g = parse_graph(corpus_entry("even_shift").content);
  SoficPresentation again = parse_graph(print_graph(g));
  CHECK(again.vertices() == g.vertices());
  CHECK(again.edges() == g.edges());
}

TEST_CASE("every corpus entry parses as its declared kind") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.id);
    if (e.kind == "substitution")
      CHECK_NOTHROW(parse_substitution(e.content));
    else if (e.kind == "directive")
      CHECK_NOTHROW(parse_directive(e.content));
    else
      CHECK_NOTHROW(parse_graph(e.content));
  }
  CHECK(corpus().size() == 13);
  CHECK_THROWS_AS(corpus_entry("nonesuch"), std::invalid_argument);
}

TEST_CASE("json reports are deterministic and carry the schema tag") {
  Substitution fib = parse_substitution(corpus_entry("fibonacci").content);
  std::string a = substitution_props_json(fib);
  std::string b = substitution_props_json(parse_substitution(corpus_entry("fibonacci").content));
  CHECK(a == b);
  nlohmann::json doc = nlohmann::json::parse(a);
  CHECK(doc["schema"] == 1);
  CHECK(doc["min_len"] == 1);
  CHECK(doc["max_len"] == 2);
  CHECK(doc["right_marked"] == true);
  CHECK(a.back() == '\n');
}

TEST_CASE("certificate json exposes verdict, premises, and caveats") {
  Certificate cert = certify_arnoux_rauzy(3, {}, {0, 1, 2});
  nlohmann::json doc = nlohmann::json::parse(certificate_json(cert));
  CHECK(doc["schema"] == 1);
  CHECK(doc["verdict"] == "bound");
  CHECK(doc["bound"] == 3);
  CHECK(doc["sharp_above"] == 2);
  CHECK(doc["rule"] == "arnoux_rauzy");
  CHECK(doc["caveats"].empty());
  REQUIRE(doc["premises"].size() == 5);
  CHECK(doc["premises"][0].contains("name"));
  CHECK(doc["premises"][0].contains("outcome"));
  CHECK(doc["premises"][0].contains("conclusive"));
  std::string text = certificate_text(cert);
  CHECK(text.find("positively 3-expansive") != std::string::npos);
  CHECK(text.find("not positively 2-expansive") != std::string::npos);
  CHECK(text.find("arnoux_rauzy") != std::string::npos);
}

TEST_CASE("predecessor tables render to csv with one row per right word") {
  DirectiveSequence fib =
      DirectiveSequence::constant(parse_substitution(corpus_entry("fibonacci").content));
  LanguageSource lang = directive_language(fib);
  PredecessorTable table = predecessor_table(lang, 2, 6);
  std::string csv = predecessor_table_csv(table);
  CHECK(csv.rfind("right_word,ell,count\n", 0) == 0);
  size_t rows = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(rows == table.counts.size() + 1);
  nlohmann::json doc = nlohmann::json::parse(predecessor_table_json(table));
  CHECK(doc["schema"] == 1);
  CHECK(doc["ell"] == 2);
  CHECK(doc["right_len"] == 6);
  CHECK(doc["max_count"] == 2);
}

TEST_CASE("probe reports serialize their verdicts") {
  Substitution dbl = parse_substitution(corpus_entry("doubling_aa_bb").content);
  LanguageSource lang = directive_language(DirectiveSequence::constant(dbl));
  QuasiRecognizabilityReport report = probe_quasi_recognizability(dbl, lang, 4);
  nlohmann::json doc = nlohmann::json::parse(quasi_probe_json(report));
  CHECK(doc["schema"] == 1);
  CHECK(doc["refuted"] == true);
  CHECK(doc.contains("counterexample"));
  std::string text = quasi_probe_text(report);
  CHECK(text.find("refuted") != std::string::npos);
}
