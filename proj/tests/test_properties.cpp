/* test_properties.cpp -- randomized invariant suites over small random inputs */

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "expanse/certify.hpp"
#include "expanse/corpus.hpp"
#include "expanse/parsing.hpp"
#include "expanse/predecessors.hpp"

using namespace expanse;

namespace {

int pick(std::mt19937& gen, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(gen);
}

AlphabetRef letters(int n) {
  std::vector<std::string> ls;
  for (int i = 0; i < n; ++i) ls.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet::make(std::move(ls));
}

Word random_word(std::mt19937& gen, const AlphabetRef& alpha, int min_len, int max_len) {
  std::vector<int32_t> ls;
  int len = pick(gen, min_len, max_len);
  for (int i = 0; i < len; ++i) ls.push_back(pick(gen, 0, alpha->size() - 1));
  return Word(alpha, std::move(ls));
}

Substitution random_substitution(std::mt19937& gen, const AlphabetRef& domain,
                                 const AlphabetRef& codomain, int min_len, int max_len) {
  std::vector<Word> images;
  for (int a = 0; a < domain->size(); ++a)
    images.push_back(random_word(gen, codomain, min_len, max_len));
  return Substitution(domain, codomain, std::move(images));
}

DirectiveSequence corpus_seq(const CorpusEntry& e) {
  if (e.kind == "substitution")
    return DirectiveSequence::constant(parse_substitution(e.content));
  return parse_directive(e.content);
}

}  // namespace

TEST_CASE("composition is associative and extends the letter map homomorphically") {
  std::mt19937 gen(101);
  for (int n = 0; n < 200; ++n) {
    AlphabetRef a = letters(pick(gen, 1, 3)), b = letters(pick(gen, 1, 3));
    AlphabetRef c = letters(pick(gen, 1, 3)), d = letters(pick(gen, 1, 3));
    Substitution tau = random_substitution(gen, b, a, 1, 3);
    Substitution tau2 = random_substitution(gen, c, b, 1, 3);
    Substitution tau3 = random_substitution(gen, d, c, 1, 3);
    CHECK(compose(tau, compose(tau2, tau3)) == compose(compose(tau, tau2), tau3));
    Word u = random_word(gen, c, 0, 8);
    CHECK(compose(tau, tau2).expand(u) == tau.expand(tau2.expand(u)));
  }
}

TEST_CASE("composition length bounds") {
  std::mt19937 gen(202);
  for (int n = 0; n < 200; ++n) {
    AlphabetRef a = letters(pick(gen, 1, 3)), b = letters(pick(gen, 1, 3));
    AlphabetRef c = letters(pick(gen, 1, 3));
    Substitution outer = random_substitution(gen, b, a, 1, 4);
    Substitution inner = random_substitution(gen, c, b, 1, 4);
    Substitution comp = compose(outer, inner);
    // The shortest composed image expands the shortest inner image through
    // outer images of varying lengths, so min lengths multiply only as a
    // lower bound; the matching upper bound uses the longest outer image.
    CHECK(comp.min_len() >= outer.min_len() * inner.min_len());
    CHECK(comp.min_len() <= outer.max_len() * inner.min_len());
    CHECK(comp.max_len() >= outer.min_len() * inner.max_len());
    CHECK(comp.max_len() <= outer.max_len() * inner.max_len());
  }
}

TEST_CASE("standard schemes obey the cut bounds, reassemble, and shift") {
  std::mt19937 gen(303);
  int windows = 0;
  for (const char* id : {"fibonacci", "thue_morse", "toeplitz2", "toeplitz3", "suffix_code_9",
                         "doubling_aa_bb", "doubling_aa_ab"}) {
    Substitution tau = parse_substitution(corpus_entry(id).content);
    LanguageSource lang = directive_language(DirectiveSequence::constant(tau), 40);
    const int ml = tau.max_len();
    const int width = 4 * ml + 2;
    std::vector<Word> pool(lang.words(width).begin(), lang.words(width).end());
    REQUIRE(!pool.empty());
    for (int s = 0; s < 35; ++s) {
      const Word& w = pool[static_cast<size_t>(pick(gen, 0, static_cast<int>(pool.size()) - 1))];
      int origin = pick(gen, ml + 1, width - ml - 1);
      Window win{w, origin};
      std::vector<Scheme> schemes = enumerate_standard_schemes(tau, win);
      ++windows;
      for (const Scheme& sch : schemes) {
        CHECK(sch.cut_relative(0) <= 0);
        CHECK(sch.cut_relative(1) > 0);
        for (size_t i = 0; i < sch.cuts.size(); ++i) {
          int rel = static_cast<int>(i) - sch.k0_index;
          int k = sch.cuts[i];
          if (rel >= 0) {
            CHECK(k > rel * tau.min_len() - tau.max_len());
            CHECK(k <= rel * tau.max_len());
          } else {
            CHECK(k <= rel * tau.min_len());
            CHECK(k > (rel - 1) * tau.max_len());
          }
        }
        for (int i = 0; i + 1 < static_cast<int>(sch.cuts.size()); ++i) {
          Word seg = w.subword(sch.cuts[static_cast<size_t>(i)] + origin,
                               sch.cuts[static_cast<size_t>(i) + 1] + origin);
          CHECK(seg == tau.image(sch.letters[i]));
        }
        Word whole = sch.left_partial;
        for (int i = 0; i < sch.letters.size(); ++i) whole.append(tau.image(sch.letters[i]));
        whole.append(sch.right_partial);
        CHECK(whole == w);
      }
      // Moving the origin moves every cut by the same offset and nothing else.
      std::vector<Scheme> shifted = enumerate_standard_schemes(tau, Window{w, origin - 1});
      REQUIRE(shifted.size() == schemes.size());
      for (size_t i = 0; i < schemes.size(); ++i) {
        REQUIRE(shifted[i].cuts.size() == schemes[i].cuts.size());
        for (size_t j = 0; j < schemes[i].cuts.size(); ++j)
          CHECK(shifted[i].cuts[j] == schemes[i].cuts[j] + 1);
        CHECK(shifted[i].left_partial == schemes[i].left_partial);
        CHECK(shifted[i].right_partial == schemes[i].right_partial);
      }
    }
  }
  CHECK(windows >= 200);
}

TEST_CASE("recoverable substitutions act injectively on short words") {
  std::mt19937 gen(404);
  int accepted = 0;
  for (int attempts = 0; accepted < 200 && attempts < 20000; ++attempts) {
    AlphabetRef dom = letters(pick(gen, 2, 3)), cod = letters(pick(gen, 2, 3));
    Substitution tau = random_substitution(gen, dom, cod, 2, 3);
    if (!max_right_recoverability(tau)) continue;
    ++accepted;
    std::set<Word> seen;
    for (int len = 0; len <= 6; ++len) {
      std::vector<int32_t> idx(static_cast<size_t>(len), 0);
      while (true) {
        if (!seen.insert(tau.expand(Word(dom, idx))).second) {
          CAPTURE(print_substitution(tau));
          CAPTURE(Word(dom, idx).str());
          REQUIRE(false);
        }
        int pos = len - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == dom->size() - 1)
          idx[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
      }
    }
  }
  REQUIRE(accepted >= 200);
}

TEST_CASE("recoverability composes through the outer min length") {
  std::mt19937 gen(505);
  int cases = 0;
  for (int attempts = 0; cases < 200 && attempts < 40000; ++attempts) {
    AlphabetRef a = letters(pick(gen, 2, 3)), b = letters(pick(gen, 2, 3));
    AlphabetRef c = letters(pick(gen, 2, 3));
    Substitution outer = random_substitution(gen, b, a, 2, 3);
    if (!max_right_recoverability(outer)) continue;
    Substitution inner = random_substitution(gen, c, b, 2, 3);
    std::optional<int> qmax = max_right_recoverability(inner);
    if (!qmax) continue;
    Substitution comp = compose(outer, inner);
    for (int q = 1; q <= *qmax; ++q) {
      if (!is_q_right_recoverable(inner, q)) continue;
      CAPTURE(print_substitution(outer));
      CAPTURE(print_substitution(inner));
      CAPTURE(q);
      CHECK(is_q_right_recoverable(comp, q * outer.min_len()));
      ++cases;
    }
  }
  REQUIRE(cases >= 200);
}

TEST_CASE("right-marked substitutions stay right-marked under composition") {
  std::mt19937 gen(606);
  int cases = 0;
  for (int attempts = 0; cases < 200 && attempts < 40000; ++attempts) {
    AlphabetRef a = letters(3), b = letters(pick(gen, 2, 3)), c = letters(pick(gen, 2, 3));
    Substitution outer = random_substitution(gen, b, a, 1, 3);
    Substitution inner = random_substitution(gen, c, b, 1, 3);
    if (!outer.is_right_marked() || !inner.is_right_marked()) continue;
    CHECK(compose(outer, inner).is_right_marked());
    ++cases;
  }
  REQUIRE(cases >= 200);
}

TEST_CASE("left extensions of a suffix code form a suffix code") {
  std::mt19937 gen(707);
  int cases = 0;
  for (int attempts = 0; cases < 200 && attempts < 40000; ++attempts) {
    AlphabetRef alpha = letters(pick(gen, 2, 3));
    std::set<Word> members;
    int k = pick(gen, 2, 4);
    for (int i = 0; i < k; ++i) members.insert(random_word(gen, alpha, 1, 4));
    std::vector<Word> code(members.begin(), members.end());
    if (code.size() < 2 || !is_suffix_code(code)) continue;
    std::vector<Word> extended;
    for (const Word& w : code) extended.push_back(random_word(gen, alpha, 0, 3) + w);
    CAPTURE(extended.front().str());
    CHECK(is_suffix_code(extended));
    ++cases;
  }
  REQUIRE(cases >= 200);
}

TEST_CASE("predecessor counts are monotone in the right window length") {
  int comparisons = 0;
  for (const char* id : {"fibonacci", "thue_morse", "toeplitz2", "doubling_aa_ab"}) {
    Substitution tau = parse_substitution(corpus_entry(id).content);
    LanguageSource lang = directive_language(DirectiveSequence::constant(tau), 40);
    for (int ell = 1; ell <= 3; ++ell) {
      for (int r : {2, 4, 6}) {
        PredecessorTable coarse = predecessor_table(lang, ell, r);
        PredecessorTable fine = predecessor_table(lang, ell, r + 2);
        CHECK(fine.max_count <= coarse.max_count);
        for (const auto& [w, count] : fine.counts) {
          Word stub = w.prefix(r);
          auto it = std::find_if(coarse.counts.begin(), coarse.counts.end(),
                                 [&](const auto& row) { return row.first == stub; });
          REQUIRE(it != coarse.counts.end());
          CHECK(count <= it->second);
          ++comparisons;
        }
      }
    }
  }
  CHECK(comparisons >= 200);
}

TEST_CASE("radius composition arithmetic") {
  std::mt19937 gen(808);
  for (int n = 0; n < 200; ++n) {
    int r = pick(gen, 0, 40), m = pick(gen, 1, 9), ri = pick(gen, 0, 40);
    CHECK(radius_compose(r, m, ri) == (r + m - 1) / m + ri);
    CHECK(radius_compose(r, 1, ri) == r + ri);
    CHECK(radius_compose(0, m, ri) == ri);
    CHECK(radius_compose(r + 1, m, ri) >= radius_compose(r, m, ri));
    CHECK(radius_compose(r, m, ri + 1) == radius_compose(r, m, ri) + 1);
    // Composing in two steps never beats flattening into one block.
    int m2 = pick(gen, 1, 9), r2 = pick(gen, 0, 10);
    CHECK(radius_compose(radius_compose(r, m, ri), m2, r2) <=
          radius_compose(r, m * m2, radius_compose(ri, m2, r2)));
  }
}

TEST_CASE("bound certificates dominate enumerated predecessor counts") {
  std::mt19937 gen(909);
  int cases = 0;
  for (const CorpusEntry& e : corpus()) {
    if (e.kind == "graph") continue;
    CAPTURE(e.id);
    DirectiveSequence seq = corpus_seq(e);
    Certificate cert = certify(seq);
    CHECK(!cert.verdict.empty());
    if (cert.caveats.empty())
      for (const Premise& p : cert.premises) CHECK(p.conclusive);
    if (cert.verdict != "bound") continue;
    CHECK(!cert.rule.empty());
    LanguageSource lang = directive_language(seq, 48);
    for (int s = 0; s < 24; ++s) {
      int ell = pick(gen, 1, 3);
      int rw = pick(gen, 32, 40);
      PredecessorTable table = predecessor_table(lang, ell, rw);
      CAPTURE(ell);
      CAPTURE(rw);
      CHECK(static_cast<uint64_t>(table.max_count) <= *cert.bound);
      ++cases;
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("parallel kernels match the serial reference") {
  ExecPolicy serial = ExecPolicy::serial_policy();
  ExecPolicy parallel;  // defaults
  Substitution tm = parse_substitution(corpus_entry("thue_morse").content);
  LanguageSource lang = directive_language(DirectiveSequence::constant(tm), 40);

  PredecessorTable ts = predecessor_table(lang, 3, 16, serial);
  PredecessorTable tp = predecessor_table(lang, 3, 16, parallel);
  CHECK(ts.counts == tp.counts);
  CHECK(ts.max_count == tp.max_count);
  CHECK(ts.argmax == tp.argmax);

  QuasiRecognizabilityReport qs = probe_quasi_recognizability(tm, lang, 16, serial);
  QuasiRecognizabilityReport qp = probe_quasi_recognizability(tm, lang, 16, parallel);
  CHECK(qs.refuted == qp.refuted);

  Substitution dbl = parse_substitution(corpus_entry("doubling_aa_bb").content);
  LanguageSource dlang = directive_language(DirectiveSequence::constant(dbl), 40);
  RadiusProbeReport rs = probe_right_radius(dbl, dlang, 1, 8, serial);
  RadiusProbeReport rp = probe_right_radius(dbl, dlang, 1, 8, parallel);
  CHECK(rs.refuted == rp.refuted);
  REQUIRE(rs.counterexample.has_value());
  REQUIRE(rp.counterexample.has_value());
  CHECK(rs.counterexample->first.word == rp.counterexample->first.word);
  CHECK(rs.counterexample->second.word == rp.counterexample->second.word);
}
