/* corpus.cpp -- bundled example inputs in their on-disk formats */

#include "expanse/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace expanse {

namespace {

std::string toeplitz_text(int n) {
  // Letter a maps to 01...(n-1) followed by a.
  std::ostringstream out;
  out << "# uniform left-proper substitution on " << n << " letters\n";
  for (int a = 0; a < n; ++a) {
    out << a << " -> ";
    for (int b = 0; b < n; ++b) out << b;
    out << a << "\n";
  }
  return out.str();
}

std::string arnoux_rauzy_text(int rank, const std::vector<int>& cycle) {
  std::ostringstream out;
  out << "# alternating episturmian generators on " << rank << " letters\n";
  out << "[cycle]\n";
  bool first = true;
  for (int idx : cycle) {
    if (!first) out << "---\n";
    first = false;
    for (int j = 0; j < rank; ++j) {
      out << "a" << (j + 1) << " -> ";
      if (j == idx)
        out << "a" << (idx + 1);
      else
        out << "a" << (idx + 1) << ".a" << (j + 1);
      out << "\n";
    }
  }
  return out.str();
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> entries;
  entries.push_back({"fibonacci", "substitution", "fibonacci.sub",
                     "# golden-ratio substitution\n"
                     "a -> ab\n"
                     "b -> a\n",
                     "the Fibonacci substitution a->ab, b->a"});
  entries.push_back({"thue_morse", "substitution", "thue_morse.sub",
                     "# Thue-Morse substitution\n"
                     "a -> ab\n"
                     "b -> ba\n",
                     "the Thue-Morse substitution a->ab, b->ba"});
  entries.push_back({"toeplitz2", "substitution", "toeplitz2.sub", toeplitz_text(2),
                     "uniform left-proper substitution on 2 letters (period doubling)"});
  entries.push_back({"toeplitz3", "substitution", "toeplitz3.sub", toeplitz_text(3),
                     "uniform left-proper substitution on 3 letters"});
  entries.push_back({"toeplitz4", "substitution", "toeplitz4.sub", toeplitz_text(4),
                     "uniform left-proper substitution on 4 letters"});
  entries.push_back({"toeplitz5", "substitution", "toeplitz5.sub", toeplitz_text(5),
                     "uniform left-proper substitution on 5 letters"});
  entries.push_back({"suffix_code_9", "substitution", "suffix_code_9.sub",
                     "# images form a suffix code but share no marking\n"
                     "a -> abc\n"
                     "b -> bbc\n"
                     "c -> aba\n",
                     "three-letter substitution whose images are a suffix code"});
  entries.push_back({"doubling_aa_bb", "substitution", "doubling_aa_bb.sub",
                     "# two fixed letters doubled; the limit set is two orbit closures\n"
                     "a -> aa\n"
                     "b -> bb\n",
                     "letter-doubling substitution a->aa, b->bb (unbounded degree)"});
  entries.push_back({"doubling_aa_ab", "substitution", "doubling_aa_ab.sub",
                     "# doubling with a drifting marker\n"
                     "a -> aa\n"
                     "b -> ab\n",
                     "letter-doubling substitution a->aa, b->ab (unbounded degree)"});
  entries.push_back({"arnoux_rauzy_2", "directive", "arnoux_rauzy_2.dir",
                     arnoux_rauzy_text(2, {0, 1}),
                     "rank-2 alternating episturmian directive sequence"});
  entries.push_back({"arnoux_rauzy_3", "directive", "arnoux_rauzy_3.dir",
                     arnoux_rauzy_text(3, {0, 1, 2}),
                     "rank-3 alternating episturmian directive sequence"});
  entries.push_back({"golden_mean", "graph", "golden_mean.graph",
                     "# golden mean shift: no two consecutive 1s\n"
                     "u 0 u\n"
                     "u 1 v\n"
                     "v 0 u\n",
                     "golden mean shift presentation (forbidden word 11)"});
  entries.push_back({"even_shift", "graph", "even_shift.graph",
                     "# even shift: 1s separated by even runs of 0s\n"
                     "A 0 B\n"
                     "B 0 A\n"
                     "A 1 A\n",
                     "even shift presentation (even blocks of 0s between 1s)"});
  return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
  for (const CorpusEntry& e : corpus())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown corpus entry: " + id);
}

}  // namespace expanse
