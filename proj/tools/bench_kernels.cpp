/* bench_kernels.cpp -- serial vs parallel timing of the counting kernels */

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "expanse/language.hpp"
#include "expanse/parallel.hpp"
#include "expanse/parsing.hpp"
#include "expanse/predecessors.hpp"
#include "expanse/substitution.hpp"
#include "expanse/words.hpp"

namespace {

using namespace expanse;
using clock_type = std::chrono::steady_clock;

double run_ms(const std::function<void()>& body) {
  auto start = clock_type::now();
  body();
  auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
            << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (equal ? "" : "  [MISMATCH]") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  if (scale < 1) scale = 1;
  ExecPolicy parallel;  // default thread count
  ExecPolicy serial = ExecPolicy::serial_policy();
  std::cout << "threads: " << parallel.resolved_threads() << "\n";

  {
    // Predecessor tables over the full 2-shift: every window is admissible,
    // so the table size scales as 2^(ell + right).
    int ell = 6 + scale, right = 6 + scale;
    LanguageSource lang = full_shift_language(Alphabet::make({"a", "b"}), ell + right + 1);
    lang.words(ell + right);  // warm the memoized language outside the timing
    PredecessorTable ts, tp;
    double s = run_ms([&] { ts = predecessor_table(lang, ell, right, serial); });
    double p = run_ms([&] { tp = predecessor_table(lang, ell, right, parallel); });
    bool equal = ts.max_count == tp.max_count && ts.argmax == tp.argmax &&
                 ts.counts == tp.counts;
    report("predecessor_table(full 2-shift, ell=" + std::to_string(ell) + ")", s, p, equal);
  }

  {
    // Radius probe on the Thue-Morse substitution at a generous half-width.
    AlphabetRef ab = Alphabet::make({"a", "b"});
    Substitution tm(ab, ab, {Word::parse(ab, "ab"), Word::parse(ab, "ba")});
    int m = 16 + 8 * scale;
    LanguageSource lang = directive_language(DirectiveSequence::constant(tm), 2 * m + 1);
    lang.words(2 * m);
    RadiusProbeReport rs, rp;
    double s = run_ms([&] { rs = probe_right_radius(tm, lang, 1, m, serial); });
    double p = run_ms([&] { rp = probe_right_radius(tm, lang, 1, m, parallel); });
    bool equal = rs.refuted == rp.refuted;
    report("probe_right_radius(thue_morse, m=" + std::to_string(m) + ")", s, p, equal);
  }

  {
    // Quasi-recognizability probe on the rank-3 episturmian block.
    AlphabetRef abc = Alphabet::make({"a", "b", "c"});
    Substitution t0(abc, abc, {Word::parse(abc, "a"), Word::parse(abc, "ab"),
                               Word::parse(abc, "ac")});
    Substitution t1(abc, abc, {Word::parse(abc, "ba"), Word::parse(abc, "b"),
                               Word::parse(abc, "bc")});
    Substitution t2(abc, abc, {Word::parse(abc, "ca"), Word::parse(abc, "cb"),
                               Word::parse(abc, "c")});
    DirectiveSequence seq({}, {t0, t1, t2});
    Substitution blk = seq.block(0, 3 + scale);
    int m = 2 * blk.max_len();
    LanguageSource lang = directive_language(seq, 2 * m + 1);
    lang.words(2 * m);
    QuasiRecognizabilityReport qs, qp;
    double s = run_ms([&] { qs = probe_quasi_recognizability(blk, lang, m, serial); });
    double p = run_ms([&] { qp = probe_quasi_recognizability(blk, lang, m, parallel); });
    bool equal = qs.refuted == qp.refuted;
    report("probe_quasi_recognizability(episturmian block, m=" + std::to_string(m) + ")", s, p,
           equal);
  }

  return 0;
}
