/* report.cpp -- JSON, CSV, and plain-text renderings of analysis results */

#include "expanse/report.hpp"

#include <sstream>

#include <json.hpp>

namespace expanse {

namespace {

using json = nlohmann::json;

std::string finish(json& doc) {
  doc["schema"] = 1;
  return doc.dump(2) + "\n";
}

json window_json(const Window& window) {
  json j;
  j["origin"] = window.origin;
  j["word"] = window.word.str();
  return j;
}

json scheme_json(const Scheme& scheme) {
  json j;
  j["cuts"] = scheme.cuts;
  j["k0_index"] = scheme.k0_index;
  j["letters"] = scheme.letters.str();
  j["left_partial"] = scheme.left_partial.str();
  j["right_partial"] = scheme.right_partial.str();
  return j;
}

std::string scheme_line(const Scheme& scheme) {
  std::ostringstream out;
  out << "cuts (";
  for (size_t i = 0; i < scheme.cuts.size(); ++i) out << (i ? "," : "") << scheme.cuts[i];
  out << ") letters '" << scheme.letters.str() << "'";
  if (!scheme.left_partial.empty()) out << " left '" << scheme.left_partial.str() << "'";
  if (!scheme.right_partial.empty()) out << " right '" << scheme.right_partial.str() << "'";
  return out.str();
}

json substitution_json_body(const Substitution& tau) {
  json j;
  json images = json::object();
  for (int32_t a = 0; a < tau.domain()->size(); ++a)
    images[tau.domain()->letter(a)] = tau.image(a).str();
  j["images"] = images;
  json domain = json::array(), codomain = json::array();
  for (int32_t a = 0; a < tau.domain()->size(); ++a) domain.push_back(tau.domain()->letter(a));
  for (int32_t a = 0; a < tau.codomain()->size(); ++a)
    codomain.push_back(tau.codomain()->letter(a));
  j["domain"] = domain;
  j["codomain"] = codomain;
  j["min_len"] = tau.min_len();
  j["max_len"] = tau.max_len();
  j["injective"] = tau.is_injective();
  j["uniform"] = tau.is_uniform();
  j["expanding"] = tau.is_expanding();
  j["left_proper"] = tau.is_left_proper();
  j["right_marked"] = tau.is_right_marked();
  j["toeplitz"] = is_toeplitz(tau);
  j["suffix_code_images"] = is_suffix_code(tau.images());
  if (tau.is_left_proper())
    j["maximal_common_prefix"] = maximal_common_prefix(tau).str();
  auto q = max_right_recoverability(tau);
  if (q)
    j["max_right_recoverability"] = *q;
  else
    j["max_right_recoverability"] = nullptr;
  return j;
}

}  // namespace

std::string substitution_props_json(const Substitution& tau) {
  json j = substitution_json_body(tau);
  return finish(j);
}

std::string substitution_props_text(const Substitution& tau) {
  std::ostringstream out;
  out << print_substitution(tau);
  out << "min image length " << tau.min_len() << ", max " << tau.max_len() << "\n";
  out << "injective: " << (tau.is_injective() ? "yes" : "no")
      << ", uniform: " << (tau.is_uniform() ? "yes" : "no")
      << ", expanding: " << (tau.is_expanding() ? "yes" : "no") << "\n";
  out << "left-proper: " << (tau.is_left_proper() ? "yes" : "no")
      << ", right-marked: " << (tau.is_right_marked() ? "yes" : "no")
      << ", toeplitz: " << (is_toeplitz(tau) ? "yes" : "no") << "\n";
  out << "images form a suffix code: " << (is_suffix_code(tau.images()) ? "yes" : "no") << "\n";
  if (tau.is_left_proper())
    out << "maximal common prefix: '" << maximal_common_prefix(tau).str() << "'\n";
  auto q = max_right_recoverability(tau);
  if (q)
    out << "max right recoverability: " << *q << "\n";
  else
    out << "max right recoverability: none\n";
  return out.str();
}

std::string directive_props_json(const DirectiveSequence& seq) {
  json j;
  j["transient_size"] = seq.transient_size();
  j["cycle_size"] = seq.cycle_size();
  j["rank"] = seq.rank();
  bool growing = seq.is_everywhere_growing();
  j["everywhere_growing"] = growing;
  j["weakly_primitive"] = seq.is_weakly_primitive();
  j["expanding_levels"] = seq.is_expanding_levels();
  json alphabets = json::array();
  for (int t = 0; t <= seq.transient_size() + seq.cycle_size(); ++t)
    alphabets.push_back(seq.alphabet(t)->size());
  j["alphabet_sizes"] = alphabets;
  if (growing) {
    json mins = json::array(), maxs = json::array();
    for (int t = 0; t <= seq.transient_size() + seq.cycle_size(); ++t) {
      mins.push_back(seq.block_min_len(t));
      maxs.push_back(seq.block_max_len(t));
    }
    j["block_min_len"] = mins;
    j["block_max_len"] = maxs;
  }
  return finish(j);
}

std::string directive_props_text(const DirectiveSequence& seq) {
  std::ostringstream out;
  out << "directive sequence: " << seq.transient_size() << " transient level(s), cycle of "
      << seq.cycle_size() << "\n";
  out << "rank " << seq.rank() << ", everywhere growing: "
      << (seq.is_everywhere_growing() ? "yes" : "no") << ", weakly primitive: "
      << (seq.is_weakly_primitive() ? "yes" : "no") << ", expanding levels: "
      << (seq.is_expanding_levels() ? "yes" : "no") << "\n";
  if (seq.is_everywhere_growing()) {
    out << "block image lengths (min..max) by level:";
    for (int t = 1; t <= seq.transient_size() + seq.cycle_size(); ++t)
      out << " " << seq.block_min_len(t) << ".." << seq.block_max_len(t);
    out << "\n";
  }
  return out.str();
}

std::string language_report_json(const LanguageSource& lang, int r_max, int list_up_to) {
  json j;
  j["name"] = lang.name();
  std::vector<uint64_t> table = complexity(lang, r_max);
  j["complexity"] = table;
  EntropyEstimate est = entropy_estimate(table);
  j["entropy_tail"] = est.tail_estimate;
  j["entropy_slope"] = est.slope;
  json words = json::object();
  for (int r = 1; r <= list_up_to && r <= r_max; ++r) {
    json list = json::array();
    for (const Word& w : lang.words(r)) list.push_back(w.str());
    words[std::to_string(r)] = list;
  }
  j["words"] = words;
  return finish(j);
}

std::string language_report_text(const LanguageSource& lang, int r_max, int list_up_to) {
  std::ostringstream out;
  out << "language: " << lang.name() << "\n";
  std::vector<uint64_t> table = complexity(lang, r_max);
  out << "complexity p(1.." << r_max << "):";
  for (uint64_t p : table) out << " " << p;
  out << "\n";
  EntropyEstimate est = entropy_estimate(table);
  out << "entropy tail estimate " << est.tail_estimate << ", running-estimate slope "
      << est.slope << "\n";
  for (int r = 1; r <= list_up_to && r <= r_max; ++r) {
    out << "words(" << r << "):";
    for (const Word& w : lang.words(r)) out << " " << w.str();
    out << "\n";
  }
  return out.str();
}

std::string predecessor_table_json(const PredecessorTable& table) {
  json j;
  j["ell"] = table.ell;
  j["right_len"] = table.right_len;
  j["max_count"] = table.max_count;
  j["argmax"] = table.argmax.str();
  json counts = json::array();
  for (const auto& [w, c] : table.counts) {
    json row;
    row["right_word"] = w.str();
    row["count"] = c;
    counts.push_back(row);
  }
  j["counts"] = counts;
  return finish(j);
}

std::string predecessor_table_csv(const PredecessorTable& table) {
  std::ostringstream out;
  out << "right_word,ell,count\n";
  for (const auto& [w, c] : table.counts)
    out << w.str() << "," << table.ell << "," << c << "\n";
  return out.str();
}

std::string predecessor_table_text(const PredecessorTable& table) {
  std::ostringstream out;
  out << "predecessors of length " << table.ell << " for right windows of length "
      << table.right_len << "\n";
  for (const auto& [w, c] : table.counts) out << "  " << w.str() << " : " << c << "\n";
  out << "max " << table.max_count << " at '" << table.argmax.str() << "'\n";
  return out.str();
}

std::string degree_profile_json(const DegreeProfile& profile,
                                const PersistenceReport& persistence) {
  json j;
  j["right_len"] = profile.right_len;
  j["max_by_ell"] = profile.max_by_ell;
  j["constant_tail"] = profile.constant_tail;
  json p;
  p["ell"] = persistence.ell;
  p["count"] = persistence.count;
  p["persists"] = persistence.persists;
  p["witness"] = persistence.witness.str();
  j["persistence"] = p;
  return finish(j);
}

std::string degree_profile_text(const DegreeProfile& profile,
                                const PersistenceReport& persistence) {
  std::ostringstream out;
  out << "max predecessor count by length (right windows of length " << profile.right_len
      << "):";
  for (int c : profile.max_by_ell) out << " " << c;
  out << "\n";
  out << "top half constant: " << (profile.constant_tail ? "yes" : "no") << "\n";
  out << "max at length " << persistence.ell << " is " << persistence.count << " and "
      << (persistence.persists ? "persists" : "does not persist")
      << " when the right window doubles (witness '" << persistence.witness.str() << "')\n";
  return out.str();
}

std::string bound_check_json(const PredecessorBoundCheck& check) {
  json j;
  j["t"] = check.t;
  j["ell"] = check.ell;
  j["radius"] = check.radius;
  j["h"] = check.h;
  j["observed"] = check.observed;
  j["bound_letters"] = check.bound_letters;
  j["bound_rank"] = check.bound_rank;
  j["ok_letters"] = check.ok_letters;
  j["ok_rank"] = check.ok_rank;
  return finish(j);
}

std::string bound_check_text(const PredecessorBoundCheck& check) {
  std::ostringstream out;
  out << "level " << check.t << ", word length " << check.ell << ", radius " << check.radius
      << ": observed max " << check.observed << " length-" << check.h << " predecessors\n";
  out << "letters bound " << check.bound_letters << " ("
      << (check.ok_letters ? "ok" : "VIOLATED") << "), rank bound " << check.bound_rank << " ("
      << (check.ok_rank ? "ok" : "VIOLATED") << ")\n";
  return out.str();
}

std::string schemes_json(const Window& window, const std::vector<Scheme>& schemes) {
  json j;
  j["window"] = window_json(window);
  json list = json::array();
  for (const Scheme& s : schemes) list.push_back(scheme_json(s));
  j["schemes"] = list;
  j["count"] = schemes.size();
  return finish(j);
}

std::string schemes_text(const Window& window, const std::vector<Scheme>& schemes) {
  std::ostringstream out;
  out << "window '" << window.word.str() << "' at positions [" << window.lo() << ", "
      << window.hi() << ")\n";
  out << schemes.size() << " standard scheme(s)\n";
  for (const Scheme& s : schemes) out << "  " << scheme_line(s) << "\n";
  return out.str();
}

std::string quasi_probe_json(const QuasiRecognizabilityReport& report) {
  json j;
  j["refuted"] = report.refuted;
  j["window_half_width"] = report.window_half_width;
  if (report.counterexample)
    j["counterexample"] = window_json(*report.counterexample);
  else
    j["counterexample"] = nullptr;
  json list = json::array();
  for (const Scheme& s : report.schemes) list.push_back(scheme_json(s));
  j["schemes"] = list;
  return finish(j);
}

std::string quasi_probe_text(const QuasiRecognizabilityReport& report) {
  std::ostringstream out;
  if (report.refuted) {
    out << "quasi-recognizability refuted: window '" << report.counterexample->word.str()
        << "' (half-width " << report.window_half_width << ") has " << report.schemes.size()
        << " standard schemes\n";
    for (const Scheme& s : report.schemes) out << "  " << scheme_line(s) << "\n";
  } else {
    out << "no window of half-width " << report.window_half_width
        << " carries two standard schemes (evidence, not proof)\n";
  }
  return out.str();
}

std::string radius_probe_json(const RadiusProbeReport& report) {
  json j;
  j["refuted"] = report.refuted;
  j["radius"] = report.radius;
  j["window_half_width"] = report.window_half_width;
  if (report.counterexample) {
    j["counterexample_first"] = window_json(report.counterexample->first);
    j["counterexample_second"] = window_json(report.counterexample->second);
  } else {
    j["counterexample_first"] = nullptr;
    j["counterexample_second"] = nullptr;
  }
  json list = json::array();
  for (const Scheme& s : report.schemes) list.push_back(scheme_json(s));
  j["schemes"] = list;
  return finish(j);
}

std::string radius_probe_text(const RadiusProbeReport& report) {
  std::ostringstream out;
  if (report.refuted) {
    out << "right radius " << report.radius << " refuted: windows '"
        << report.counterexample->first.word.str() << "' and '"
        << report.counterexample->second.word.str()
        << "' share a right half but their schemes never merge within the radius\n";
    for (const Scheme& s : report.schemes) out << "  " << scheme_line(s) << "\n";
  } else {
    out << "right radius " << report.radius << " not refuted at half-width "
        << report.window_half_width << " (evidence, not proof)\n";
  }
  return out.str();
}

std::string certificate_json(const Certificate& cert) {
  json j;
  j["verdict"] = cert.verdict;
  if (cert.bound)
    j["bound"] = *cert.bound;
  else
    j["bound"] = nullptr;
  if (cert.sharp_above)
    j["sharp_above"] = *cert.sharp_above;
  else
    j["sharp_above"] = nullptr;
  j["rule"] = cert.rule;
  j["rank"] = cert.rank;
  j["weakly_primitive"] = cert.weakly_primitive;
  json premises = json::array();
  for (const Premise& p : cert.premises) {
    json row;
    row["name"] = p.name;
    row["outcome"] = p.outcome;
    row["evidence"] = p.evidence;
    row["conclusive"] = p.conclusive;
    premises.push_back(row);
  }
  j["premises"] = premises;
  j["caveats"] = cert.caveats;
  return finish(j);
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  if (cert.verdict == "bound") {
    out << "verdict: positively " << *cert.bound << "-expansive (rule " << cert.rule << ")\n";
    if (cert.sharp_above)
      out << "and not positively " << *cert.sharp_above << "-expansive\n";
  } else if (cert.verdict == "negative") {
    out << "verdict: not positively n-expansive for any n (rule " << cert.rule << ")\n";
  } else {
    out << "verdict: inconclusive\n";
  }
  out << "rank " << cert.rank << ", weakly primitive: "
      << (cert.weakly_primitive ? "yes" : "no") << "\n";
  out << "premises:\n";
  for (const Premise& p : cert.premises)
    out << "  " << p.name << " ["
        << (p.conclusive || p.outcome == "evidence" ? p.outcome : p.outcome + ", evidence")
        << "]: " << p.evidence << "\n";
  if (!cert.caveats.empty()) {
    out << "caveats:\n";
    for (const std::string& c : cert.caveats) out << "  " << c << "\n";
  }
  return out.str();
}

std::string sofic_report_json(const SoficPresentation& g, const SurvivorFamily& family,
                              const SoficProfile& profile, bool finite) {
  json j;
  json vertices = json::array();
  for (const std::string& v : family.graph.vertices()) vertices.push_back(v);
  j["determinized_vertices"] = vertices;
  j["input_vertices"] = static_cast<int>(g.vertices().size());
  j["deterministic_input"] = g.is_deterministic();
  j["finite_shift"] = finite;
  json members = json::array();
  for (const auto& member : family.members) {
    json names = json::array();
    for (int v : member) names.push_back(family.graph.vertices()[static_cast<size_t>(v)]);
    members.push_back(names);
  }
  j["survivor_sets"] = members;
  j["survivor_count"] = family.members.size();
  j["max_by_ell"] = profile.max_by_ell;
  j["capped"] = profile.capped;
  j["bounded_tail"] = profile.bounded_tail;
  return finish(j);
}

std::string sofic_report_text(const SoficPresentation& g, const SurvivorFamily& family,
                              const SoficProfile& profile, bool finite) {
  std::ostringstream out;
  out << "input graph: " << g.vertices().size() << " essential vertices, "
      << (g.is_deterministic() ? "deterministic" : "nondeterministic") << "\n";
  out << "determinized: " << family.graph.vertices().size() << " vertices\n";
  out << "finite shift: " << (finite ? "yes" : "no") << "\n";
  out << family.members.size() << " survivor set(s):\n";
  for (const auto& member : family.members) {
    out << "  {";
    for (size_t i = 0; i < member.size(); ++i)
      out << (i ? "," : "")
          << family.graph.vertices()[static_cast<size_t>(member[i])];
    out << "}\n";
  }
  out << "max predecessor count by length:";
  for (uint64_t c : profile.max_by_ell) out << " " << c;
  out << (profile.capped ? " (capped)" : "") << "\n";
  out << "top half constant: " << (profile.bounded_tail ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace expanse
