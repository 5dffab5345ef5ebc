/* expanse_cli.cpp -- command-line front end for the expanse library */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expanse/certify.hpp"
#include "expanse/corpus.hpp"
#include "expanse/directive.hpp"
#include "expanse/errors.hpp"
#include "expanse/language.hpp"
#include "expanse/parsing.hpp"
#include "expanse/predecessors.hpp"
#include "expanse/report.hpp"
#include "expanse/sofic.hpp"
#include "expanse/substitution.hpp"

namespace {

using namespace expanse;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string kind_of(const std::string& path, const std::string& kind_flag) {
  if (!kind_flag.empty()) return kind_flag;
  auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "sub") return "substitution";
  if (ext == "dir") return "directive";
  if (ext == "graph") return "graph";
  throw std::invalid_argument("cannot infer the input kind from '" + path +
                              "'; pass --kind {substitution,directive,graph}");
}

// Loads the input as a directive sequence, promoting a substitution file to
// the constant sequence.
DirectiveSequence load_directive(const std::string& path, const std::string& kind_flag) {
  std::string kind = kind_of(path, kind_flag);
  std::string text = read_file(path);
  if (kind == "substitution") return DirectiveSequence::constant(parse_substitution(text));
  if (kind == "directive") return parse_directive(text);
  throw std::invalid_argument("a substitution or directive input is required here");
}

Substitution load_substitution(const std::string& path, const std::string& kind_flag) {
  std::string kind = kind_of(path, kind_flag);
  if (kind != "substitution")
    throw std::invalid_argument("a substitution input is required here");
  return parse_substitution(read_file(path));
}

void emit(const std::string& text) { std::cout << text; }

std::vector<int> parse_index_list(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    std::string tok = csv.substr(start, comma - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad index '" + tok + "' in list '" + csv + "'");
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expanse: positive-expansiveness certificates and degree measurements for "
               "substitution and sofic shifts"};
  app.require_subcommand(1);

  std::string input, kind_flag, format = "text", window_str, id, out_dir, cycle_csv,
              transient_csv;
  int budget = 64, r_max = 8, list_up_to = 0, ell = 2, ell_max = 0, right = 0, origin = -1,
      probe_recog = -1, probe_radius = -1, probe_window = 0, m_max = 16, verify_level = -1,
      radius = 0, threads = 0, ar_rank = 0, max_schemes = 4096;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--input,-i", input, "input file")->required();
    sub->add_option("--kind", kind_flag, "input kind: substitution, directive, or graph");
    sub->add_option("--format,-f", format, "output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget-lang", budget, "largest window length the language may compute");
    sub->add_option("--threads", threads, "worker threads (0 = default)");
  };

  CLI::App* props = app.add_subcommand("props", "structural properties of the input");
  add_common(props, true);

  CLI::App* lang_cmd = app.add_subcommand("lang", "factor language, complexity, and entropy");
  add_common(lang_cmd, true);
  lang_cmd->add_option("--r-max", r_max, "largest window length to tabulate");
  lang_cmd->add_option("--list", list_up_to, "list the words of lengths up to this");

  CLI::App* parse_cmd =
      app.add_subcommand("parse", "desubstitution schemes and recognizability probes");
  add_common(parse_cmd, true);
  parse_cmd->add_option("--window", window_str, "window content to desubstitute");
  parse_cmd->add_option("--origin", origin, "position of the window's first letter, negated");
  parse_cmd->add_option("--max-schemes", max_schemes, "enumeration budget per window");
  parse_cmd->add_option("--probe-recog", probe_recog,
                        "probe quasi-recognizability at this half-width (0 = minimal)");
  parse_cmd->add_option("--probe-radius", probe_radius, "probe this right radius");
  parse_cmd->add_option("--probe-window", probe_window,
                        "half-width for the radius probe (0 = minimal)");

  CLI::App* pred = app.add_subcommand("pred", "predecessor counts over right windows");
  add_common(pred, true);
  pred->add_option("--ell", ell, "predecessor length");
  pred->add_option("--right", right, "right window length (0 = 2*ell)");
  pred->add_option("--ell-max", ell_max, "sweep lengths 1..ell-max instead of one table");
  pred->add_option("--verify-level", verify_level,
                   "check the standing bounds for the block at this level");
  pred->add_option("--radius", radius, "right radius for --verify-level");

  CLI::App* certify_cmd = app.add_subcommand("certify", "expansiveness certificate");
  add_common(certify_cmd, false);
  CLI::Option* certify_input = certify_cmd->add_option("--input,-i", input, "input file");
  certify_cmd->add_option("--arnoux-rauzy", ar_rank, "rank of an episturmian generator family")
      ->excludes(certify_input);
  certify_cmd->add_option("--cycle", cycle_csv, "comma-separated cycle of generator indices");
  certify_cmd->add_option("--transient", transient_csv,
                          "comma-separated transient generator indices");
  certify_cmd->add_option("--m-max", m_max, "depth of the periodic-cluster screen");
  certify_cmd->add_option("--probe-window", probe_window,
                          "half-width floor for recognizability probes");

  CLI::App* sofic_cmd = app.add_subcommand("sofic", "survivor sets and degrees of a graph shift");
  add_common(sofic_cmd, true);
  sofic_cmd->add_option("--ell-max", ell_max, "sweep predecessor lengths 1..ell-max");

  CLI::App* examples = app.add_subcommand("examples", "bundled example inputs");
  examples->add_option("--format,-f", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  examples->add_option("--id", id, "print this entry's content");
  examples->add_option("--out-dir", out_dir, "write every entry into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ExecPolicy policy;
  policy.threads = threads;
  bool json = format == "json";

  try {
    if (props->parsed()) {
      std::string kind = kind_of(input, kind_flag);
      if (format == "csv") throw std::invalid_argument("props has no csv form");
      if (kind == "substitution") {
        Substitution tau = load_substitution(input, kind_flag);
        emit(json ? substitution_props_json(tau) : substitution_props_text(tau));
      } else if (kind == "directive") {
        DirectiveSequence seq = parse_directive(read_file(input));
        emit(json ? directive_props_json(seq) : directive_props_text(seq));
      } else {
        throw std::invalid_argument("props reads substitution or directive inputs");
      }
    } else if (lang_cmd->parsed()) {
      if (format == "csv") throw std::invalid_argument("lang has no csv form");
      DirectiveSequence seq = load_directive(input, kind_flag);
      LanguageSource lang = directive_language(seq, budget);
      emit(json ? language_report_json(lang, r_max, list_up_to)
                : language_report_text(lang, r_max, list_up_to));
    } else if (parse_cmd->parsed()) {
      if (format == "csv") throw std::invalid_argument("parse has no csv form");
      Substitution tau = load_substitution(input, kind_flag);
      if (probe_recog >= 0) {
        LanguageSource lang = directive_language(DirectiveSequence::constant(tau), budget);
        int m = probe_recog > 0 ? probe_recog : 2 * tau.max_len();
        QuasiRecognizabilityReport report = probe_quasi_recognizability(tau, lang, m, policy);
        emit(json ? quasi_probe_json(report) : quasi_probe_text(report));
      } else if (probe_radius >= 0) {
        LanguageSource lang = directive_language(DirectiveSequence::constant(tau), budget);
        int m = probe_window > 0 ? probe_window : (probe_radius + 2) * tau.max_len();
        RadiusProbeReport report = probe_right_radius(tau, lang, probe_radius, m, policy);
        emit(json ? radius_probe_json(report) : radius_probe_text(report));
      } else {
        if (window_str.empty())
          throw std::invalid_argument(
              "parse needs --window/--origin, --probe-recog, or --probe-radius");
        Word w = Word::parse(tau.codomain(), window_str);
        Window window{w, origin >= 0 ? origin : w.size() / 2};
        std::vector<Scheme> schemes = enumerate_standard_schemes(tau, window, max_schemes);
        emit(json ? schemes_json(window, schemes) : schemes_text(window, schemes));
      }
    } else if (pred->parsed()) {
      DirectiveSequence seq = load_directive(input, kind_flag);
      if (verify_level >= 0) {
        if (format == "csv") throw std::invalid_argument("bound checks have no csv form");
        int right_len = right > 0 ? right : 2 * ell;
        PredecessorBoundCheck check =
            verify_predecessor_bounds(seq, verify_level, ell, radius, right_len, budget, policy);
        emit(json ? bound_check_json(check) : bound_check_text(check));
      } else if (ell_max > 0) {
        if (format == "csv") throw std::invalid_argument("profiles have no csv form");
        LanguageSource lang = directive_language(seq, budget);
        int right_len = right > 0 ? right : 2 * ell_max;
        DegreeProfile profile = degree_profile(lang, ell_max, right_len, policy);
        PersistenceReport persistence = persistent_witness(lang, ell_max, right_len, policy);
        emit(json ? degree_profile_json(profile, persistence)
                  : degree_profile_text(profile, persistence));
      } else {
        LanguageSource lang = directive_language(seq, budget);
        int right_len = right > 0 ? right : 2 * ell;
        PredecessorTable table = predecessor_table(lang, ell, right_len, policy);
        if (format == "csv")
          emit(predecessor_table_csv(table));
        else
          emit(json ? predecessor_table_json(table) : predecessor_table_text(table));
      }
    } else if (certify_cmd->parsed()) {
      if (format == "csv") throw std::invalid_argument("certificates have no csv form");
      CertifyOptions opt;
      opt.lang_budget = budget;
      opt.m_max = m_max;
      if (probe_window > 0) opt.probe_window = probe_window;
      opt.policy = policy;
      Certificate cert;
      if (ar_rank > 0) {
        cert = certify_arnoux_rauzy(ar_rank, parse_index_list(transient_csv),
                                    parse_index_list(cycle_csv), opt);
      } else {
        if (input.empty())
          throw std::invalid_argument("certify needs --input or --arnoux-rauzy");
        cert = certify(load_directive(input, kind_flag), opt);
      }
      emit(json ? certificate_json(cert) : certificate_text(cert));
    } else if (sofic_cmd->parsed()) {
      if (format == "csv") throw std::invalid_argument("sofic reports have no csv form");
      if (kind_of(input, kind_flag) != "graph")
        throw std::invalid_argument("sofic reads graph inputs");
      SoficPresentation g = parse_graph(read_file(input));
      SurvivorFamily family = predecessor_set_family(g);
      SoficProfile profile = sofic_degree_profile(g, ell_max > 0 ? ell_max : 8);
      bool finite = is_finite_shift(g);
      emit(json ? sofic_report_json(g, family, profile, finite)
                : sofic_report_text(g, family, profile, finite));
    } else if (examples->parsed()) {
      if (!id.empty()) {
        emit(corpus_entry(id).content);
      } else if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const CorpusEntry& e : corpus()) {
          std::ofstream out(std::filesystem::path(out_dir) / e.filename, std::ios::binary);
          out << e.content;
        }
        std::cout << "wrote " << corpus().size() << " files to " << out_dir << "\n";
      } else if (json) {
        nlohmann::json doc;
        nlohmann::json entries_json = nlohmann::json::array();
        for (const CorpusEntry& e : corpus()) {
          nlohmann::json row;
          row["id"] = e.id;
          row["kind"] = e.kind;
          row["file"] = e.filename;
          row["description"] = e.description;
          entries_json.push_back(row);
        }
        doc["entries"] = entries_json;
        doc["schema"] = 1;
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const CorpusEntry& e : corpus())
          std::cout << e.id << " (" << e.kind << "): " << e.description << "\n";
      }
    }
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
