/* report.hpp -- JSON, CSV, and plain-text renderings of analysis results */

#ifndef EXPANSE_REPORT_HPP
#define EXPANSE_REPORT_HPP

#include <string>
#include <vector>

#include "expanse/certify.hpp"
#include "expanse/directive.hpp"
#include "expanse/language.hpp"
#include "expanse/parsing.hpp"
#include "expanse/predecessors.hpp"
#include "expanse/sofic.hpp"
#include "expanse/substitution.hpp"

namespace expanse {

// Every JSON document carries "schema": 1 and prints with two-space
// indentation and alphabetically ordered keys, so equal inputs render
// byte-identically.

std::string substitution_props_json(const Substitution& tau);
std::string substitution_props_text(const Substitution& tau);

std::string directive_props_json(const DirectiveSequence& seq);
std::string directive_props_text(const DirectiveSequence& seq);

// Complexity table with entropy estimates; words of length <= list_up_to are
// listed explicitly.
std::string language_report_json(const LanguageSource& lang, int r_max, int list_up_to);
std::string language_report_text(const LanguageSource& lang, int r_max, int list_up_to);

std::string predecessor_table_json(const PredecessorTable& table);
std::string predecessor_table_csv(const PredecessorTable& table);
std::string predecessor_table_text(const PredecessorTable& table);

std::string degree_profile_json(const DegreeProfile& profile, const PersistenceReport& persistence);
std::string degree_profile_text(const DegreeProfile& profile, const PersistenceReport& persistence);

std::string bound_check_json(const PredecessorBoundCheck& check);
std::string bound_check_text(const PredecessorBoundCheck& check);

std::string schemes_json(const Window& window, const std::vector<Scheme>& schemes);
std::string schemes_text(const Window& window, const std::vector<Scheme>& schemes);

std::string quasi_probe_json(const QuasiRecognizabilityReport& report);
std::string quasi_probe_text(const QuasiRecognizabilityReport& report);

std::string radius_probe_json(const RadiusProbeReport& report);
std::string radius_probe_text(const RadiusProbeReport& report);

std::string certificate_json(const Certificate& cert);
std::string certificate_text(const Certificate& cert);

std::string sofic_report_json(const SoficPresentation& g, const SurvivorFamily& family,
                              const SoficProfile& profile, bool finite);
std::string sofic_report_text(const SoficPresentation& g, const SurvivorFamily& family,
                              const SoficProfile& profile, bool finite);

}  // namespace expanse

#endif  // EXPANSE_REPORT_HPP
