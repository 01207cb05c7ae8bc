#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rulehide/effects.hpp"

namespace rulehide::cli {

using Json = nlohmann::ordered_json;

/// "A,B => C (50.000%, 75.000%)"
std::string rule_line(const RuleSet::Entry& entry);

Json rule_json(const Rule& rule);
Json rule_entry_json(const RuleSet::Entry& entry);
Json rules_json(const RuleSet& rules);
Json scans_json(const ScanCounter& scans);

Json mine_report_json(const RuleSet& rules, int n);

Json effects_json(const SideEffectReport& report);
std::string effects_text(const SideEffectReport& report);

Json hide_report_json(const TransactionDB& before, const SanitizationResult& result,
                      const SideEffectReport& effects, const std::vector<Item>& sensitive);
std::string hide_report_text(const TransactionDB& before, const SanitizationResult& result,
                             const SideEffectReport& effects,
                             const std::vector<Item>& sensitive);

}  // namespace rulehide::cli
