#include "report.hpp"

#include <sstream>

namespace rulehide::cli {

std::string rule_line(const RuleSet::Entry& entry) {
    return entry.rule.to_string() + " (" + entry.stats.support.percent() + "%, " +
           entry.stats.confidence.percent() + "%)";
}

namespace {

Json itemset_json(const Itemset& items) {
    Json out = Json::array();
    for (const Item& item : items) out.push_back(item.name());
    return out;
}

}  // namespace

Json rule_json(const Rule& rule) {
    Json out;
    out["antecedent"] = itemset_json(rule.antecedent());
    out["consequent"] = itemset_json(rule.consequent());
    return out;
}

Json rule_entry_json(const RuleSet::Entry& entry) {
    Json out = rule_json(entry.rule);
    out["support"] = entry.stats.support.to_string();
    out["confidence"] = entry.stats.confidence.to_string();
    return out;
}

Json rules_json(const RuleSet& rules) {
    Json out = Json::array();
    for (const auto& entry : rules) out.push_back(rule_entry_json(entry));
    return out;
}

Json scans_json(const ScanCounter& scans) {
    Json phases;
    for (const auto& [phase, passes] : scans.by_phase()) phases[phase] = passes;
    Json out;
    out["total"] = scans.total();
    out["by_phase"] = phases;
    return out;
}

Json mine_report_json(const RuleSet& rules, int n) {
    Json out;
    out["rules"] = rules_json(rules);
    out["n"] = n;
    return out;
}

Json effects_json(const SideEffectReport& report) {
    Json out;
    out["hidden_sensitive"] = rules_json(report.hidden_sensitive);
    out["surviving_sensitive"] = rules_json(report.surviving_sensitive);
    out["lost_rules"] = rules_json(report.lost_rules);
    out["ghost_rules"] = rules_json(report.ghost_rules);
    out["support_invariant_ok"] = report.support_invariant_ok;
    out["rules_pruned"] = report.rules_pruned();
    out["transactions_modified"] = report.transactions_modified;
    return out;
}

namespace {

void list_rules(std::ostringstream& out, const std::string& label, const RuleSet& rules) {
    out << label << " (" << rules.size() << "):\n";
    for (const auto& entry : rules) out << "  " << rule_line(entry) << "\n";
}

}  // namespace

std::string effects_text(const SideEffectReport& report) {
    std::ostringstream out;
    out << "rules pruned: " << report.rules_pruned() << "\n";
    list_rules(out, "hidden sensitive rules", report.hidden_sensitive);
    list_rules(out, "surviving sensitive rules", report.surviving_sensitive);
    list_rules(out, "lost rules", report.lost_rules);
    list_rules(out, "ghost rules", report.ghost_rules);
    out << "support invariant: " << (report.support_invariant_ok ? "ok" : "VIOLATED") << "\n";
    out << "transactions modified: " << report.transactions_modified << "\n";
    return out.str();
}

Json hide_report_json(const TransactionDB& before, const SanitizationResult& result,
                      const SideEffectReport& effects,
                      const std::vector<Item>& sensitive) {
    Json out;
    out["n"] = before.size();
    Json names = Json::array();
    for (const Item& h : sensitive) names.push_back(h.name());
    out["sensitive"] = names;

    Json moves = Json::array();
    for (const Move& move : result.moves) {
        Json m;
        m["item"] = move.sensitive.name();
        m["donor"] = move.donor_tid;
        m["recipient"] = move.recipient_tid;
        Json target;
        target["antecedent"] = itemset_json(move.target.antecedent);
        target["consequent"] = itemset_json(move.target.joined_consequent);
        m["target"] = target;
        m["confidence_before"] = move.conf_before.to_string();
        m["confidence_after"] = move.conf_after.to_string();
        moves.push_back(m);
    }
    out["moves"] = moves;

    Json dropped = Json::array();
    for (const Item& item : result.dropped_items) dropped.push_back(item.name());
    out["dropped_items"] = dropped;
    out["unhidden"] = rules_json(result.unhidden);

    Json support;
    auto profile_before = support_profile(before, sensitive);
    auto profile_after = support_profile(result.transformed, sensitive);
    for (const Item& h : sensitive) {
        Json per_item;
        per_item["before"] = profile_before.at(h);
        per_item["after"] = profile_after.at(h);
        support[h.name()] = per_item;
    }
    out["support"] = support;

    out["side_effects"] = effects_json(effects);
    out["scans"] = scans_json(result.scans);
    out["all_hidden"] = result.unhidden.empty();
    return out;
}

std::string hide_report_text(const TransactionDB& before, const SanitizationResult& result,
                             const SideEffectReport& effects,
                             const std::vector<Item>& sensitive) {
    std::ostringstream out;
    out << "moves applied: " << result.moves.size() << "\n";
    for (const Move& move : result.moves) {
        out << "  " << move.sensitive.name() << ": T" << move.donor_tid << " -> T"
            << move.recipient_tid << "  (target " << move.target.antecedent.joined(",")
            << " => " << move.target.joined_consequent.joined(",") << ", confidence "
            << move.conf_before.to_string() << " -> " << move.conf_after.to_string()
            << ")\n";
    }

    out << "dropped items:";
    if (result.dropped_items.empty()) {
        out << " (none)\n";
    } else {
        for (const Item& item : result.dropped_items) out << " " << item.name();
        out << "\n";
    }

    list_rules(out, "unhidden sensitive rules", result.unhidden);

    out << "support profile:\n";
    auto profile_before = support_profile(before, sensitive);
    auto profile_after = support_profile(result.transformed, sensitive);
    for (const Item& h : sensitive) {
        out << "  " << h.name() << ": before " << profile_before.at(h) << ", after "
            << profile_after.at(h) << "\n";
    }

    out << "side effects:\n";
    std::istringstream effect_lines(effects_text(effects));
    std::string line;
    while (std::getline(effect_lines, line)) out << "  " << line << "\n";
    out << "scans: " << result.scans.total() << "\n";
    return out.str();
}

}  // namespace rulehide::cli
