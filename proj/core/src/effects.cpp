#include "rulehide/effects.hpp"

#include <algorithm>
#include <string>

#include "rulehide/errors.hpp"

namespace rulehide {

SideEffectReport analyze(const TransactionDB& before, const TransactionDB& after,
                         const Thresholds& th, const std::vector<Item>& sensitive) {
    if (before.size() != after.size())
        throw ShapeMismatchError("transaction counts differ: " +
                                 std::to_string(before.size()) + " vs " +
                                 std::to_string(after.size()));
    for (int i = 0; i < before.size(); ++i) {
        Tid b = before.transactions()[i].tid;
        Tid a = after.transactions()[i].tid;
        if (b != a)
            throw ShapeMismatchError("tids differ at position " + std::to_string(i + 1) +
                                     ": " + std::to_string(b) + " vs " + std::to_string(a));
    }

    SideEffectReport report;
    RuleSet strong_before = strong_rules(before, th, report.scans);
    RuleSet strong_after = strong_rules(after, th, report.scans);

    auto is_sensitive = [&](const Rule& rule) {
        return std::any_of(sensitive.begin(), sensitive.end(),
                           [&](const Item& h) { return rule.mentions(h); });
    };

    for (const auto& entry : strong_before) {
        bool survived = strong_after.contains(entry.rule);
        if (is_sensitive(entry.rule)) {
            if (survived)
                report.surviving_sensitive.insert(entry.rule,
                                                  *strong_after.stats_for(entry.rule));
            else
                report.hidden_sensitive.insert(entry.rule, entry.stats);
        } else if (!survived) {
            report.lost_rules.insert(entry.rule, entry.stats);
        }
    }
    for (const auto& entry : strong_after) {
        if (!strong_before.contains(entry.rule))
            report.ghost_rules.insert(entry.rule, entry.stats);
    }

    for (int i = 0; i < before.size(); ++i) {
        if (!(before.transactions()[i].items == after.transactions()[i].items))
            ++report.transactions_modified;
    }

    report.support_invariant_ok = true;
    for (const Item& h : sensitive) {
        if (before.support_count(Itemset{h}) != after.support_count(Itemset{h})) {
            report.support_invariant_ok = false;
            break;
        }
    }
    return report;
}

SideEffectReport analyze(const TransactionDB& before, const SanitizationResult& result,
                         const Thresholds& th, const std::vector<Item>& sensitive) {
    SideEffectReport report = analyze(before, result.transformed, th, sensitive);
    report.moves_applied = static_cast<int>(result.moves.size());
    report.scans.merge(result.scans);
    return report;
}

std::map<Item, int> support_profile(const TransactionDB& db,
                                    const std::vector<Item>& items) {
    std::map<Item, int> profile;
    for (const Item& item : items)
        profile.emplace(item, db.support_count(Itemset{item}));
    return profile;
}

}  // namespace rulehide
