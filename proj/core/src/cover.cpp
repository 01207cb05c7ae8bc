#include "rulehide/cover.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "rulehide/errors.hpp"

namespace rulehide {

Cover cover(const Rule& base) {
    const auto& consequent = base.consequent().items();
    if (consequent.size() > 12)
        throw PreconditionError("cover of a " + std::to_string(consequent.size()) +
                                "-item consequent is too large to materialize");
    std::vector<Rule> members;

    // Each consequent item lands in Z (moved left), in V (kept right), or is
    // dropped; every assignment with V ≠ ∅ is a member.
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < consequent.size(); ++i) combos *= 3;
    for (std::uint64_t assignment = 0; assignment < combos; ++assignment) {
        std::vector<Item> moved, kept;
        std::uint64_t rest = assignment;
        for (const Item& item : consequent) {
            switch (rest % 3) {
                case 0: break;  // dropped
                case 1: moved.push_back(item); break;
                case 2: kept.push_back(item); break;
            }
            rest /= 3;
        }
        if (kept.empty()) continue;
        members.emplace_back(base.antecedent().union_with(Itemset(std::move(moved))),
                             Itemset(std::move(kept)));
    }
    std::sort(members.begin(), members.end());
    return Cover{base, std::move(members)};
}

bool covers(const Rule& outer, const Rule& inner) {
    return inner.antecedent().contains_all(outer.antecedent()) &&
           outer.consequent().contains_all(inner.consequent()) &&
           outer.full_itemset().contains_all(inner.full_itemset());
}

RuleSet representative_set(const RuleSet& ar) {
    RuleSet representatives;
    for (const auto& candidate : ar) {
        bool covered = false;
        for (const auto& other : ar) {
            if (other.rule == candidate.rule) continue;
            if (covers(other.rule, candidate.rule)) {
                covered = true;
                break;
            }
        }
        if (!covered) representatives.insert(candidate.rule, candidate.stats);
    }
    return representatives;
}

HidingTarget HidingTarget::of(Item sensitive, Itemset antecedent,
                              Itemset joined_consequent) {
    if (!antecedent.disjoint_with(joined_consequent))
        throw PreconditionError("hiding target sides overlap");
    bool left = antecedent.contains(sensitive);
    bool right = joined_consequent.contains(sensitive);
    if (left == right)
        throw PreconditionError("sensitive item '" + sensitive.name() +
                                "' must appear on exactly one side of a hiding target");
    Itemset full = antecedent.union_with(joined_consequent);
    return HidingTarget{std::move(sensitive), std::move(antecedent),
                        std::move(joined_consequent), std::move(full)};
}

std::vector<HidingTarget> join_targets(const RuleSet& sensitive_rules, const Item& h) {
    std::map<Itemset, Itemset> joined;  // antecedent -> union of consequents
    for (const auto& entry : sensitive_rules) {
        if (!entry.rule.mentions(h))
            throw PreconditionError("rule " + entry.rule.to_string() +
                                    " does not contain the sensitive item '" +
                                    h.name() + "'");
        Itemset& group = joined[entry.rule.antecedent()];
        group = group.union_with(entry.rule.consequent());
    }

    std::vector<HidingTarget> targets;
    targets.reserve(joined.size());
    for (const auto& [antecedent, consequent] : joined)
        targets.push_back(HidingTarget::of(h, antecedent, consequent));

    // Biggest itemsets first; equally sized targets keep canonical
    // antecedent order, which puts the {h}-antecedent group ahead of any
    // larger antecedent of the same class.
    std::stable_sort(targets.begin(), targets.end(),
                     [](const HidingTarget& a, const HidingTarget& b) {
                         if (a.full_itemset.size() != b.full_itemset.size())
                             return a.full_itemset.size() > b.full_itemset.size();
                         return a.antecedent < b.antecedent;
                     });
    return targets;
}

}  // namespace rulehide
