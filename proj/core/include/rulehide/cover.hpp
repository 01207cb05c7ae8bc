#pragma once

#include <vector>

#include "rulehide/miner.hpp"

namespace rulehide {

/// The cover of a base rule X => Y: every rule X∪Z => V with Z,V ⊆ Y,
/// Z ∩ V = ∅ and V ≠ ∅. Contains the base itself and has exactly
/// 3^m − 2^m members for m = |Y|.
struct Cover {
    Rule base;
    std::vector<Rule> members;  // canonical order

    bool operator==(const Cover&) const = default;
};

Cover cover(const Rule& base);

/// inner ∈ cover(outer), decided without materializing the cover.
bool covers(const Rule& outer, const Rule& inner);

/// The representative rules of ar: members covered by no other member.
RuleSet representative_set(const RuleSet& ar);

/// One hiding-agenda entry: a sensitive item, a group antecedent, and the
/// union of the group's consequents.
struct HidingTarget {
    Item sensitive;
    Itemset antecedent;
    Itemset joined_consequent;
    Itemset full_itemset;  // antecedent ∪ joined_consequent

    /// Builds a target, deriving full_itemset and checking that the
    /// sensitive item appears on exactly one side.
    static HidingTarget of(Item sensitive, Itemset antecedent, Itemset joined_consequent);

    bool operator==(const HidingTarget&) const = default;
};

/// Groups the sensitive rules by antecedent and joins each group's
/// consequents into one target. Output is sorted by descending
/// |full_itemset|, ties by canonical antecedent order; the {h}-antecedent
/// group, when present, therefore leads its size class.
std::vector<HidingTarget> join_targets(const RuleSet& sensitive_rules, const Item& h);

}  // namespace rulehide
