#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rulehide/miner.hpp"

// Enumeration oracle, deliberately independent of the Apriori path: rules
// come from walking every disjoint antecedent/consequent pair over the
// alphabet, and counts come from its own bitmask subset checks.
namespace oracle {

struct MaskedDb {
    std::vector<rulehide::Item> alphabet;
    std::vector<std::uint32_t> rows;
};

inline MaskedDb mask_db(const rulehide::TransactionDB& db) {
    MaskedDb masked;
    masked.alphabet = db.alphabet().items();
    if (masked.alphabet.size() > 16)
        throw std::logic_error("oracle limited to 16 items");
    for (const rulehide::Transaction& t : db.transactions()) {
        std::uint32_t row = 0;
        for (std::size_t i = 0; i < masked.alphabet.size(); ++i) {
            if (t.items.contains(masked.alphabet[i])) row |= 1u << i;
        }
        masked.rows.push_back(row);
    }
    return masked;
}

inline int count_mask(const MaskedDb& db, std::uint32_t subset) {
    int count = 0;
    for (std::uint32_t row : db.rows) {
        if ((row & subset) == subset) ++count;
    }
    return count;
}

inline rulehide::Itemset itemset_of(const MaskedDb& db, std::uint32_t mask) {
    std::vector<rulehide::Item> items;
    for (std::size_t i = 0; i < db.alphabet.size(); ++i) {
        if (mask & (1u << i)) items.push_back(db.alphabet[i]);
    }
    return rulehide::Itemset(std::move(items));
}

/// Every strong rule, by direct enumeration of disjoint (X, Y) mask pairs.
inline rulehide::RuleSet enumerate_strong_rules(const rulehide::TransactionDB& db,
                                                const rulehide::Thresholds& th) {
    MaskedDb masked = mask_db(db);
    const std::uint32_t universe = (1u << masked.alphabet.size()) - 1;
    const int n = db.size();

    rulehide::RuleSet rules;
    for (std::uint32_t lhs = 1; lhs <= universe; ++lhs) {
        int lhs_count = count_mask(masked, lhs);
        if (lhs_count == 0) continue;
        for (std::uint32_t rhs = 1; rhs <= universe; ++rhs) {
            if (lhs & rhs) continue;
            int joint_count = count_mask(masked, lhs | rhs);
            rulehide::RuleStats stats{rulehide::Rational(joint_count, n),
                                      rulehide::Rational(joint_count, lhs_count),
                                      joint_count};
            if (rulehide::is_strong(stats, th))
                rules.insert(rulehide::Rule(itemset_of(masked, lhs), itemset_of(masked, rhs)),
                             stats);
        }
    }
    return rules;
}

}  // namespace oracle
