#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "rulehide/basket_io.hpp"
#include "rulehide/rule.hpp"

namespace fixtures {

// Six baskets over {A,B,C}. At 33%/70% this database yields exactly nine
// strong rules; hiding C or B takes exactly one relocation each.
inline constexpr std::string_view kDbSmall = "A B C\nA B C\nA B C\nA B\nA\nA C\n";

// kDbSmall after hiding C (C moved T1 -> T5) and after hiding B (B moved
// T1 -> T5). Expected outputs, cross-checked with the enumeration oracle.
inline constexpr std::string_view kDbSmallHiddenC = "A B\nA B C\nA B C\nA B\nA C\nA C\n";
inline constexpr std::string_view kDbSmallHiddenB = "A C\nA B C\nA B C\nA B\nA B\nA C\n";

// Six baskets over {A,B,C,D,E} with eight strong rules at 33%/70%.
inline constexpr std::string_view kDbMixed = "A B C\nA B C D\nB C E\nA C D E\nD E\nA B\n";

// kDbMixed after hiding C (moved T2 -> T5) and after hiding B (moved T2 -> T5).
inline constexpr std::string_view kDbMixedHiddenC = "A B C\nA B D\nB C E\nA C D E\nC D E\nA B\n";
inline constexpr std::string_view kDbMixedHiddenB = "A B C\nA C D\nB C E\nA C D E\nB D E\nA B\n";

inline rulehide::TransactionDB db(std::string_view text) {
    return rulehide::parse_database(text);
}

inline rulehide::Item item(const char* name) { return rulehide::Item(name); }

inline rulehide::Itemset iset(std::initializer_list<const char*> names) {
    std::vector<rulehide::Item> items;
    for (const char* name : names) items.emplace_back(name);
    return rulehide::Itemset(std::move(items));
}

inline rulehide::Rule rule(const char* text) { return rulehide::parse_rule(text); }

inline rulehide::Thresholds thresholds(const char* supp, const char* conf) {
    return rulehide::Thresholds(rulehide::Rational::parse(supp),
                                rulehide::Rational::parse(conf));
}

/// 33% / 70%, the setting every frozen fixture below was derived at.
inline rulehide::Thresholds default_thresholds() { return thresholds("33%", "70%"); }

/// Random database over at most `max_items` single-letter items and at most
/// `max_transactions` rows, never empty and with no empty transaction.
inline rulehide::TransactionDB random_db(std::mt19937& rng, int max_items = 8,
                                         int max_transactions = 12) {
    static const char* kNames[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
    std::uniform_int_distribution<int> item_count(1, max_items);
    std::uniform_int_distribution<int> tx_count(1, max_transactions);
    std::bernoulli_distribution pick(0.45);

    int n_items = item_count(rng);
    int n_tx = tx_count(rng);
    std::vector<rulehide::Transaction> transactions;
    for (int t = 1; t <= n_tx; ++t) {
        std::vector<rulehide::Item> chosen;
        for (int i = 0; i < n_items; ++i) {
            if (pick(rng)) chosen.emplace_back(kNames[i]);
        }
        if (chosen.empty()) {
            std::uniform_int_distribution<int> any(0, n_items - 1);
            chosen.emplace_back(kNames[any(rng)]);
        }
        transactions.push_back({t, rulehide::Itemset(std::move(chosen))});
    }
    return rulehide::TransactionDB(std::move(transactions));
}

/// Thresholds drawn from {1/4, 1/3, 1/2} x {1/2, 7/10, 9/10}.
inline rulehide::Thresholds random_thresholds(std::mt19937& rng) {
    static const rulehide::Rational kSupport[] = {{1, 4}, {1, 3}, {1, 2}};
    static const rulehide::Rational kConfidence[] = {{1, 2}, {7, 10}, {9, 10}};
    std::uniform_int_distribution<int> three(0, 2);
    return rulehide::Thresholds(kSupport[three(rng)], kConfidence[three(rng)]);
}

}  // namespace fixtures
