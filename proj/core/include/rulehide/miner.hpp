#pragma once

#include <map>
#include <string>
#include <vector>

#include "rulehide/rule.hpp"

namespace rulehide {

/// Counts full passes over the transaction list, keyed by phase label.
class ScanCounter {
public:
    void record(const std::string& phase);
    void merge(const ScanCounter& other);

    int total() const { return total_; }
    const std::map<std::string, int>& by_phase() const { return by_phase_; }

private:
    std::map<std::string, int> by_phase_;
    int total_ = 0;
};

/// Every large itemset of one database at one support threshold, with its
/// occurrence count. Downward closed: every non-empty subset of an entry is
/// an entry.
struct FrequentSet {
    std::map<Itemset, int> entries;
    int n = 0;  // database size the counts refer to
    Rational min_supp;

    bool contains(const Itemset& s) const { return entries.count(s) != 0; }
    /// Count of a known-frequent itemset; throws if s is not an entry.
    int count_of(const Itemset& s) const;

    bool operator==(const FrequentSet&) const = default;
};

/// Strong rules with their statistics, canonically ordered (antecedent,
/// then consequent, shortlex) with no duplicate rule.
class RuleSet {
public:
    struct Entry {
        Rule rule;
        RuleStats stats;

        bool operator==(const Entry&) const = default;
    };

    RuleSet() = default;

    void insert(Rule rule, RuleStats stats);
    bool contains(const Rule& rule) const;
    const RuleStats* stats_for(const Rule& rule) const;

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const RuleSet&) const = default;

private:
    std::vector<Entry> entries_;  // kept in canonical order
};

/// Level-wise Apriori. One counter increment per level actually counted.
/// Throws EmptyDatabaseError on an empty database.
FrequentSet frequent_itemsets(const TransactionDB& db, const Thresholds& th,
                              ScanCounter& counter);

/// Exhaustive oracle: enumerates every non-empty subset of the alphabet and
/// counts it directly. Refuses alphabets above 20 items.
FrequentSet brute_force_frequent(const TransactionDB& db, const Thresholds& th);

/// All strong rules X => Z∖X over frequent itemsets Z with |Z| ≥ 2.
/// Statistics come from the frequent-set counts, no further scans.
RuleSet generate_rules(const FrequentSet& fs, const TransactionDB& db,
                       const Thresholds& th);

/// frequent_itemsets + generate_rules.
RuleSet strong_rules(const TransactionDB& db, const Thresholds& th);
RuleSet strong_rules(const TransactionDB& db, const Thresholds& th, ScanCounter& counter);

}  // namespace rulehide
