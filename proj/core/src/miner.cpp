#include "rulehide/miner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "rulehide/errors.hpp"

namespace rulehide {

void ScanCounter::record(const std::string& phase) {
    ++by_phase_[phase];
    ++total_;
}

void ScanCounter::merge(const ScanCounter& other) {
    for (const auto& [phase, passes] : other.by_phase_) by_phase_[phase] += passes;
    total_ += other.total_;
}

int FrequentSet::count_of(const Itemset& s) const {
    auto it = entries.find(s);
    if (it == entries.end())
        throw PreconditionError("itemset {" + s.joined(",") + "} is not frequent");
    return it->second;
}

void RuleSet::insert(Rule rule, RuleStats stats) {
    Entry entry{std::move(rule), stats};
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), entry,
                                [](const Entry& a, const Entry& b) { return a.rule < b.rule; });
    if (pos != entries_.end() && pos->rule == entry.rule)
        throw PreconditionError("duplicate rule " + entry.rule.to_string());
    entries_.insert(pos, std::move(entry));
}

bool RuleSet::contains(const Rule& rule) const {
    return stats_for(rule) != nullptr;
}

const RuleStats* RuleSet::stats_for(const Rule& rule) const {
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), rule,
                                [](const Entry& a, const Rule& b) { return a.rule < b; });
    if (pos != entries_.end() && pos->rule == rule) return &pos->stats;
    return nullptr;
}

namespace {

bool meets_support(int count, int n, const Rational& min_supp) {
    return Rational(count, n) >= min_supp;
}

/// Classic join step: merge two k-1 itemsets sharing their first k-2 items.
std::vector<Itemset> join_candidates(const std::vector<Itemset>& level) {
    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < level.size(); ++i) {
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            const auto& a = level[i].items();
            const auto& b = level[j].items();
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) continue;
            candidates.push_back(level[i].union_with(level[j]));
        }
    }
    return candidates;
}

/// Prune step: keep candidates whose every (k-1)-subset is frequent.
std::vector<Itemset> prune_candidates(std::vector<Itemset> candidates,
                                      const std::set<Itemset>& previous) {
    std::vector<Itemset> kept;
    for (Itemset& candidate : candidates) {
        bool closed = true;
        for (const Item& item : candidate) {
            if (!previous.count(candidate.without(item))) {
                closed = false;
                break;
            }
        }
        if (closed) kept.push_back(std::move(candidate));
    }
    return kept;
}

}  // namespace

FrequentSet frequent_itemsets(const TransactionDB& db, const Thresholds& th,
                              ScanCounter& counter) {
    if (db.empty()) throw EmptyDatabaseError();

    FrequentSet fs{{}, db.size(), th.min_supp};

    // Level 1: one pass counting every alphabet item.
    counter.record("apriori-L1");
    std::map<Item, int> singles;
    for (const Transaction& t : db.transactions()) {
        for (const Item& item : t.items) ++singles[item];
    }
    std::vector<Itemset> level;
    for (const auto& [item, count] : singles) {
        if (meets_support(count, fs.n, th.min_supp)) {
            Itemset s{item};
            fs.entries.emplace(s, count);
            level.push_back(std::move(s));
        }
    }

    for (int k = 2; !level.empty(); ++k) {
        std::set<Itemset> previous(level.begin(), level.end());
        std::vector<Itemset> candidates =
            prune_candidates(join_candidates(level), previous);
        if (candidates.empty()) break;

        counter.record("apriori-L" + std::to_string(k));
        std::vector<int> counts(candidates.size(), 0);
        for (const Transaction& t : db.transactions()) {
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (t.items.contains_all(candidates[c])) ++counts[c];
            }
        }

        level.clear();
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (meets_support(counts[c], fs.n, th.min_supp)) {
                fs.entries.emplace(candidates[c], counts[c]);
                level.push_back(std::move(candidates[c]));
            }
        }
    }
    return fs;
}

FrequentSet brute_force_frequent(const TransactionDB& db, const Thresholds& th) {
    constexpr std::size_t kLimit = 20;
    const auto& alphabet = db.alphabet().items();
    if (alphabet.size() > kLimit)
        throw AlphabetTooLargeError(alphabet.size(), kLimit);

    FrequentSet fs{{}, db.size(), th.min_supp};
    if (db.empty()) return fs;

    // Transactions as bitmasks over the alphabet, subsets as mask walks.
    std::vector<std::uint32_t> masks;
    masks.reserve(db.transactions().size());
    for (const Transaction& t : db.transactions()) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (t.items.contains(alphabet[i])) mask |= 1u << i;
        }
        masks.push_back(mask);
    }

    for (std::uint32_t subset = 1; subset < (1u << alphabet.size()); ++subset) {
        int count = 0;
        for (std::uint32_t mask : masks) {
            if ((mask & subset) == subset) ++count;
        }
        if (!meets_support(count, fs.n, th.min_supp)) continue;
        std::vector<Item> items;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (subset & (1u << i)) items.push_back(alphabet[i]);
        }
        fs.entries.emplace(Itemset(std::move(items)), count);
    }
    return fs;
}

RuleSet generate_rules(const FrequentSet& fs, const TransactionDB& db,
                       const Thresholds& th) {
    RuleSet rules;
    for (const auto& [itemset, count] : fs.entries) {
        if (itemset.size() < 2) continue;
        if (itemset.size() > 30)
            throw PreconditionError("frequent itemset too large to partition: " +
                                    std::to_string(itemset.size()) + " items");
        const auto& members = itemset.items();
        // Every non-empty proper subset as antecedent.
        for (std::uint32_t mask = 1; mask + 1 < (1u << members.size()); ++mask) {
            std::vector<Item> lhs, rhs;
            for (std::size_t i = 0; i < members.size(); ++i) {
                (mask & (1u << i) ? lhs : rhs).push_back(members[i]);
            }
            Itemset antecedent{std::move(lhs)};
            int antecedent_count = fs.count_of(antecedent);
            if (antecedent_count == 0) continue;  // confidence undefined
            RuleStats stats{Rational(count, db.size()),
                            Rational(count, antecedent_count), count};
            if (is_strong(stats, th))
                rules.insert(Rule(std::move(antecedent), Itemset{std::move(rhs)}), stats);
        }
    }
    return rules;
}

RuleSet strong_rules(const TransactionDB& db, const Thresholds& th) {
    ScanCounter scratch;
    return strong_rules(db, th, scratch);
}

RuleSet strong_rules(const TransactionDB& db, const Thresholds& th,
                     ScanCounter& counter) {
    return generate_rules(frequent_itemsets(db, th, counter), db, th);
}

}  // namespace rulehide
