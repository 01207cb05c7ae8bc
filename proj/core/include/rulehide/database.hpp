#pragma once

#include <vector>

#include "rulehide/itemset.hpp"

namespace rulehide {

using Tid = int;

/// One database row: a positive transaction identifier and its items.
struct Transaction {
    Tid tid = 0;
    Itemset items;

    bool operator==(const Transaction&) const = default;
};

/// An ordered list of transactions plus the derived item alphabet.
/// Databases are immutable values; sanitization builds new ones.
class TransactionDB {
public:
    TransactionDB() = default;

    /// Validates: tids positive and unique, no empty transaction.
    explicit TransactionDB(std::vector<Transaction> transactions);

    bool empty() const { return transactions_.empty(); }
    int size() const { return static_cast<int>(transactions_.size()); }
    const std::vector<Transaction>& transactions() const { return transactions_; }

    /// Union of all transaction itemsets.
    const Itemset& alphabet() const { return alphabet_; }

    bool has_tid(Tid tid) const;
    const Transaction& by_tid(Tid tid) const;

    /// Number of transactions t with s ⊆ t.items; N for the empty set.
    int support_count(const Itemset& s) const;

    /// Total item occurrences over all transactions.
    int item_occurrences() const;

    bool operator==(const TransactionDB&) const = default;

private:
    std::vector<Transaction> transactions_;
    Itemset alphabet_;
};

}  // namespace rulehide
