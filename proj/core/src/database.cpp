#include "rulehide/database.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rulehide/errors.hpp"

namespace rulehide {

TransactionDB::TransactionDB(std::vector<Transaction> transactions)
    : transactions_(std::move(transactions)) {
    std::set<Tid> seen;
    for (const Transaction& t : transactions_) {
        if (t.tid <= 0)
            throw PreconditionError("transaction id must be positive, got " +
                                    std::to_string(t.tid));
        if (!seen.insert(t.tid).second)
            throw PreconditionError("duplicate transaction id " + std::to_string(t.tid));
        if (t.items.empty())
            throw PreconditionError("transaction " + std::to_string(t.tid) + " is empty");
        alphabet_ = alphabet_.union_with(t.items);
    }
}

bool TransactionDB::has_tid(Tid tid) const {
    return std::any_of(transactions_.begin(), transactions_.end(),
                       [&](const Transaction& t) { return t.tid == tid; });
}

const Transaction& TransactionDB::by_tid(Tid tid) const {
    for (const Transaction& t : transactions_) {
        if (t.tid == tid) return t;
    }
    throw PreconditionError("no transaction with id " + std::to_string(tid));
}

int TransactionDB::support_count(const Itemset& s) const {
    int count = 0;
    for (const Transaction& t : transactions_) {
        if (t.items.contains_all(s)) ++count;
    }
    return count;
}

int TransactionDB::item_occurrences() const {
    int total = 0;
    for (const Transaction& t : transactions_) total += static_cast<int>(t.items.size());
    return total;
}

}  // namespace rulehide
