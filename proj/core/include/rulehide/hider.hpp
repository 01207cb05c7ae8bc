#pragma once

#include <optional>
#include <vector>

#include "rulehide/cover.hpp"

namespace rulehide {

/// One relocation of a sensitive item: deleted from the donor transaction,
/// added to the recipient. The donor fully supported the target at move
/// time, the recipient lacked the item and only partially supported the
/// target's remaining items, so the target's full-itemset count drops by
/// exactly one and its confidence never rises.
struct Move {
    Item sensitive;
    Tid donor_tid;
    Tid recipient_tid;
    HidingTarget target;
    Rational conf_before;
    Rational conf_after;

    bool operator==(const Move&) const = default;
};

/// Outcome of hiding one sensitive item.
struct HideItemResult {
    TransactionDB db;
    std::vector<Move> moves;
    RuleSet unhidden;      // agenda rules still strong in db
    bool dropped = false;  // the item was not large; db is the input unchanged
};

/// Outcome of a full sanitization run.
struct SanitizationResult {
    TransactionDB transformed;
    std::vector<Move> moves;
    std::vector<Item> dropped_items;
    RuleSet unhidden;  // originally strong sensitive rules still strong at the end
    ScanCounter scans;
};

/// The rules of ar containing h on either side.
RuleSet select_sensitive_rules(const RuleSet& ar, const Item& h);

/// Among transactions containing the whole target itemset (and therefore
/// the sensitive item), the one with the most items; ties to the lowest tid.
std::optional<Tid> find_donor(const TransactionDB& db, const HidingTarget& target);

/// Among transactions lacking the sensitive item and not containing all of
/// full_itemset ∖ {h} — partial support includes containing none of them —
/// the one with the fewest of those items; ties to the lowest tid.
std::optional<Tid> find_recipient(const TransactionDB& db, const HidingTarget& target);

/// Deletes h from the donor and adds it to the recipient. Order, tids and
/// the support of {h} are preserved. Throws PreconditionError when the
/// donor lacks h, the recipient has it, or donor == recipient.
TransactionDB apply_move(const TransactionDB& db, Tid donor, Tid recipient, const Item& h);

/// Hides every rule containing h: mines the strong rules, joins them into
/// targets, and relocates h while a target stays at or above min_conf and
/// a donor/recipient pair exists. Inability to hide is reported in
/// `unhidden`, not an error.
HideItemResult hide_item(const TransactionDB& db, const Thresholds& th, const Item& h,
                         ScanCounter& counter);

/// Folds hide_item over the sensitive items in the given order, re-mining
/// between items. Throws EmptySensitiveSetError when sensitive is empty.
SanitizationResult hide_all(const TransactionDB& db, const Thresholds& th,
                            const std::vector<Item>& sensitive);

}  // namespace rulehide
