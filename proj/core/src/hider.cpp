#include "rulehide/hider.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rulehide/errors.hpp"

namespace rulehide {

RuleSet select_sensitive_rules(const RuleSet& ar, const Item& h) {
    RuleSet selected;
    for (const auto& entry : ar) {
        if (entry.rule.mentions(h)) selected.insert(entry.rule, entry.stats);
    }
    return selected;
}

std::optional<Tid> find_donor(const TransactionDB& db, const HidingTarget& target) {
    const Transaction* best = nullptr;
    for (const Transaction& t : db.transactions()) {
        if (!t.items.contains_all(target.full_itemset)) continue;
        if (!best || t.items.size() > best->items.size() ||
            (t.items.size() == best->items.size() && t.tid < best->tid)) {
            best = &t;
        }
    }
    if (!best) return std::nullopt;
    return best->tid;
}

std::optional<Tid> find_recipient(const TransactionDB& db, const HidingTarget& target) {
    Itemset wanted = target.full_itemset.without(target.sensitive);
    const Transaction* best = nullptr;
    std::size_t best_overlap = 0;
    for (const Transaction& t : db.transactions()) {
        if (t.items.contains(target.sensitive)) continue;
        if (t.items.contains_all(wanted)) continue;  // full supporter, not partial
        std::size_t have = t.items.overlap(wanted);
        if (!best || have < best_overlap ||
            (have == best_overlap && t.tid < best->tid)) {
            best = &t;
            best_overlap = have;
        }
    }
    if (!best) return std::nullopt;
    return best->tid;
}

TransactionDB apply_move(const TransactionDB& db, Tid donor, Tid recipient,
                         const Item& h) {
    if (donor == recipient)
        throw PreconditionError("donor and recipient are the same transaction " +
                                std::to_string(donor));
    const Transaction& from = db.by_tid(donor);
    const Transaction& to = db.by_tid(recipient);
    if (!from.items.contains(h))
        throw PreconditionError("donor " + std::to_string(donor) +
                                " does not contain '" + h.name() + "'");
    if (to.items.contains(h))
        throw PreconditionError("recipient " + std::to_string(recipient) +
                                " already contains '" + h.name() + "'");

    std::vector<Transaction> transactions = db.transactions();
    for (Transaction& t : transactions) {
        if (t.tid == donor) t.items = t.items.without(h);
        if (t.tid == recipient) t.items = t.items.with(h);
    }
    return TransactionDB(std::move(transactions));
}

namespace {

/// Confidence of a target against the current database; nullopt once the
/// antecedent has no support left (nothing mineable remains).
std::optional<Rational> target_confidence(const TransactionDB& db,
                                          const HidingTarget& target) {
    int antecedent_count = db.support_count(target.antecedent);
    if (antecedent_count == 0) return std::nullopt;
    return Rational(db.support_count(target.full_itemset), antecedent_count);
}

}  // namespace

HideItemResult hide_item(const TransactionDB& db, const Thresholds& th, const Item& h,
                         ScanCounter& counter) {
    FrequentSet fs = frequent_itemsets(db, th, counter);
    if (!fs.contains(Itemset{h}))
        return HideItemResult{db, {}, {}, /*dropped=*/true};

    RuleSet agenda = select_sensitive_rules(generate_rules(fs, db, th), h);
    if (agenda.empty()) return HideItemResult{db, {}, {}, false};

    TransactionDB current = db;
    std::vector<Move> moves;

    for (const HidingTarget& target : join_targets(agenda, h)) {
        while (true) {
            counter.record("target-confidence");
            std::optional<Rational> confidence = target_confidence(current, target);
            if (!confidence || *confidence < th.min_conf) break;

            counter.record("donor-search");
            std::optional<Tid> donor = find_donor(current, target);
            counter.record("recipient-search");
            std::optional<Tid> recipient = find_recipient(current, target);
            if (!donor || !recipient) break;  // exhausted; survivors reported below

            TransactionDB next = apply_move(current, *donor, *recipient, h);
            Rational conf_after =
                target_confidence(next, target).value_or(Rational(0, 1));
            moves.push_back(Move{h, *donor, *recipient, target, *confidence, conf_after});
            current = std::move(next);
        }
    }

    // Rules of the original agenda still strong against the final database.
    RuleSet unhidden;
    for (const auto& entry : agenda) {
        if (current.support_count(entry.rule.antecedent()) == 0) continue;
        RuleStats now = rule_stats(current, entry.rule);
        if (is_strong(now, th)) unhidden.insert(entry.rule, now);
    }
    return HideItemResult{std::move(current), std::move(moves), std::move(unhidden), false};
}

SanitizationResult hide_all(const TransactionDB& db, const Thresholds& th,
                            const std::vector<Item>& sensitive) {
    if (sensitive.empty()) throw EmptySensitiveSetError();
    std::set<Item> distinct(sensitive.begin(), sensitive.end());
    if (distinct.size() != sensitive.size())
        throw PreconditionError("sensitive items must be distinct");

    SanitizationResult result;
    TransactionDB current = db;
    for (const Item& h : sensitive) {
        HideItemResult step = hide_item(current, th, h, result.scans);
        if (step.dropped) result.dropped_items.push_back(h);
        result.moves.insert(result.moves.end(), step.moves.begin(), step.moves.end());
        current = std::move(step.db);
    }

    // Originally strong sensitive rules still strong at the end, judged
    // against the untouched input so the report matches an independent
    // before/after comparison.
    RuleSet original = strong_rules(db, th, result.scans);
    for (const auto& entry : original) {
        bool is_sensitive = std::any_of(sensitive.begin(), sensitive.end(),
                                        [&](const Item& h) { return entry.rule.mentions(h); });
        if (!is_sensitive) continue;
        if (current.support_count(entry.rule.antecedent()) == 0) continue;
        RuleStats now = rule_stats(current, entry.rule);
        if (is_strong(now, th)) result.unhidden.insert(entry.rule, now);
    }

    result.transformed = std::move(current);
    return result;
}

}  // namespace rulehide
