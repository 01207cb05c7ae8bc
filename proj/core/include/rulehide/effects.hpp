#pragma once

#include <map>
#include <vector>

#include "rulehide/hider.hpp"

namespace rulehide {

/// Every rule-level consequence of a sanitization, from independently
/// re-mining the before and after databases at the same thresholds.
struct SideEffectReport {
    RuleSet hidden_sensitive;     // strong before, not after, mentions a sensitive item
    RuleSet surviving_sensitive;  // strong before and after, mentions a sensitive item
    RuleSet lost_rules;           // non-sensitive, strong before, not after
    RuleSet ghost_rules;          // not strong before, strong after
    int moves_applied = 0;        // filled when the sanitization run is available
    int transactions_modified = 0;
    bool support_invariant_ok = false;
    ScanCounter scans;

    /// The headline figure: sensitive rules rendered non-strong.
    int rules_pruned() const { return static_cast<int>(hidden_sensitive.size()); }
};

/// Compares two databases of identical shape (same size, matching tids).
/// Throws ShapeMismatchError otherwise.
SideEffectReport analyze(const TransactionDB& before, const TransactionDB& after,
                         const Thresholds& th, const std::vector<Item>& sensitive);

/// Same, for a sanitization run; also fills moves_applied and folds the
/// run's scan counts into the report.
SideEffectReport analyze(const TransactionDB& before, const SanitizationResult& result,
                         const Thresholds& th, const std::vector<Item>& sensitive);

/// Transaction counts of the given items.
std::map<Item, int> support_profile(const TransactionDB& db,
                                    const std::vector<Item>& items);

}  // namespace rulehide
