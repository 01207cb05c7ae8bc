#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "rulehide/database.hpp"
#include "rulehide/rational.hpp"

namespace rulehide {

/// Mining thresholds. The CLI restricts both values to [0,1]; the library
/// itself only requires them to be non-negative, so out-of-range thresholds
/// (which simply mine nothing) stay expressible.
struct Thresholds {
    Rational min_supp;
    Rational min_conf;

    Thresholds(Rational supp, Rational conf);
};

/// An association rule X => Y: non-empty disjoint antecedent and consequent.
class Rule {
public:
    Rule(Itemset antecedent, Itemset consequent);

    const Itemset& antecedent() const { return antecedent_; }
    const Itemset& consequent() const { return consequent_; }

    /// X ∪ Y
    Itemset full_itemset() const { return antecedent_.union_with(consequent_); }

    /// True when h appears on either side.
    bool mentions(const Item& h) const {
        return antecedent_.contains(h) || consequent_.contains(h);
    }

    /// Display form, e.g. "A,B => C".
    std::string to_string() const;

    bool operator==(const Rule&) const = default;
    std::strong_ordering operator<=>(const Rule& other) const {
        if (auto cmp = antecedent_ <=> other.antecedent_; cmp != 0) return cmp;
        return consequent_ <=> other.consequent_;
    }

private:
    Itemset antecedent_;
    Itemset consequent_;
};

/// Parses "C=>A,B": comma-separated items around "=>", optional whitespace.
Rule parse_rule(std::string_view text);

/// Exact statistics of a rule against one database.
struct RuleStats {
    Rational support;     // count(X∪Y) / N
    Rational confidence;  // count(X∪Y) / count(X)
    int support_count = 0;

    bool operator==(const RuleStats&) const = default;
};

/// Counts X∪Y and X directly. Throws ZeroAntecedentSupportError when the
/// antecedent never occurs.
RuleStats rule_stats(const TransactionDB& db, const Rule& r);

/// support ≥ min_supp and confidence ≥ min_conf, compared exactly.
bool is_strong(const RuleStats& stats, const Thresholds& th);

}  // namespace rulehide
