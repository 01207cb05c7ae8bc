#include "rulehide/rule.hpp"

#include <cctype>
#include <vector>

#include "rulehide/errors.hpp"

namespace rulehide {

Thresholds::Thresholds(Rational supp, Rational conf)
    : min_supp(supp), min_conf(conf) {
    if (min_supp < Rational(0, 1) || min_conf < Rational(0, 1))
        throw PreconditionError("thresholds must be non-negative");
}

Rule::Rule(Itemset antecedent, Itemset consequent)
    : antecedent_(std::move(antecedent)), consequent_(std::move(consequent)) {
    if (antecedent_.empty()) throw PreconditionError("rule antecedent is empty");
    if (consequent_.empty()) throw PreconditionError("rule consequent is empty");
    if (!antecedent_.disjoint_with(consequent_))
        throw PreconditionError("rule sides overlap: " + antecedent_.joined(",") +
                                " => " + consequent_.joined(","));
}

std::string Rule::to_string() const {
    return antecedent_.joined(",") + " => " + consequent_.joined(",");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Itemset parse_side(std::string_view side, std::string_view whole) {
    std::vector<Item> items;
    while (true) {
        auto comma = side.find(',');
        std::string_view token = trim(side.substr(0, comma));
        if (!Item::valid_name(token))
            throw RuleSyntaxError("bad rule '" + std::string(whole) + "'");
        items.emplace_back(std::string(token));
        if (comma == std::string_view::npos) break;
        side.remove_prefix(comma + 1);
    }
    return Itemset(std::move(items));
}

}  // namespace

Rule parse_rule(std::string_view text) {
    auto arrow = text.find("=>");
    if (arrow == std::string_view::npos)
        throw RuleSyntaxError("bad rule '" + std::string(text) + "': missing \"=>\"");
    std::string_view lhs = trim(text.substr(0, arrow));
    std::string_view rhs = trim(text.substr(arrow + 2));
    if (lhs.empty() || rhs.empty())
        throw RuleSyntaxError("bad rule '" + std::string(text) + "': empty side");
    try {
        return Rule(parse_side(lhs, text), parse_side(rhs, text));
    } catch (const PreconditionError& e) {
        throw RuleSyntaxError("bad rule '" + std::string(text) + "': " + e.what());
    }
}

RuleStats rule_stats(const TransactionDB& db, const Rule& r) {
    int antecedent_count = db.support_count(r.antecedent());
    if (antecedent_count == 0) throw ZeroAntecedentSupportError();
    int joint_count = db.support_count(r.full_itemset());
    return RuleStats{Rational(joint_count, db.size()),
                     Rational(joint_count, antecedent_count), joint_count};
}

bool is_strong(const RuleStats& stats, const Thresholds& th) {
    return stats.support >= th.min_supp && stats.confidence >= th.min_conf;
}

}  // namespace rulehide
