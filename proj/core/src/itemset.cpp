#include "rulehide/itemset.hpp"

#include <algorithm>
#include <cctype>

#include "rulehide/errors.hpp"

namespace rulehide {

Item::Item(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_))
        throw PreconditionError("invalid item name '" + name_ + "'");
}

bool Item::valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (c == '#' || c == ',' || c == '>') return false;
    }
    return true;
}

Itemset::Itemset(std::initializer_list<Item> items)
    : Itemset(std::vector<Item>(items)) {}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool Itemset::contains(const Item& item) const {
    return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::contains_all(const Itemset& other) const {
    return std::includes(items_.begin(), items_.end(),
                         other.items_.begin(), other.items_.end());
}

bool Itemset::disjoint_with(const Itemset& other) const {
    return overlap(other) == 0;
}

std::size_t Itemset::overlap(const Itemset& other) const {
    std::size_t n = 0;
    auto it = items_.begin();
    auto jt = other.items_.begin();
    while (it != items_.end() && jt != other.items_.end()) {
        if (*it < *jt) {
            ++it;
        } else if (*jt < *it) {
            ++jt;
        } else {
            ++n;
            ++it;
            ++jt;
        }
    }
    return n;
}

Itemset Itemset::union_with(const Itemset& other) const {
    std::vector<Item> merged;
    merged.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(),
                   other.items_.begin(), other.items_.end(),
                   std::back_inserter(merged));
    Itemset result;
    result.items_ = std::move(merged);  // set_union output is sorted and unique
    return result;
}

Itemset Itemset::minus(const Itemset& other) const {
    std::vector<Item> rest;
    std::set_difference(items_.begin(), items_.end(),
                        other.items_.begin(), other.items_.end(),
                        std::back_inserter(rest));
    Itemset result;
    result.items_ = std::move(rest);
    return result;
}

Itemset Itemset::intersect(const Itemset& other) const {
    std::vector<Item> common;
    std::set_intersection(items_.begin(), items_.end(),
                          other.items_.begin(), other.items_.end(),
                          std::back_inserter(common));
    Itemset result;
    result.items_ = std::move(common);
    return result;
}

Itemset Itemset::with(const Item& item) const {
    return union_with(Itemset{item});
}

Itemset Itemset::without(const Item& item) const {
    return minus(Itemset{item});
}

std::string Itemset::joined(std::string_view sep) const {
    std::string out;
    for (const Item& item : items_) {
        if (!out.empty()) out += sep;
        out += item.name();
    }
    return out;
}

std::strong_ordering Itemset::operator<=>(const Itemset& other) const {
    if (auto cmp = items_.size() <=> other.items_.size(); cmp != 0) return cmp;
    return std::lexicographical_compare_three_way(
        items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
}

}  // namespace rulehide
