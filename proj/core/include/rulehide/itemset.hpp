#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rulehide {

/// A single basket item. Names are opaque non-empty tokens; whitespace and
/// the characters '#', ',' and '>' are reserved by the file and rule syntax.
class Item {
public:
    explicit Item(std::string name);

    static bool valid_name(std::string_view name);

    const std::string& name() const { return name_; }

    bool operator==(const Item&) const = default;
    std::strong_ordering operator<=>(const Item& other) const {
        return name_ <=> other.name_;
    }

private:
    std::string name_;
};

/// A duplicate-free set of items. Iteration follows the sorted item order.
/// Itemsets themselves compare shortlex — by size first, then item-by-item —
/// which is the canonical order used wherever itemsets or rules are listed.
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<Item> items);
    explicit Itemset(std::vector<Item> items);

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    const std::vector<Item>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool contains(const Item& item) const;
    /// other ⊆ this
    bool contains_all(const Itemset& other) const;
    bool disjoint_with(const Itemset& other) const;
    /// |this ∩ other|
    std::size_t overlap(const Itemset& other) const;

    Itemset union_with(const Itemset& other) const;
    Itemset minus(const Itemset& other) const;
    Itemset intersect(const Itemset& other) const;
    Itemset with(const Item& item) const;
    Itemset without(const Item& item) const;

    /// Item names joined by `sep`, in iteration order.
    std::string joined(std::string_view sep) const;

    bool operator==(const Itemset&) const = default;
    std::strong_ordering operator<=>(const Itemset& other) const;

private:
    std::vector<Item> items_;  // sorted, unique
};

}  // namespace rulehide
