#include "rulehide/basket_io.hpp"

#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

#include "rulehide/errors.hpp"

namespace rulehide {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

}  // namespace

TransactionDB parse_database(std::istream& in) {
    std::vector<Transaction> transactions;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank_or_comment(line)) continue;

        Tid tid = static_cast<Tid>(transactions.size()) + 1;
        std::vector<Item> items;
        std::set<std::string> seen;
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            if (!Item::valid_name(token)) throw BadTokenError(line_no, token);
            if (!seen.insert(token).second) throw DuplicateItemError(tid, token);
            items.emplace_back(token);
        }
        transactions.push_back(Transaction{tid, Itemset(std::move(items))});
    }
    if (transactions.empty()) throw EmptyDatabaseError();
    return TransactionDB(std::move(transactions));
}

TransactionDB parse_database(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_database(in);
}

std::string serialize_database(const TransactionDB& db) {
    std::string out;
    for (const Transaction& t : db.transactions()) {
        out += t.items.joined(" ");
        out += '\n';
    }
    return out;
}

}  // namespace rulehide
