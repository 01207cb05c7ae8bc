#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rulehide/database.hpp"

namespace rulehide {

/// Reads the basket text format: one transaction per line, items separated
/// by whitespace. Blank lines and lines starting with '#' are skipped.
/// Transactions are numbered 1..N in file order.
///
/// Throws EmptyDatabaseError, DuplicateItemError or BadTokenError.
TransactionDB parse_database(std::string_view text);
TransactionDB parse_database(std::istream& in);

/// Canonical form: each transaction's items sorted and space-separated, one
/// line per transaction, '\n' endings. parse_database(serialize_database(db))
/// reproduces db exactly when its tids are 1..N in order.
std::string serialize_database(const TransactionDB& db);

}  // namespace rulehide
