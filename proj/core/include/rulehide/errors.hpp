#pragma once

#include <stdexcept>
#include <string>

namespace rulehide {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input held no data lines, or an operation that needs at least one
/// transaction was handed an empty database.
class EmptyDatabaseError : public Error {
public:
    EmptyDatabaseError() : Error("empty database (no data lines)") {}
};

/// The same item appeared twice on a single basket line.
class DuplicateItemError : public Error {
public:
    DuplicateItemError(int tid, std::string item)
        : Error("duplicate item '" + item + "' in transaction " + std::to_string(tid)),
          tid_(tid),
          item_(std::move(item)) {}

    int tid() const { return tid_; }
    const std::string& item() const { return item_; }

private:
    int tid_;
    std::string item_;
};

/// A token on a basket line is not a valid item name.
class BadTokenError : public Error {
public:
    BadTokenError(int line, std::string token)
        : Error("bad token '" + token + "' on line " + std::to_string(line)),
          line_(line),
          token_(std::move(token)) {}

    int line() const { return line_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    std::string token_;
};

/// Confidence is undefined when the antecedent never occurs.
class ZeroAntecedentSupportError : public Error {
public:
    ZeroAntecedentSupportError()
        : Error("rule antecedent has zero support; confidence is undefined") {}
};

/// Guard on the exhaustive-enumeration miner.
class AlphabetTooLargeError : public Error {
public:
    explicit AlphabetTooLargeError(std::size_t size, std::size_t limit)
        : Error("alphabet of " + std::to_string(size) +
                " items exceeds the brute-force limit of " + std::to_string(limit)) {}
};

/// A caller violated an operation's stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two databases that must line up transaction-for-transaction do not.
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

/// Sanitization was requested with no sensitive items.
class EmptySensitiveSetError : public Error {
public:
    EmptySensitiveSetError() : Error("sensitive item set is empty") {}
};

/// A rule literal such as "C=>A,B" failed to parse.
class RuleSyntaxError : public Error {
public:
    using Error::Error;
};

/// A number literal such as "33%", "0.33" or "1/3" failed to parse.
class NumberSyntaxError : public Error {
public:
    using Error::Error;
};

}  // namespace rulehide
