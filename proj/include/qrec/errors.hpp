#pragma once

#include <stdexcept>
#include <string>

namespace qrec {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad files, unknown names, dimension mismatches.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A configured enumeration budget was exceeded; the answer is "undetermined",
/// not "false".
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

/// An internal consistency check failed. Reaching this indicates a bug or
/// corrupted input data, not a user error.
struct InvariantError : Error {
    explicit InvariantError(const std::string& msg) : Error(msg) {}
};

/// Decomposition against a declared atom list failed; the list does not
/// cover the object (or its fingerprint matrix is singular).
struct AtomListError : Error {
    explicit AtomListError(const std::string& msg) : Error(msg) {}
};

} // namespace qrec
