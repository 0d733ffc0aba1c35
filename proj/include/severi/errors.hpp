#pragma once

#include <stdexcept>
#include <string>

namespace severi {

/// A computation invariant failed: a non-integral accumulator, a memo value
/// conflict, or a recursion measure that did not decrease. These signal bugs
/// in the enumeration, never bad user input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// A persisted cache file could not be accepted (bad version, parse failure,
/// or an entry that fails validation). The file is rejected wholesale.
class CacheFormatError : public std::runtime_error {
public:
    explicit CacheFormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace severi
