#pragma once

#include <stdexcept>
#include <string>

namespace wildscope {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Ingestion failures: unreadable source, malformed JSON, empty catalog.
class CatalogError : public Error {
public:
    explicit CatalogError(const std::string& what) : Error(what) {}
};

/// Violated operation contracts: unknown action, invalid pattern where a
/// valid one is required, identical distance operands.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace wildscope
