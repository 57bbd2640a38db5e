#pragma once

#include <stdexcept>
#include <string>

namespace mantra {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class EmptyFacetError : public Error {
public:
    explicit EmptyFacetError(std::size_t index)
        : Error("facet #" + std::to_string(index) + " is empty") {}
};

class NonPositiveVertexIdError : public Error {
public:
    explicit NonPositiveVertexIdError(long long id)
        : Error("vertex id " + std::to_string(id) + " is not a positive integer") {}
};

class DimensionOutOfRangeError : public Error {
public:
    DimensionOutOfRangeError(int k, int dim)
        : Error("dimension " + std::to_string(k) + " out of range [0, " +
                std::to_string(dim) + "]") {}
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(int v)
        : Error("vertex " + std::to_string(v) + " is not in the complex") {}
};

class UnknownSimplexError : public Error {
public:
    UnknownSimplexError() : Error("simplex is not in the complex") {}
};

class UnsupportedDimensionError : public Error {
public:
    explicit UnsupportedDimensionError(int d)
        : Error("complex dimension " + std::to_string(d) +
                " unsupported (expected 2 or 3)") {}
};

class NotPureError : public Error {
public:
    NotPureError() : Error("complex is not pure: a facet has lower dimension") {}
};

class NotAManifoldError : public Error {
public:
    explicit NotAManifoldError(const std::string& why)
        : Error("not a combinatorial manifold: " + why) {}
};

class UnknownKindError : public Error {
public:
    explicit UnknownKindError(const std::string& kind)
        : Error("unknown feature kind '" + kind + "'") {}
};

class MissingSeedError : public Error {
public:
    MissingSeedError() : Error("random feature kind requires a seed") {}
};

class UnknownKeyError : public Error {
public:
    explicit UnknownKeyError(const std::string& key)
        : Error("unknown label key '" + key + "'") {}
};

/// Lexicographical-format parse failure with 1-based position info.
class LexSyntaxError : public Error {
public:
    LexSyntaxError(std::size_t line, std::size_t col, const std::string& what)
        : Error("syntax error at line " + std::to_string(line) + ", column " +
                std::to_string(col) + ": " + what),
          line(line), col(col) {}
    std::size_t line, col;
};

class UnbalancedBracketsError : public LexSyntaxError {
public:
    UnbalancedBracketsError(std::size_t line, std::size_t col)
        : LexSyntaxError(line, col, "unbalanced brackets") {}
};

class NonIntegerVertexError : public LexSyntaxError {
public:
    NonIntegerVertexError(std::size_t line, std::size_t col)
        : LexSyntaxError(line, col, "expected an integer vertex id") {}
};

class MalformedJsonError : public Error {
public:
    explicit MalformedJsonError(const std::string& what)
        : Error("malformed JSON: " + what) {}
};

class SchemaViolationError : public Error {
public:
    SchemaViolationError(std::size_t record_index, const std::string& field,
                         const std::string& what)
        : Error("record " + std::to_string(record_index) + ", field '" + field +
                "': " + what),
          record_index(record_index), field(field) {}
    std::size_t record_index;
    std::string field;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace mantra
