#ifndef HTD_ERRORS_HPP
#define HTD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace htd {

// Base of all library errors. exit_code() is the process exit status the CLI
// uses: 2 for usage/input problems, 3 for violated internal invariants.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual int exit_code() const { return 2; }
};

class InvariantError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
};

// Parse errors carry a 1-based line and column; column 0 means "whole line".
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

class UnknownPrimitiveError final : public ParseError {
public:
    using ParseError::ParseError;
};
class MultipleDriversError final : public ParseError {
public:
    using ParseError::ParseError;
};
class UndeclaredWireError final : public ParseError {
public:
    using ParseError::ParseError;
};
class SyntaxError final : public ParseError {
public:
    using ParseError::ParseError;
};
class UnknownWireNameError final : public ParseError {
public:
    using ParseError::ParseError;
};

class ShapeMismatchError final : public Error {
public:
    using Error::Error;
};
class NonFiniteValueError final : public InvariantError {
public:
    using InvariantError::InvariantError;
};
class NotScalarError final : public InvariantError {
public:
    using InvariantError::InvariantError;
};
class SingleClassDatasetError final : public Error {
public:
    using Error::Error;
};
class DivergedTrainingError final : public InvariantError {
public:
    using InvariantError::InvariantError;
};
class VersionMismatchError final : public Error {
public:
    using Error::Error;
};
class CorruptFileError final : public Error {
public:
    using Error::Error;
};
class EmptyTableError final : public Error {
public:
    using Error::Error;
};
class AlignmentError final : public InvariantError {
public:
    using InvariantError::InvariantError;
};
class PartitionError final : public InvariantError {
public:
    using InvariantError::InvariantError;
};
class InsufficientFamiliesError final : public Error {
public:
    using Error::Error;
};

} // namespace htd

#endif
