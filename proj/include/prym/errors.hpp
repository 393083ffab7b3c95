#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prym {

// Base class for all domain errors. name() is a stable identifier that the
// CLI prints in error reports; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// T*T != identity; (row, col) is the first offending entry of T*T.
class NotAnInvolution : public Error {
public:
    NotAnInvolution(std::size_t row, std::size_t col)
        : Error("NotAnInvolution",
                "matrix squared differs from the identity at entry (" +
                    std::to_string(row) + ", " + std::to_string(col) + ")"),
          row_(row), col_(col) {}
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_, col_;
};

// P*T != transpose(Tdual)*P for a proposed dual pair.
class AdjointnessViolation : public Error {
public:
    explicit AdjointnessViolation(const std::string& detail)
        : Error("AdjointnessViolation", detail) {}
};

// An exhaustive enumeration was requested past its cost guard.
class RankGuardExceeded : public Error {
public:
    explicit RankGuardExceeded(const std::string& detail)
        : Error("RankGuardExceeded", detail) {}
};

// (g, k, ell) fails a stated topological constraint; names the violated one.
class InvalidCurveData : public Error {
public:
    explicit InvalidCurveData(const std::string& detail)
        : Error("InvalidCurveData", detail) {}
};

// Two independent computation routes disagreed. Always a bug, never input.
class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& detail)
        : Error("InternalInconsistency", detail) {}
};

// Unparseable or schema-violating input; byte_offset is 0 when unknown.
class MalformedInput : public Error {
public:
    MalformedInput(std::size_t byte_offset, const std::string& detail)
        : Error("MalformedInput",
                detail + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

} // namespace prym
