#pragma once

#include <stdexcept>
#include <string>

namespace ncgeo {

// Base class for all domain errors thrown by the library. `code()` returns a
// stable machine-readable tag used by the CLI for exit-code mapping.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error("DIVISION_BY_ZERO", what) {}
};

struct ModeMismatch : Error {
    explicit ModeMismatch(const std::string& what = "operands have different power modes")
        : Error("MODE_MISMATCH", what) {}
};

struct NegativeExponent : Error {
    explicit NegativeExponent(const std::string& what = "negative exponent in polynomial mode")
        : Error("NEGATIVE_EXPONENT", what) {}
};

struct LaurentUnsupported : Error {
    explicit LaurentUnsupported(const std::string& what = "operation requires polynomial mode")
        : Error("LAURENT_UNSUPPORTED", what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what = "index out of range") : Error("INDEX_OUT_OF_RANGE", what) {}
};

struct WindowEmpty : Error {
    explicit WindowEmpty(const std::string& what = "empty exponent window") : Error("WINDOW_EMPTY", what) {}
};

struct NotCentral : Error {
    explicit NotCentral(const std::string& what = "parameter is not central") : Error("NOT_CENTRAL", what) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& what = "connection fails the admissibility conditions")
        : Error("NOT_ADMISSIBLE", what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what = "matrix is not symmetric") : Error("NOT_SYMMETRIC", what) {}
};

struct NotBimoduleMap : Error {
    explicit NotBimoduleMap(const std::string& what = "map does not commute with the left module structure")
        : Error("NOT_BIMODULE_MAP", what) {}
};

struct InverseInvalid : Error {
    explicit InverseInvalid(const std::string& what = "declared inverse does not invert") : Error("INVERSE_INVALID", what) {}
};

// Carries the position of the offending token (1-based line/column).
class ParseError : public Error {
  public:
    ParseError(int line, int column, const std::string& what)
        : Error("PARSE_ERROR", "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

} // namespace ncgeo
