#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sjp {

// Structured error taxonomy shared by the library and the CLI. The code string
// is stable: the CLI prints it verbatim and derives the exit status from it.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& d = "") : Error("parse error", d) {}
};

struct SizeMismatchError : Error {
    explicit SizeMismatchError(const std::string& d = "") : Error("size mismatch", d) {}
};

struct RelationError : Error {
    explicit RelationError(const std::string& d = "") : Error("relation violated", d) {}
};

struct NonsplitError : Error {
    explicit NonsplitError(const std::string& d = "") : Error("nonsplit spectrum", d) {}
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& d = "") : Error("dimension unsupported", d) {}
};

struct ConstraintError : Error {
    explicit ConstraintError(const std::string& d = "") : Error("constraint violation", d) {}
};

struct ClosureError : Error {
    explicit ClosureError(const std::string& d = "") : Error("closure violated", d) {}
};

}  // namespace sjp
