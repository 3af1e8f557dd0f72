#ifndef READSEQ_ERRORS_HPP
#define READSEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace readseq {

// Base class for everything this library throws on bad input or bad state.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invariant or precondition violated by a value (bad geometry, inverted bbox, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed input file; carries the 1-based line number and, when known,
// the offending column/field name.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, std::size_t line, std::string field = {})
        : ValidationError(format(message, line, field)),
          line_number(line),
          field_name(std::move(field)) {}

    std::size_t line_number;
    std::string field_name;

private:
    static std::string format(const std::string& message, std::size_t line,
                              const std::string& field) {
        std::string s = "line " + std::to_string(line);
        if (!field.empty()) s += ", field '" + field + "'";
        s += ": " + message;
        return s;
    }
};

// Statistics cannot be computed on this data (e.g. all scores identical).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

} // namespace readseq

#endif
