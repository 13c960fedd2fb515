#ifndef IASL_GUARD_IASL_ERROR_HH
#define IASL_GUARD_IASL_ERROR_HH 1

#include <stdexcept>
#include <string>

namespace iasl
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed text input. Carries the 1-based line number when known, 0 otherwise.
    class ParseError : public Error
    {
    private:
        int _line;

    public:
        explicit ParseError(const std::string & message, int line = 0) :
            Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
            _line(line)
        {
        }

        auto line() const -> int { return _line; }
    };

    /// An argument lies outside the domain of an operation (empty operand, set not inside X, ...).
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    /// A size cap was exceeded, so exhaustive enumeration is refused.
    class InfeasibleError : public Error
    {
    public:
        using Error::Error;
    };

    class IncompleteLabelingError : public Error
    {
    public:
        using Error::Error;
    };

    class NotRealizableError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
