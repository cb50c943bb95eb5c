#pragma once

#include <stdexcept>
#include <string>

namespace algser {

// Caller mistakes: mismatched variable sets, unknown identifiers, malformed
// input text. The CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Violated mathematical preconditions. The CLI maps these to exit code 3.
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

class NotAUnit : public MathError {
public:
    explicit NotAUnit(const std::string& what) : MathError(what) {}
};

class NotDivisible : public MathError {
public:
    explicit NotDivisible(const std::string& what) : MathError(what) {}
};

class NotARoot : public MathError {
public:
    explicit NotARoot(const std::string& what) : MathError(what) {}
};

class MultipleRoot : public MathError {
public:
    explicit MultipleRoot(const std::string& what) : MathError(what) {}
};

class BadSeed : public MathError {
public:
    explicit BadSeed(const std::string& what) : MathError(what) {}
};

class NotCoprime : public MathError {
public:
    explicit NotCoprime(const std::string& what) : MathError(what) {}
};

class NotRegular : public MathError {
public:
    explicit NotRegular(const std::string& what) : MathError(what) {}
};

class NotEtale : public MathError {
public:
    explicit NotEtale(const std::string& what) : MathError(what) {}
};

class DenominatorNotUnit : public MathError {
public:
    explicit DenominatorNotUnit(const std::string& what) : MathError(what) {}
};

class NotExpandable : public MathError {
public:
    explicit NotExpandable(const std::string& what) : MathError(what) {}
};

class UseRepresentationBranch : public MathError {
public:
    explicit UseRepresentationBranch(const std::string& what) : MathError(what) {}
};

// Parse-level errors carry a position; they are usage errors for exit-code
// purposes.
class ParseError : public UsageError {
public:
    ParseError(const std::string& what, int line, int column)
        : UsageError(what + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class NotAPolynomial : public ParseError {
public:
    NotAPolynomial(const std::string& what, int line, int column)
        : ParseError(what, line, column) {}
};

class ZeroDenominator : public ParseError {
public:
    ZeroDenominator(const std::string& what, int line, int column)
        : ParseError(what, line, column) {}
};

}  // namespace algser
