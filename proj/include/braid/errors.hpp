#pragma once

#include <stdexcept>
#include <string>

namespace braid {

/// Malformed textual input (braid text, free-word text, batch lines).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator index outside 1..n-1 (braids) or 1..rank (free words).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Well-formed input outside an operation's domain, e.g. a non-pure braid
/// handed to combing, or mismatched strand counts.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured iteration or truncation budget ran out before an answer
/// was reached. Never a wrong answer, only a missing one.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the range of the coefficient type.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An internal convention check failed. Signals a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braid
