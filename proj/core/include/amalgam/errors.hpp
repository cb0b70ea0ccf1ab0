#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (words, elements, presentation or catalog files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's domain: generator index out
// of range, rank mismatch, non-transitive permutation action, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (e.g. a Case 2 certificate
// requested for an element of the amalgamated subgroup).
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured resource bound was hit: derived-level cap, syllable bound,
// homomorphism search budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace amalgam
