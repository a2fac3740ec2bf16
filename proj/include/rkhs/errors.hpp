// Copyright 2026 The rkhs-douglas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rkhs {

/// Base for every error raised by the library. The CLI maps subclasses to
/// exit codes, so new error kinds should derive from one of the two groups
/// below rather than from this class directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable files, wrong shapes, unknown names.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ValidationError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateBaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedVariantError : public DomainError {
 public:
  using DomainError::DomainError;
};

class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace rkhs
