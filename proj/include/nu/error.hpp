// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nu {

enum class ErrorKind {
  InvalidInjection,
  DomainMismatch,
  CodomainMismatch,
  NotCommuting,
  NotAPullback,
  MiddleMismatch,
  ShapeMismatch,
  WorldMismatch,
  SyntaxError,
  TypeError,
  UnboundVariable,
  StuckTerm,
  FuelExhausted,
  HigherOrderArgument,
  UnsupportedType,
  BrokenCertificate,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is the stable, matchable
/// part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nu
