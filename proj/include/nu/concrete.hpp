// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Naive semantics: names are naturals drawn from an explicit supply, and
// recursion is cut off after a fixed number of function applications.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "nu/syntax.hpp"
#include "nu/worlds.hpp"

namespace nu {

struct CValue;
using CEnv = std::map<std::string, CValue>;

struct CInt {
  std::int64_t value;
};
struct CBool {
  bool value;
};
struct CName {
  Name value;
};
struct CClosure {
  std::string fname;
  std::string xname;
  CompPtr body;
  std::shared_ptr<const CEnv> env;
};

struct CValue {
  std::variant<CInt, CBool, CName, CClosure> v;
};

/// Diverge, or the final supply and value.
struct CResult {
  bool diverged = true;
  Name supply = 0;
  std::optional<CValue> value;

  static CResult diverge() { return {}; }
  static CResult done(Name supply, CValue v) { return {false, supply, std::move(v)}; }
};

/// Remaining application budget, shared by a whole evaluation.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget) : left_(budget) {}
  /// Consumes one unit; false when the budget is already spent.
  bool take() {
    if (left_ == 0) return false;
    --left_;
    return true;
  }
  std::uint64_t left() const { return left_; }

 private:
  std::uint64_t left_;
};

CResult eval_concrete(const CEnv& env, const Comp& e, Name supply, std::uint64_t fuel);
/// Same, drawing on a shared budget.
CResult eval_concrete(const CEnv& env, const Comp& e, Name supply, Fuel& fuel);

/// Value-level evaluation (no effects, no fuel).
CValue eval_concrete_value(const CEnv& env, const Value& v);

/// Applies a closure to an argument at the given supply.
CResult apply_concrete(const CValue& fn, const CValue& arg, Name supply, Fuel& fuel);

bool operator==(const CValue& a, const CValue& b);

std::string to_string(const CValue& v);

}  // namespace nu
