// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Concrete syntax (parse / pretty) and the syntax-directed type checker.
//
// Grammar:
//   comp  := 'let' id '=' comp 'in' comp
//          | 'if' value 'then' comp 'else' comp
//          | 'new'
//          | value [atom]                        (return, or application)
//          | '(' comp ')'
//   value := sum ['=' sum]
//   sum   := atom ('+' atom)*
//   atom  := id | int | 'true' | 'false' | '(' value ')'
//          | 'fix' id '(' id ':' type ')' ':' type '.' comp
//          | 'fun' '(' id ':' type ')' '.' comp
//   type  := base ['->' type]
//   base  := 'int' | 'bool' | 'name' | '(' type ')'

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nu/syntax.hpp"

namespace nu {

/// Typing context; later bindings shadow earlier ones.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<std::string, Type>> bindings);

  Context extended(std::string x, Type t) const;
  const Type* lookup(const std::string& x) const;
  const std::vector<std::pair<std::string, Type>>& bindings() const { return bindings_; }

 private:
  std::vector<std::pair<std::string, Type>> bindings_;
};

/// Parses one computation. Throws SyntaxError carrying line:column.
CompPtr parse(std::string_view text);
/// Parses a type such as "name -> bool".
Type parse_type(std::string_view text);

std::string pretty(const Comp& e);
std::string pretty(const Value& v);

/// Throws TypeError or UnboundVariable.
Type typecheck_value(const Context& ctx, const Value& v);
Type typecheck_comp(const Context& ctx, const Comp& e);

}  // namespace nu
