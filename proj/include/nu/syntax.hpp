// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Types and the two-sorted AST (values and computations) of the language.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nu {

class Type {
 public:
  enum class Kind { Int, Bool, Name, Arrow };

  static Type integer() { return Type(Kind::Int); }
  static Type boolean() { return Type(Kind::Bool); }
  static Type name() { return Type(Kind::Name); }
  static Type arrow(Type arg, Type res);

  Kind kind() const { return kind_; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }
  bool is_ground() const { return kind_ != Kind::Arrow; }
  /// Argument / result of an arrow type.
  const Type& arg() const;
  const Type& res() const;

  friend bool operator==(const Type& a, const Type& b);

  std::string to_string() const;

 private:
  explicit Type(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const std::pair<Type, Type>> parts_;
};

struct Value;
struct Comp;
using ValuePtr = std::shared_ptr<const Value>;
using CompPtr = std::shared_ptr<const Comp>;

struct Var {
  std::string name;
};
struct BoolLit {
  bool value;
};
struct IntLit {
  std::int64_t value;
};
/// fix f(x:arg):res. body. A `fun (x:arg). body` has an empty fname and no
/// result annotation.
struct Fix {
  std::string fname;
  std::string xname;
  Type arg;
  std::optional<Type> res;
  CompPtr body;

  bool is_fun() const { return fname.empty(); }
};
struct Plus {
  ValuePtr lhs;
  ValuePtr rhs;
};
struct Equal {
  ValuePtr lhs;
  ValuePtr rhs;
};

struct Value {
  std::variant<Var, BoolLit, IntLit, Fix, Plus, Equal> node;
};

struct Ret {
  ValuePtr value;
};
struct New {};
struct Let {
  std::string name;
  CompPtr bound;
  CompPtr body;
};
struct App {
  ValuePtr fn;
  ValuePtr arg;
};
struct If {
  ValuePtr cond;
  CompPtr then_branch;
  CompPtr else_branch;
};

struct Comp {
  std::variant<Ret, New, Let, App, If> node;
};

// Structural (deep) equality.
bool operator==(const Value& a, const Value& b);
bool operator==(const Comp& a, const Comp& b);

// Builders used by the parser, the generators and the tests.
namespace build {

ValuePtr var(std::string name);
ValuePtr boolean(bool b);
ValuePtr integer(std::int64_t i);
ValuePtr fix(std::string f, std::string x, Type arg, Type res, CompPtr body);
ValuePtr fun(std::string x, Type arg, CompPtr body);
ValuePtr plus(ValuePtr a, ValuePtr b);
ValuePtr equal(ValuePtr a, ValuePtr b);

CompPtr ret(ValuePtr v);
CompPtr fresh();
CompPtr let(std::string x, CompPtr bound, CompPtr body);
CompPtr app(ValuePtr f, ValuePtr a);
CompPtr cond(ValuePtr c, CompPtr then_branch, CompPtr else_branch);

}  // namespace build

/// Free variables of a computation, sorted and unique.
std::vector<std::string> free_vars(const Comp& e);
std::vector<std::string> free_vars(const Value& v);

/// Number of AST levels; returning a value adds no level.
int depth(const Comp& e);
int depth(const Value& v);

}  // namespace nu
