// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// World-indexed semantics. A computation at world w yields either bottom or
// an extension w1 ⊇ w together with a value living at w1; values move
// between worlds along injections.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "nu/concrete.hpp"
#include "nu/syntax.hpp"
#include "nu/worlds.hpp"

namespace nu {

struct AValue;
using AMap = std::map<std::string, AValue>;

struct AInt {
  std::int64_t value;
};
struct ABool {
  bool value;
};
struct AName {
  Name value;
};
/// Closures keep their syntax and environment intensionally, tagged with the
/// world every captured value lives at.
struct AClosure {
  std::string fname;
  std::string xname;
  CompPtr body;
  std::shared_ptr<const AMap> env;
  World world;
};

struct AValue {
  std::variant<AInt, ABool, AName, AClosure> v;
};

/// Variable bindings, all living at one world.
struct AEnv {
  World world;
  AMap values;
};

/// Bottom, or the extension world and a value at it.
struct TValue {
  std::optional<World> world;
  std::optional<AValue> value;

  static TValue bottom() { return {}; }
  static TValue done(World w1, AValue a) { return {std::move(w1), std::move(a)}; }
  bool is_bottom() const { return !world.has_value(); }
};

/// Whether every name in `a` (and every closure world) belongs to `w`.
bool lives_at(const AValue& a, const World& w);

/// u.a: rename names through u and retag closures at u.cod().
/// Throws WorldMismatch unless a lives at u.dom().
AValue transport(const Injection& u, const AValue& a);
AEnv transport(const Injection& u, const AEnv& env);

/// Action on computations over u.dom(): complete the span (w ↪ w1, u) to the
/// canonical minimal pullback, whose leg out of u.cod() is an inclusion.
TValue t_transport(const Injection& u, const TValue& tv);

TValue eval_abstract(const World& w, const AEnv& env, const Comp& e, std::uint64_t fuel);
TValue eval_abstract(const World& w, const AEnv& env, const Comp& e, Fuel& fuel);

AValue eval_abstract_value(const World& w, const AEnv& env, const Value& v);

/// Applies a closure living at w to an argument living at w.
TValue apply_abstract(const World& w, const AValue& fn, const AValue& arg, Fuel& fuel);

bool operator==(const AValue& a, const AValue& b);
bool operator==(const TValue& a, const TValue& b);

std::string to_string(const AValue& v);
std::string to_string(const TValue& v);

}  // namespace nu
