// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/equiv.hpp"
#include "nu/error.hpp"

namespace nu {
namespace {

World extend_by(const World& w, unsigned k) {
  std::vector<Name> names = w.names();
  Name base = w.next_fresh();
  for (unsigned i = 0; i < k; ++i) names.push_back(base + i);
  return World(names);
}

// Matching concrete/abstract argument pairs for a ground argument type.
std::vector<std::pair<CValue, AValue>> probes(const Type& arg, const World& w1,
                                              const RealizeBounds& bounds) {
  std::vector<std::pair<CValue, AValue>> out;
  switch (arg.kind()) {
    case Type::Kind::Int:
      for (std::int64_t i : bounds.int_probe) out.emplace_back(CValue{CInt{i}}, AValue{AInt{i}});
      break;
    case Type::Kind::Bool:
      for (bool b : {false, true}) out.emplace_back(CValue{CBool{b}}, AValue{ABool{b}});
      break;
    case Type::Kind::Name:
      for (Name n : w1) out.emplace_back(CValue{CName{n}}, AValue{AName{n}});
      break;
    case Type::Kind::Arrow:
      throw Error(ErrorKind::HigherOrderArgument, "argument type " + arg.to_string());
  }
  return out;
}

}  // namespace

bool realizes_value(const CValue& cv, const AValue& av, const Type& t, const World& w,
                    const RealizeBounds& bounds) {
  switch (t.kind()) {
    case Type::Kind::Int: {
      auto* c = std::get_if<CInt>(&cv.v);
      auto* a = std::get_if<AInt>(&av.v);
      return c && a && c->value == a->value;
    }
    case Type::Kind::Bool: {
      auto* c = std::get_if<CBool>(&cv.v);
      auto* a = std::get_if<ABool>(&av.v);
      return c && a && c->value == a->value;
    }
    case Type::Kind::Name: {
      auto* c = std::get_if<CName>(&cv.v);
      auto* a = std::get_if<AName>(&av.v);
      return c && a && c->value == a->value;
    }
    case Type::Kind::Arrow:
      break;
  }
  if (!std::holds_alternative<CClosure>(cv.v) || !std::holds_alternative<AClosure>(av.v)) {
    return false;
  }
  if (!t.arg().is_ground()) {
    throw Error(ErrorKind::HigherOrderArgument, "argument type " + t.arg().to_string());
  }
  for (unsigned k = 0; k <= bounds.ext; ++k) {
    World w1 = extend_by(w, k);
    AValue moved = transport(Injection::inclusion(w, w1), av);
    for (const auto& [carg, aarg] : probes(t.arg(), w1, bounds)) {
      Fuel abstract_fuel(bounds.fuel);
      TValue result = apply_abstract(w1, moved, aarg, abstract_fuel);
      ConcreteRun run = [&, carg = carg](Name supply, Fuel& fuel) {
        return apply_concrete(cv, carg, supply, fuel);
      };
      if (!realizes_comp(run, result, t.res(), w1, bounds)) return false;
    }
  }
  return true;
}

bool realizes_comp(const ConcreteRun& cv, const TValue& av, const Type& t, const World& w,
                   const RealizeBounds& bounds) {
  Fuel fuel(bounds.fuel);
  CResult c = cv(w.next_fresh(), fuel);
  if (c.diverged != av.is_bottom()) return false;
  if (c.diverged) return true;
  if (c.supply != av.world->next_fresh()) return false;
  return realizes_value(*c.value, *av.value, t, *av.world, bounds);
}

bool realizes_term(const Comp& e, const Type& t, const World& w, const RealizeBounds& bounds) {
  TValue av = eval_abstract(w, AEnv{w, {}}, e, bounds.fuel);
  ConcreteRun run = [&](Name supply, Fuel& fuel) { return eval_concrete(CEnv{}, e, supply, fuel); };
  return realizes_comp(run, av, t, w, bounds);
}

}  // namespace nu
