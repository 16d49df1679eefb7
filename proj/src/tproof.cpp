// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "nu/equiv.hpp"
#include "nu/error.hpp"
#include "overloaded.hpp"

namespace nu {
namespace {

// Leaves visited by synth_tproof before it gives up.
constexpr std::size_t kSearchCap = 200000;

bool is_name_to_bool(const Type& t) {
  return t.is_arrow() && t.arg().kind() == Type::Kind::Name &&
         t.res().kind() == Type::Kind::Bool;
}

bool apply_to_name(const AValue& fn, const World& world, Name n, std::uint64_t fuel) {
  Fuel budget(fuel);
  TValue r = apply_abstract(world, fn, AValue{AName{n}}, budget);
  if (r.is_bottom()) {
    throw Error(ErrorKind::FuelExhausted,
                "tabulating " + to_string(fn) + " at name " + std::to_string(n));
  }
  auto* b = std::get_if<ABool>(&r.value->v);
  if (!b) throw Error(ErrorKind::TypeError, "table entry " + to_string(*r.value));
  return b->value;
}

}  // namespace

bool in_fragment(const Type& t) { return t.is_ground() || is_name_to_bool(t); }

void require_fragment(const Type& t) {
  if (!in_fragment(t)) {
    throw Error(ErrorKind::UnsupportedType, t.to_string() + " is outside int, bool, name, name -> bool");
  }
}

bool operator==(const GroundEq& a, const GroundEq& b) {
  if (a.index() != b.index()) return false;
  return std::visit(overloaded{
                        [&](const IntEq& x) { return x.value == std::get<IntEq>(b).value; },
                        [&](const BoolEq& x) { return x.value == std::get<BoolEq>(b).value; },
                        [&](const NameEq& x) { return x.name == std::get<NameEq>(b).name; },
                        [&](const TableEq& x) { return x.table == std::get<TableEq>(b).table; },
                    },
                    a);
}

TruthTable tabulate(const AValue& fn, const World& world, std::uint64_t fuel) {
  TruthTable table;
  for (Name n : world) table.emplace_back(n, apply_to_name(fn, world, n, fuel));
  // One name the closure has never seen stands in for all of them.
  Name probe = world.next_fresh();
  World wider = world.with(probe);
  AValue moved = transport(Injection::inclusion(world, wider), fn);
  table.emplace_back(probe, apply_to_name(moved, wider, probe, fuel));
  return table;
}

GroundEq ground_evidence(const AValue& a, const Type& t, const World& world,
                         std::uint64_t fuel) {
  require_fragment(t);
  auto mismatch = [&]() -> GroundEq {
    throw Error(ErrorKind::TypeError, to_string(a) + " is not a " + t.to_string());
  };
  switch (t.kind()) {
    case Type::Kind::Int:
      if (auto* i = std::get_if<AInt>(&a.v)) return IntEq{i->value};
      return mismatch();
    case Type::Kind::Bool:
      if (auto* b = std::get_if<ABool>(&a.v)) return BoolEq{b->value};
      return mismatch();
    case Type::Kind::Name:
      if (auto* n = std::get_if<AName>(&a.v)) return NameEq{n->value};
      return mismatch();
    case Type::Kind::Arrow:
      if (!std::holds_alternative<AClosure>(a.v)) return mismatch();
      return TableEq{tabulate(a, world, fuel)};
  }
  return mismatch();
}

bool verify_tproof(const World& w, const TValue& tv, const TValue& tv_prime,
                   const TProof& proof, const Type& t, std::uint64_t fuel) {
  require_fragment(t);
  if (std::holds_alternative<BottomProof>(proof)) return tv.is_bottom() && tv_prime.is_bottom();
  if (tv.is_bottom() || tv_prime.is_bottom()) return false;
  const auto& p = std::get<CospanProof>(proof);
  const World& w1 = *tv.world;
  const World& w1p = *tv_prime.world;
  if (p.x.dom() != w1 || p.x_prime.dom() != w1p || p.x.cod() != p.x_prime.cod()) {
    throw Error(ErrorKind::ShapeMismatch, "proof legs " + p.x.to_string() + " and " +
                                              p.x_prime.to_string() + " do not fit " +
                                              w1.to_string() + " and " + w1p.to_string());
  }
  if (!w.is_subset_of(w1) || !w.is_subset_of(w1p)) {
    throw Error(ErrorKind::ShapeMismatch, "results do not extend " + w.to_string());
  }
  for (Name n : w) {
    if (p.x(n) != p.x_prime(n)) return false;
  }
  const World& apex = p.x.cod();
  GroundEq lhs = ground_evidence(transport(p.x, *tv.value), t, apex, fuel);
  if (!(lhs == p.evidence)) return false;
  GroundEq rhs = ground_evidence(transport(p.x_prime, *tv_prime.value), t, apex, fuel);
  return rhs == p.evidence;
}

std::optional<TProof> synth_tproof(const World& w, const TValue& tv, const TValue& tv_prime,
                                   const Type& t, std::uint64_t fuel) {
  require_fragment(t);
  if (tv.is_bottom() && tv_prime.is_bottom()) return TProof{BottomProof{}};
  if (tv.is_bottom() || tv_prime.is_bottom()) return std::nullopt;
  const World& w1 = *tv.world;
  const World& w1p = *tv_prime.world;
  if (!w.is_subset_of(w1) || !w.is_subset_of(w1p)) {
    throw Error(ErrorKind::ShapeMismatch, "results do not extend " + w.to_string());
  }
  const std::vector<Name> own = w1.minus(w).names();
  const std::vector<Name> other = w1p.minus(w).names();
  const Name first_new = w1.next_fresh();

  std::vector<std::pair<Name, Name>> assigned;
  for (Name n : w) assigned.emplace_back(n, n);
  std::vector<bool> used(own.size(), false);
  std::size_t next_new = 0;
  std::size_t leaves = 0;
  std::optional<TProof> found;

  auto try_leaf = [&]() {
    ++leaves;
    std::vector<Name> apex_names = w1.names();
    for (std::size_t k = 0; k < next_new; ++k) apex_names.push_back(first_new + k);
    World apex(apex_names);
    Injection x = Injection::inclusion(w1, apex);
    Injection xp(w1p, apex, assigned);
    GroundEq lhs = ground_evidence(transport(x, *tv.value), t, apex, fuel);
    GroundEq rhs = ground_evidence(transport(xp, *tv_prime.value), t, apex, fuel);
    if (lhs == rhs) found = CospanProof{std::move(x), std::move(xp), std::move(lhs)};
  };

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (found || leaves >= kSearchCap) return;
    if (i == other.size()) {
      try_leaf();
      return;
    }
    for (std::size_t j = 0; j < own.size() && !found; ++j) {
      if (used[j]) continue;
      used[j] = true;
      assigned.emplace_back(other[i], own[j]);
      self(self, i + 1);
      assigned.pop_back();
      used[j] = false;
    }
    if (found) return;
    assigned.emplace_back(other[i], first_new + next_new);
    ++next_new;
    self(self, i + 1);
    --next_new;
    assigned.pop_back();
  };
  search(search, 0);
  return found;
}

}  // namespace nu
