// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/equiv.hpp"
#include "nu/error.hpp"
#include "overloaded.hpp"

namespace nu {
namespace {

void require_type(const Comp& e, const Type& t, const char* side) {
  Type got = typecheck_comp(Context{}, e);
  if (!(got == t)) {
    throw Error(ErrorKind::TypeError, std::string(side) + " has type " + got.to_string() +
                                          ", expected " + t.to_string());
  }
}

Verdict direct(const TValue& lhs, const TValue& rhs, const Type& t, const Budgets& b) {
  if (lhs.is_bottom() != rhs.is_bottom()) {
    return Unknown{"only one side returns within fuel " + std::to_string(b.fuel)};
  }
  auto proof = synth_tproof(World{}, lhs, rhs, t, b.fuel);
  if (!proof) return Unknown{"no co-span over the empty world equates the results"};
  return Equivalent{t, DirectCertificate{World{}, lhs, rhs, *proof}};
}

Verdict parametric(const TValue& lhs, const TValue& rhs, const Type& t, const Budgets& b) {
  Span s = identity_span(World{});
  if (lhs.is_bottom() || rhs.is_bottom()) {
    if (lhs.is_bottom() != rhs.is_bottom()) {
      return Unknown{"only one side returns within fuel " + std::to_string(b.fuel)};
    }
    return Equivalent{t, ParametricCertificate{
                             s, lhs, rhs, {std::nullopt, ParamWitness::Evidence::Bottom, {}}, 0}};
  }
  Injection top = Injection::inclusion(s.left(), *lhs.world);
  Injection bottom = Injection::inclusion(s.right(), *rhs.world);
  auto candidates = extension_candidates(s, *lhs.world, *rhs.world, b.budget);
  for (const Span& s1 : candidates) {
    if (!check_parametric_square(top, bottom, s, s1)) continue;
    auto inner = param_relate(s1, *lhs.value, *rhs.value, t, b.fuel);
    if (!inner) continue;
    SweepResult sweep = param_sweep(s1, *lhs.value, *rhs.value, t, b.ext, b.fuel);
    if (!sweep.ok()) continue;
    inner->span = s1;
    return Equivalent{t, ParametricCertificate{s, lhs, rhs, *inner, sweep.checked}};
  }
  return Unknown{"none of " + std::to_string(candidates.size()) +
                 " extension spans relates the results"};
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Direct:
      return "direct";
    case Method::Parametric:
      return "parametric";
    case Method::Oracle:
      return "oracle";
  }
  return "?";
}

bool verify_certificate(const Equivalent& eq, std::uint64_t fuel) {
  return std::visit(overloaded{
                        [&](const DirectCertificate& c) {
                          return verify_tproof(c.world, c.lhs, c.rhs, c.proof, eq.type, fuel);
                        },
                        [&](const ParametricCertificate& c) {
                          return verify_param_t(c.span, c.lhs, c.rhs, eq.type, c.witness, fuel);
                        },
                    },
                    eq.certificate);
}

Verdict check_equivalence(const Comp& e, const Comp& e_prime, const Type& t, Method method,
                          const Budgets& budgets) {
  require_type(e, t, "left term");
  require_type(e_prime, t, "right term");
  if (method == Method::Oracle) return oracle_equiv(e, e_prime, t, budgets.depth, budgets.fuel);
  if (!in_fragment(t)) {
    return Unknown{"certificates cover int, bool, name and name -> bool, not " + t.to_string()};
  }
  TValue lhs = eval_abstract(World{}, AEnv{}, e, budgets.fuel);
  TValue rhs = eval_abstract(World{}, AEnv{}, e_prime, budgets.fuel);
  auto attempt = [&]() -> Verdict {
    try {
      return method == Method::Direct ? direct(lhs, rhs, t, budgets)
                                      : parametric(lhs, rhs, t, budgets);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::FuelExhausted) throw;
      return Unknown{err.what()};
    }
  };
  Verdict v = attempt();
  if (auto* eq = std::get_if<Equivalent>(&v); eq && !verify_certificate(*eq, budgets.fuel)) {
    throw Error(ErrorKind::BrokenCertificate, "emitted certificate failed re-verification");
  }
  return v;
}

}  // namespace nu
