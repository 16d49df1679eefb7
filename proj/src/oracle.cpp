// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <string>
#include <vector>

#include "nu/equiv.hpp"
#include "nu/error.hpp"

namespace nu {
namespace {

constexpr std::int64_t kIntProbes[] = {-1, 0, 1, 2};

using Ctx = std::vector<std::pair<std::string, Type>>;

std::vector<ValuePtr> vars_of(const Ctx& ctx, const Type& t) {
  std::vector<ValuePtr> out;
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    if (it->second == t) out.push_back(build::var(it->first));
  }
  return out;
}

std::vector<ValuePtr> atoms(const Ctx& ctx, const Type& t) {
  std::vector<ValuePtr> out = vars_of(ctx, t);
  if (t.kind() == Type::Kind::Bool) {
    out.push_back(build::boolean(true));
    out.push_back(build::boolean(false));
  } else if (t.kind() == Type::Kind::Int) {
    for (std::int64_t i : kIntProbes) out.push_back(build::integer(i));
  }
  return out;
}

bool is_var(const Value& v) { return std::holds_alternative<Var>(v.node); }

std::vector<ValuePtr> values(const Ctx& ctx, const Type& t, int d) {
  if (d < 1) return {};
  std::vector<ValuePtr> out = atoms(ctx, t);
  if (d < 2) return out;
  if (t.kind() == Type::Kind::Int) {
    auto ints = atoms(ctx, t);
    for (const auto& a : vars_of(ctx, t)) {
      for (const auto& b : ints) out.push_back(build::plus(a, b));
    }
  } else if (t.kind() == Type::Kind::Bool) {
    // Comparisons with at least one variable side; constant ones add nothing.
    for (const Type& operand : {Type::integer(), Type::name()}) {
      auto xs = atoms(ctx, operand);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i; j < xs.size(); ++j) {
          if (!is_var(*xs[i]) && !is_var(*xs[j])) continue;
          out.push_back(build::equal(xs[i], xs[j]));
        }
      }
    }
  }
  return out;
}

bool mentions(const Comp& e, const std::string& x) {
  auto fv = free_vars(e);
  return std::binary_search(fv.begin(), fv.end(), x);
}

std::vector<CompPtr> comps(const Ctx& ctx, const Type& t, int d) {
  if (d < 1) return {};
  std::vector<CompPtr> out;
  for (auto& v : values(ctx, t, d)) out.push_back(build::ret(std::move(v)));
  if (t.kind() == Type::Kind::Name) out.push_back(build::fresh());
  if (d < 2) return out;

  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    const Type& ft = it->second;
    if (!ft.is_arrow() || !(ft.res() == t) || !ft.arg().is_ground()) continue;
    for (auto& a : atoms(ctx, ft.arg())) out.push_back(build::app(build::var(it->first), a));
  }

  auto inner = comps(ctx, t, d - 1);
  for (const auto& c : vars_of(ctx, Type::boolean())) {
    for (const auto& e1 : inner) {
      for (const auto& e2 : inner) {
        if (!(*e1 == *e2)) out.push_back(build::cond(c, e1, e2));
      }
    }
  }

  std::string y = "y" + std::to_string(ctx.size());
  for (const Type& s : {Type::boolean(), Type::integer(), Type::name()}) {
    Ctx wider = ctx;
    wider.emplace_back(y, s);
    auto bodies = comps(wider, t, d - 1);
    for (const auto& e1 : comps(ctx, s, d - 1)) {
      // Binding an atom only renames it; sums are worth naming.
      if (auto* r = std::get_if<Ret>(&e1->node); r && !std::holds_alternative<Plus>(r->value->node))
        continue;
      bool pure = std::holds_alternative<New>(e1->node);
      for (const auto& e2 : bodies) {
        if (pure && !mentions(*e2, y)) continue;
        out.push_back(build::let(y, e1, e2));
      }
    }
  }
  return out;
}

std::string outcome(const CResult& r) {
  if (r.diverged) return "diverge";
  return to_string(*r.value);
}

}  // namespace

std::vector<ValuePtr> enumerate_observations(const Type& t, int depth) {
  std::vector<ValuePtr> out;
  Ctx ctx{{"x", t}};
  for (auto& body : comps(ctx, Type::boolean(), depth - 1)) {
    out.push_back(build::fun("x", t, std::move(body)));
  }
  return out;
}

Verdict oracle_equiv(const Comp& e, const Comp& e_prime, const Type& t, int depth,
                     std::uint64_t fuel) {
  auto lhs = std::make_shared<const Comp>(e);
  auto rhs = std::make_shared<const Comp>(e_prime);
  std::size_t tried = 0;
  for (const auto& o : enumerate_observations(t, depth)) {
    ++tried;
    auto run = [&](const CompPtr& term) {
      return eval_concrete(CEnv{}, *build::let("r", term, build::app(o, build::var("r"))), 0,
                           fuel);
    };
    std::string a = outcome(run(lhs));
    std::string b = outcome(run(rhs));
    if (a != b) return Distinguished{o, a, b};
  }
  return Unknown{"no observation of depth <= " + std::to_string(depth) + " tells them apart (" +
                 std::to_string(tried) + " tried)"};
}

}  // namespace nu
