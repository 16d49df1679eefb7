// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/abstract.hpp"

#include "nu/error.hpp"
#include "overloaded.hpp"

namespace nu {
namespace {

[[noreturn]] void stuck(const std::string& what) { throw Error(ErrorKind::StuckTerm, what); }

std::int64_t as_int(const AValue& v) {
  if (auto* i = std::get_if<AInt>(&v.v)) return i->value;
  stuck("expected an integer, got " + to_string(v));
}

std::int64_t wrapping_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

AValue transport_unchecked(const Injection& u, const AValue& a) {
  return std::visit(overloaded{
                        [](const AInt& i) { return AValue{i}; },
                        [](const ABool& b) { return AValue{b}; },
                        [&](const AName& n) { return AValue{AName{u(n.value)}}; },
                        [&](const AClosure& c) {
                          auto env = std::make_shared<AMap>();
                          for (const auto& [x, val] : *c.env) {
                            env->emplace(x, transport_unchecked(u, val));
                          }
                          return AValue{AClosure{c.fname, c.xname, c.body, std::move(env),
                                                 u.cod()}};
                        },
                    },
                    a.v);
}

}  // namespace

bool lives_at(const AValue& a, const World& w) {
  return std::visit(overloaded{
                        [](const AInt&) { return true; },
                        [](const ABool&) { return true; },
                        [&](const AName& n) { return w.contains(n.value); },
                        [&](const AClosure& c) {
                          if (c.world != w) return false;
                          for (const auto& [x, val] : *c.env) {
                            if (!lives_at(val, w)) return false;
                          }
                          return true;
                        },
                    },
                    a.v);
}

AValue transport(const Injection& u, const AValue& a) {
  if (!lives_at(a, u.dom())) {
    throw Error(ErrorKind::WorldMismatch,
                to_string(a) + " does not live at " + u.dom().to_string());
  }
  return transport_unchecked(u, a);
}

AEnv transport(const Injection& u, const AEnv& env) {
  if (env.world != u.dom()) {
    throw Error(ErrorKind::WorldMismatch, "environment lives at " + env.world.to_string() +
                                              ", not " + u.dom().to_string());
  }
  AEnv out{u.cod(), {}};
  for (const auto& [x, val] : env.values) out.values.emplace(x, transport(u, val));
  return out;
}

TValue t_transport(const Injection& u, const TValue& tv) {
  if (tv.is_bottom()) return TValue::bottom();
  const World& w = u.dom();
  const World& w1 = *tv.world;
  if (!w.is_subset_of(w1)) {
    throw Error(ErrorKind::WorldMismatch,
                w1.to_string() + " does not extend " + w.to_string());
  }
  // Completing (u, i) with the canonical choice puts the inclusion on the
  // u.cod() side; the other leg is u1: w1 -> q1.
  PullbackSquare sq = complete_span_minimal(u, Injection::inclusion(w, w1));
  return TValue::done(sq.apex, transport(sq.right_up, *tv.value));
}

AValue eval_abstract_value(const World& w, const AEnv& env, const Value& v) {
  return std::visit(
      overloaded{
          [&](const Var& x) -> AValue {
            auto it = env.values.find(x.name);
            if (it == env.values.end()) stuck("unbound variable " + x.name);
            return it->second;
          },
          [](const BoolLit& b) { return AValue{ABool{b.value}}; },
          [](const IntLit& i) { return AValue{AInt{i.value}}; },
          [&](const Fix& f) {
            return AValue{AClosure{f.fname, f.xname, f.body,
                                   std::make_shared<const AMap>(env.values), w}};
          },
          [&](const Plus& p) {
            return AValue{AInt{wrapping_add(as_int(eval_abstract_value(w, env, *p.lhs)),
                                            as_int(eval_abstract_value(w, env, *p.rhs)))}};
          },
          [&](const Equal& p) {
            AValue a = eval_abstract_value(w, env, *p.lhs);
            AValue b = eval_abstract_value(w, env, *p.rhs);
            if (auto* n = std::get_if<AName>(&a.v)) {
              auto* m = std::get_if<AName>(&b.v);
              if (!m) stuck("comparing a name with " + to_string(b));
              return AValue{ABool{n->value == m->value}};
            }
            return AValue{ABool{as_int(a) == as_int(b)}};
          },
      },
      v.node);
}

TValue apply_abstract(const World& w, const AValue& fn, const AValue& arg, Fuel& fuel) {
  auto* clo = std::get_if<AClosure>(&fn.v);
  if (!clo) stuck("applying a non-function " + to_string(fn));
  if (clo->world != w) {
    throw Error(ErrorKind::WorldMismatch, "closure lives at " + clo->world.to_string() +
                                              ", applied at " + w.to_string());
  }
  if (!fuel.take()) return TValue::bottom();
  AEnv inner{w, *clo->env};
  if (!clo->fname.empty()) inner.values.insert_or_assign(clo->fname, fn);
  inner.values.insert_or_assign(clo->xname, arg);
  return eval_abstract(w, inner, *clo->body, fuel);
}

TValue eval_abstract(const World& w, const AEnv& env, const Comp& e, Fuel& fuel) {
  return std::visit(
      overloaded{
          [&](const Ret& r) { return TValue::done(w, eval_abstract_value(w, env, *r.value)); },
          [&](const New&) {
            Name n = w.next_fresh();
            return TValue::done(w.with(n), AValue{AName{n}});
          },
          [&](const Let& l) {
            TValue first = eval_abstract(w, env, *l.bound, fuel);
            if (first.is_bottom()) return first;
            const World& w1 = *first.world;
            // Strength: move the environment up to w1 before binding.
            AEnv inner = w1 == w ? env : transport(Injection::inclusion(w, w1), env);
            inner.values.insert_or_assign(l.name, *first.value);
            // Multiplication: the inner extension is the result.
            return eval_abstract(w1, inner, *l.body, fuel);
          },
          [&](const App& a) {
            return apply_abstract(w, eval_abstract_value(w, env, *a.fn),
                                  eval_abstract_value(w, env, *a.arg), fuel);
          },
          [&](const If& i) {
            AValue c = eval_abstract_value(w, env, *i.cond);
            auto* b = std::get_if<ABool>(&c.v);
            if (!b) stuck("branching on " + to_string(c));
            return eval_abstract(w, env, b->value ? *i.then_branch : *i.else_branch, fuel);
          },
      },
      e.node);
}

TValue eval_abstract(const World& w, const AEnv& env, const Comp& e, std::uint64_t fuel) {
  if (env.world != w) {
    throw Error(ErrorKind::WorldMismatch, "environment lives at " + env.world.to_string() +
                                              ", evaluating at " + w.to_string());
  }
  Fuel budget(fuel);
  return eval_abstract(w, env, e, budget);
}

bool operator==(const AValue& a, const AValue& b) {
  if (a.v.index() != b.v.index()) return false;
  return std::visit(
      overloaded{
          [&](const AInt& x) { return x.value == std::get<AInt>(b.v).value; },
          [&](const ABool& x) { return x.value == std::get<ABool>(b.v).value; },
          [&](const AName& x) { return x.value == std::get<AName>(b.v).value; },
          [&](const AClosure& x) {
            const auto& y = std::get<AClosure>(b.v);
            return x.fname == y.fname && x.xname == y.xname && x.world == y.world &&
                   *x.body == *y.body && *x.env == *y.env;
          },
      },
      a.v);
}

bool operator==(const TValue& a, const TValue& b) {
  return a.world == b.world && a.value == b.value;
}

std::string to_string(const AValue& v) {
  return std::visit(overloaded{
                        [](const AInt& i) { return std::to_string(i.value); },
                        [](const ABool& b) { return std::string(b.value ? "true" : "false"); },
                        [](const AName& n) { return "name " + std::to_string(n.value); },
                        [](const AClosure& c) {
                          return "<closure " + (c.fname.empty() ? std::string("fun") : c.fname) +
                                 "(" + c.xname + ") @" + c.world.to_string() + ">";
                        },
                    },
                    v.v);
}

std::string to_string(const TValue& v) {
  if (v.is_bottom()) return "bottom";
  return "(" + v.world->to_string() + ", " + to_string(*v.value) + ")";
}

}  // namespace nu
