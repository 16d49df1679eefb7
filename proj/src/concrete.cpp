// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/concrete.hpp"

#include "nu/error.hpp"
#include "nu/lang.hpp"
#include "overloaded.hpp"

namespace nu {
namespace {

[[noreturn]] void stuck(const std::string& what) { throw Error(ErrorKind::StuckTerm, what); }

std::int64_t as_int(const CValue& v) {
  if (auto* i = std::get_if<CInt>(&v.v)) return i->value;
  stuck("expected an integer, got " + to_string(v));
}

std::int64_t wrapping_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

}  // namespace

CValue eval_concrete_value(const CEnv& env, const Value& v) {
  return std::visit(
      overloaded{
          [&](const Var& x) -> CValue {
            auto it = env.find(x.name);
            if (it == env.end()) stuck("unbound variable " + x.name);
            return it->second;
          },
          [](const BoolLit& b) { return CValue{CBool{b.value}}; },
          [](const IntLit& i) { return CValue{CInt{i.value}}; },
          [&](const Fix& f) {
            return CValue{CClosure{f.fname, f.xname, f.body, std::make_shared<const CEnv>(env)}};
          },
          [&](const Plus& p) {
            return CValue{CInt{wrapping_add(as_int(eval_concrete_value(env, *p.lhs)),
                                            as_int(eval_concrete_value(env, *p.rhs)))}};
          },
          [&](const Equal& p) {
            CValue a = eval_concrete_value(env, *p.lhs);
            CValue b = eval_concrete_value(env, *p.rhs);
            if (auto* n = std::get_if<CName>(&a.v)) {
              auto* m = std::get_if<CName>(&b.v);
              if (!m) stuck("comparing a name with " + to_string(b));
              return CValue{CBool{n->value == m->value}};
            }
            return CValue{CBool{as_int(a) == as_int(b)}};
          },
      },
      v.node);
}

CResult apply_concrete(const CValue& fn, const CValue& arg, Name supply, Fuel& fuel) {
  auto* clo = std::get_if<CClosure>(&fn.v);
  if (!clo) stuck("applying a non-function " + to_string(fn));
  if (!fuel.take()) return CResult::diverge();
  CEnv inner = *clo->env;
  if (!clo->fname.empty()) inner.insert_or_assign(clo->fname, fn);
  inner.insert_or_assign(clo->xname, arg);
  return eval_concrete(inner, *clo->body, supply, fuel);
}

CResult eval_concrete(const CEnv& env, const Comp& e, Name supply, Fuel& fuel) {
  return std::visit(
      overloaded{
          [&](const Ret& r) { return CResult::done(supply, eval_concrete_value(env, *r.value)); },
          [&](const New&) { return CResult::done(supply + 1, CValue{CName{supply}}); },
          [&](const Let& l) {
            CResult first = eval_concrete(env, *l.bound, supply, fuel);
            if (first.diverged) return first;
            CEnv inner = env;
            inner.insert_or_assign(l.name, *first.value);
            return eval_concrete(inner, *l.body, first.supply, fuel);
          },
          [&](const App& a) {
            return apply_concrete(eval_concrete_value(env, *a.fn),
                                  eval_concrete_value(env, *a.arg), supply, fuel);
          },
          [&](const If& i) {
            CValue c = eval_concrete_value(env, *i.cond);
            auto* b = std::get_if<CBool>(&c.v);
            if (!b) stuck("branching on " + to_string(c));
            return eval_concrete(env, b->value ? *i.then_branch : *i.else_branch, supply, fuel);
          },
      },
      e.node);
}

CResult eval_concrete(const CEnv& env, const Comp& e, Name supply, std::uint64_t fuel) {
  Fuel budget(fuel);
  return eval_concrete(env, e, supply, budget);
}

bool operator==(const CValue& a, const CValue& b) {
  if (a.v.index() != b.v.index()) return false;
  return std::visit(
      overloaded{
          [&](const CInt& x) { return x.value == std::get<CInt>(b.v).value; },
          [&](const CBool& x) { return x.value == std::get<CBool>(b.v).value; },
          [&](const CName& x) { return x.value == std::get<CName>(b.v).value; },
          [&](const CClosure& x) {
            const auto& y = std::get<CClosure>(b.v);
            return x.fname == y.fname && x.xname == y.xname && *x.body == *y.body &&
                   *x.env == *y.env;
          },
      },
      a.v);
}

std::string to_string(const CValue& v) {
  return std::visit(overloaded{
                        [](const CInt& i) { return std::to_string(i.value); },
                        [](const CBool& b) { return std::string(b.value ? "true" : "false"); },
                        [](const CName& n) { return "name " + std::to_string(n.value); },
                        [](const CClosure& c) {
                          return "<closure " + (c.fname.empty() ? std::string("fun") : c.fname) +
                                 "(" + c.xname + ")>";
                        },
                    },
                    v.v);
}

}  // namespace nu
