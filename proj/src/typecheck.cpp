// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/error.hpp"
#include "nu/lang.hpp"
#include "overloaded.hpp"

namespace nu {

Context::Context(std::initializer_list<std::pair<std::string, Type>> bindings)
    : bindings_(bindings) {}

Context Context::extended(std::string x, Type t) const {
  Context out = *this;
  out.bindings_.emplace_back(std::move(x), std::move(t));
  return out;
}

const Type* Context::lookup(const std::string& x) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->first == x) return &it->second;
  }
  return nullptr;
}

namespace {

[[noreturn]] void mismatch(const std::string& term, const Type& expected, const Type& actual) {
  throw Error(ErrorKind::TypeError, "in `" + term + "`: expected " + expected.to_string() +
                                        ", got " + actual.to_string());
}

void expect(const Value& v, const Type& expected, const Type& actual) {
  if (!(expected == actual)) mismatch(pretty(v), expected, actual);
}

}  // namespace

Type typecheck_value(const Context& ctx, const Value& v) {
  return std::visit(
      overloaded{
          [&](const Var& x) -> Type {
            const Type* t = ctx.lookup(x.name);
            if (!t) throw Error(ErrorKind::UnboundVariable, x.name);
            return *t;
          },
          [](const BoolLit&) { return Type::boolean(); },
          [](const IntLit&) { return Type::integer(); },
          [&](const Fix& f) -> Type {
            Context inner = ctx;
            if (!f.is_fun()) inner = inner.extended(f.fname, Type::arrow(f.arg, *f.res));
            inner = inner.extended(f.xname, f.arg);
            Type body = typecheck_comp(inner, *f.body);
            if (f.res && !(body == *f.res)) mismatch(pretty(*f.body), *f.res, body);
            return Type::arrow(f.arg, body);
          },
          [&](const Plus& p) {
            expect(*p.lhs, Type::integer(), typecheck_value(ctx, *p.lhs));
            expect(*p.rhs, Type::integer(), typecheck_value(ctx, *p.rhs));
            return Type::integer();
          },
          [&](const Equal& p) {
            Type lhs = typecheck_value(ctx, *p.lhs);
            if (lhs.kind() != Type::Kind::Int && lhs.kind() != Type::Kind::Name) {
              throw Error(ErrorKind::TypeError, "in `" + pretty(v) +
                                                    "`: equality needs int or name operands, got " +
                                                    lhs.to_string());
            }
            expect(*p.rhs, lhs, typecheck_value(ctx, *p.rhs));
            return Type::boolean();
          },
      },
      v.node);
}

Type typecheck_comp(const Context& ctx, const Comp& e) {
  return std::visit(
      overloaded{
          [&](const Ret& r) { return typecheck_value(ctx, *r.value); },
          [](const New&) { return Type::name(); },
          [&](const Let& l) {
            Type bound = typecheck_comp(ctx, *l.bound);
            return typecheck_comp(ctx.extended(l.name, bound), *l.body);
          },
          [&](const App& a) -> Type {
            Type fn = typecheck_value(ctx, *a.fn);
            if (!fn.is_arrow()) {
              throw Error(ErrorKind::TypeError,
                          "in `" + pretty(e) + "`: applying a non-function of type " +
                              fn.to_string());
            }
            expect(*a.arg, fn.arg(), typecheck_value(ctx, *a.arg));
            return fn.res();
          },
          [&](const If& i) {
            expect(*i.cond, Type::boolean(), typecheck_value(ctx, *i.cond));
            Type t = typecheck_comp(ctx, *i.then_branch);
            Type f = typecheck_comp(ctx, *i.else_branch);
            if (!(t == f)) mismatch(pretty(*i.else_branch), t, f);
            return t;
          },
      },
      e.node);
}

}  // namespace nu
