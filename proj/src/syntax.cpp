// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/syntax.hpp"

#include <algorithm>
#include <set>

#include "nu/error.hpp"
#include "overloaded.hpp"

namespace nu {

Type Type::arrow(Type arg, Type res) {
  Type t(Kind::Arrow);
  t.parts_ = std::make_shared<const std::pair<Type, Type>>(std::move(arg), std::move(res));
  return t;
}

const Type& Type::arg() const {
  if (!parts_) throw Error(ErrorKind::TypeError, to_string() + " is not a function type");
  return parts_->first;
}

const Type& Type::res() const {
  if (!parts_) throw Error(ErrorKind::TypeError, to_string() + " is not a function type");
  return parts_->second;
}

bool operator==(const Type& a, const Type& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Type::Kind::Arrow) return true;
  return a.arg() == b.arg() && a.res() == b.res();
}

std::string Type::to_string() const {
  switch (kind_) {
    case Kind::Int: return "int";
    case Kind::Bool: return "bool";
    case Kind::Name: return "name";
    case Kind::Arrow: {
      std::string lhs = arg().to_string();
      if (arg().is_arrow()) lhs = "(" + lhs + ")";
      return lhs + " -> " + res().to_string();
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

bool same(const ValuePtr& a, const ValuePtr& b) { return a == b || *a == *b; }
bool same(const CompPtr& a, const CompPtr& b) { return a == b || *a == *b; }

}  // namespace

bool operator==(const Value& a, const Value& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& x) { return x.name == std::get<Var>(b.node).name; },
          [&](const BoolLit& x) { return x.value == std::get<BoolLit>(b.node).value; },
          [&](const IntLit& x) { return x.value == std::get<IntLit>(b.node).value; },
          [&](const Fix& x) {
            const auto& y = std::get<Fix>(b.node);
            return x.fname == y.fname && x.xname == y.xname && x.arg == y.arg &&
                   x.res == y.res && same(x.body, y.body);
          },
          [&](const Plus& x) {
            const auto& y = std::get<Plus>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
          [&](const Equal& x) {
            const auto& y = std::get<Equal>(b.node);
            return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
      },
      a.node);
}

bool operator==(const Comp& a, const Comp& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Ret& x) { return same(x.value, std::get<Ret>(b.node).value); },
          [&](const New&) { return true; },
          [&](const Let& x) {
            const auto& y = std::get<Let>(b.node);
            return x.name == y.name && same(x.bound, y.bound) && same(x.body, y.body);
          },
          [&](const App& x) {
            const auto& y = std::get<App>(b.node);
            return same(x.fn, y.fn) && same(x.arg, y.arg);
          },
          [&](const If& x) {
            const auto& y = std::get<If>(b.node);
            return same(x.cond, y.cond) && same(x.then_branch, y.then_branch) &&
                   same(x.else_branch, y.else_branch);
          },
      },
      a.node);
}

namespace build {

ValuePtr var(std::string name) { return std::make_shared<Value>(Value{Var{std::move(name)}}); }
ValuePtr boolean(bool b) { return std::make_shared<Value>(Value{BoolLit{b}}); }
ValuePtr integer(std::int64_t i) { return std::make_shared<Value>(Value{IntLit{i}}); }
ValuePtr fix(std::string f, std::string x, Type arg, Type res, CompPtr body) {
  return std::make_shared<Value>(
      Value{Fix{std::move(f), std::move(x), std::move(arg), std::move(res), std::move(body)}});
}
ValuePtr fun(std::string x, Type arg, CompPtr body) {
  return std::make_shared<Value>(
      Value{Fix{"", std::move(x), std::move(arg), std::nullopt, std::move(body)}});
}
ValuePtr plus(ValuePtr a, ValuePtr b) {
  return std::make_shared<Value>(Value{Plus{std::move(a), std::move(b)}});
}
ValuePtr equal(ValuePtr a, ValuePtr b) {
  return std::make_shared<Value>(Value{Equal{std::move(a), std::move(b)}});
}

CompPtr ret(ValuePtr v) { return std::make_shared<Comp>(Comp{Ret{std::move(v)}}); }
CompPtr fresh() { return std::make_shared<Comp>(Comp{New{}}); }
CompPtr let(std::string x, CompPtr bound, CompPtr body) {
  return std::make_shared<Comp>(Comp{Let{std::move(x), std::move(bound), std::move(body)}});
}
CompPtr app(ValuePtr f, ValuePtr a) {
  return std::make_shared<Comp>(Comp{App{std::move(f), std::move(a)}});
}
CompPtr cond(ValuePtr c, CompPtr then_branch, CompPtr else_branch) {
  return std::make_shared<Comp>(
      Comp{If{std::move(c), std::move(then_branch), std::move(else_branch)}});
}

}  // namespace build

// ---------------------------------------------------------------------------

namespace {

using Bound = std::vector<std::string>;

bool is_bound(const Bound& bound, const std::string& x) {
  return std::find(bound.begin(), bound.end(), x) != bound.end();
}

void collect(const Comp& e, Bound& bound, std::set<std::string>& out);

void collect(const Value& v, Bound& bound, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Var& x) {
                   if (!is_bound(bound, x.name)) out.insert(x.name);
                 },
                 [&](const BoolLit&) {},
                 [&](const IntLit&) {},
                 [&](const Fix& f) {
                   bound.push_back(f.fname);
                   bound.push_back(f.xname);
                   collect(*f.body, bound, out);
                   bound.pop_back();
                   bound.pop_back();
                 },
                 [&](const Plus& p) {
                   collect(*p.lhs, bound, out);
                   collect(*p.rhs, bound, out);
                 },
                 [&](const Equal& p) {
                   collect(*p.lhs, bound, out);
                   collect(*p.rhs, bound, out);
                 },
             },
             v.node);
}

void collect(const Comp& e, Bound& bound, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Ret& r) { collect(*r.value, bound, out); },
                 [&](const New&) {},
                 [&](const Let& l) {
                   collect(*l.bound, bound, out);
                   bound.push_back(l.name);
                   collect(*l.body, bound, out);
                   bound.pop_back();
                 },
                 [&](const App& a) {
                   collect(*a.fn, bound, out);
                   collect(*a.arg, bound, out);
                 },
                 [&](const If& i) {
                   collect(*i.cond, bound, out);
                   collect(*i.then_branch, bound, out);
                   collect(*i.else_branch, bound, out);
                 },
             },
             e.node);
}

}  // namespace

std::vector<std::string> free_vars(const Comp& e) {
  Bound bound;
  std::set<std::string> out;
  collect(e, bound, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> free_vars(const Value& v) {
  Bound bound;
  std::set<std::string> out;
  collect(v, bound, out);
  return {out.begin(), out.end()};
}

int depth(const Value& v) {
  return std::visit(overloaded{
                        [](const Var&) { return 1; },
                        [](const BoolLit&) { return 1; },
                        [](const IntLit&) { return 1; },
                        [](const Fix& f) { return 1 + depth(*f.body); },
                        [](const Plus& p) { return 1 + std::max(depth(*p.lhs), depth(*p.rhs)); },
                        [](const Equal& p) { return 1 + std::max(depth(*p.lhs), depth(*p.rhs)); },
                    },
                    v.node);
}

int depth(const Comp& e) {
  return std::visit(
      overloaded{
          [](const Ret& r) { return depth(*r.value); },
          [](const New&) { return 1; },
          [](const Let& l) { return 1 + std::max(depth(*l.bound), depth(*l.body)); },
          [](const App& a) { return 1 + std::max(depth(*a.fn), depth(*a.arg)); },
          [](const If& i) {
            return 1 + std::max({depth(*i.cond), depth(*i.then_branch), depth(*i.else_branch)});
          },
      },
      e.node);
}

}  // namespace nu
