// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/lang.hpp"
#include "overloaded.hpp"

namespace nu {
namespace {

bool is_atomic(const Value& v) {
  return std::holds_alternative<Var>(v.node) || std::holds_alternative<BoolLit>(v.node) ||
         std::holds_alternative<IntLit>(v.node);
}

std::string atom(const Value& v) {
  std::string s = pretty(v);
  return is_atomic(v) ? s : "(" + s + ")";
}

// Operand of '+': atoms only, except a left-nested sum.
std::string sum_operand(const Value& v, bool left) {
  if (left && std::holds_alternative<Plus>(v.node)) return pretty(v);
  return atom(v);
}

std::string eq_operand(const Value& v) {
  if (std::holds_alternative<Plus>(v.node)) return pretty(v);
  return atom(v);
}

}  // namespace

std::string pretty(const Value& v) {
  return std::visit(
      overloaded{
          [](const Var& x) { return x.name; },
          [](const BoolLit& b) { return std::string(b.value ? "true" : "false"); },
          [](const IntLit& i) { return std::to_string(i.value); },
          [](const Fix& f) {
            if (f.is_fun()) {
              return "fun (" + f.xname + ":" + f.arg.to_string() + "). " + pretty(*f.body);
            }
            return "fix " + f.fname + "(" + f.xname + ":" + f.arg.to_string() +
                   "):" + f.res->to_string() + ". " + pretty(*f.body);
          },
          [](const Plus& p) { return sum_operand(*p.lhs, true) + " + " + sum_operand(*p.rhs, false); },
          [](const Equal& p) { return eq_operand(*p.lhs) + " = " + eq_operand(*p.rhs); },
      },
      v.node);
}

std::string pretty(const Comp& e) {
  return std::visit(
      overloaded{
          [](const Ret& r) { return pretty(*r.value); },
          [](const New&) { return std::string("new"); },
          [](const Let& l) {
            return "let " + l.name + " = " + pretty(*l.bound) + " in " + pretty(*l.body);
          },
          [](const App& a) { return atom(*a.fn) + " " + atom(*a.arg); },
          [](const If& i) {
            std::string c = std::holds_alternative<Fix>(i.cond->node) ? atom(*i.cond)
                                                                      : pretty(*i.cond);
            return "if " + c + " then " + pretty(*i.then_branch) + " else " +
                   pretty(*i.else_branch);
          },
      },
      e.node);
}

}  // namespace nu
