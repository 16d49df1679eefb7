// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/corpus.hpp"

#include <random>
#include <utility>

#include "overloaded.hpp"

namespace nu {
namespace {

using namespace build;

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  // std's distributions differ between standard libraries; this does not.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(std::size_t percent) { return below(100) < percent; }

  Type ground() {
    switch (below(3)) {
      case 0:
        return Type::integer();
      case 1:
        return Type::boolean();
      default:
        return Type::name();
    }
  }

  std::string fresh_var() { return "v" + std::to_string(counter_++); }

  void push(std::string x, Type t) { ctx_.emplace_back(std::move(x), std::move(t)); }
  void pop() { ctx_.pop_back(); }

  std::vector<std::string> vars_of(const Type& t) const {
    std::vector<std::string> out;
    for (const auto& [x, xt] : ctx_) {
      if (xt == t) out.push_back(x);
    }
    return out;
  }

  std::vector<std::pair<std::string, Type>> functions_to(const Type& t) const {
    std::vector<std::pair<std::string, Type>> out;
    for (const auto& [x, xt] : ctx_) {
      if (xt.is_arrow() && xt.res() == t) out.emplace_back(x, xt);
    }
    return out;
  }

  ValuePtr pick_var(const std::vector<std::string>& xs) { return var(xs[below(xs.size())]); }

  ValuePtr literal(const Type& t) {
    if (t.kind() == Type::Kind::Bool) return boolean(below(2) == 1);
    return integer(static_cast<std::int64_t>(below(9)) - 3);
  }

  /// Value of ground type t without nesting; nullopt for name with no name
  /// in scope.
  ValuePtr atom(const Type& t) {
    auto xs = vars_of(t);
    if (t.kind() == Type::Kind::Name) return xs.empty() ? nullptr : pick_var(xs);
    if (!xs.empty() && chance(50)) return pick_var(xs);
    return literal(t);
  }

  ValuePtr value(const Type& t, int d) {
    if (t.is_arrow()) {
      auto xs = vars_of(t);
      if (!xs.empty() && chance(50)) return pick_var(xs);
      std::string x = fresh_var();
      push(x, t.arg());
      CompPtr body = comp(t.res(), d - 1);
      pop();
      return fun(x, t.arg(), body);
    }
    if (d >= 2 && t.kind() == Type::Kind::Int && chance(35)) {
      return plus(value(t, d - 1), value(t, d - 1));
    }
    if (d >= 2 && t.kind() == Type::Kind::Bool && chance(45)) {
      auto names = vars_of(Type::name());
      if (names.size() >= 1 && chance(60)) return equal(pick_var(names), pick_var(names));
      return equal(value(Type::integer(), d - 1), atom(Type::integer()));
    }
    return atom(t);
  }

  CompPtr leaf(const Type& t) {
    if (t.kind() == Type::Kind::Name) {
      auto xs = vars_of(t);
      if (xs.empty() || chance(30)) return fresh();
      return ret(pick_var(xs));
    }
    return ret(value(t, 1));
  }

  CompPtr comp(const Type& t, int d) {
    if (d <= 1 || t.is_arrow()) {
      if (t.is_arrow()) return ret(value(t, std::max(d, 2)));
      return leaf(t);
    }
    switch (below(11)) {
      case 0:
      case 1:
        if (t.kind() != Type::Kind::Name) return ret(value(t, d));
        return leaf(t);
      case 2:
      case 3:
      case 4: {
        Type s = d >= 3 && chance(12) ? Type::arrow(Type::name(), Type::boolean()) : ground();
        if (s.kind() == Type::Kind::Name && chance(50)) {
          std::string x = fresh_var();
          push(x, s);
          CompPtr body = comp(t, d - 1);
          pop();
          return let(x, fresh(), body);
        }
        CompPtr bound = comp(s, d - 1);
        std::string x = fresh_var();
        push(x, s);
        CompPtr body = comp(t, d - 1);
        pop();
        return let(x, bound, body);
      }
      case 5:
        return cond(value(Type::boolean(), std::min(d - 1, 2)), comp(t, d - 1), comp(t, d - 1));
      case 6:
      case 7: {
        auto fs = functions_to(t);
        if (!fs.empty()) {
          const auto& [f, ft] = fs[below(fs.size())];
          if (ft.arg().is_ground()) {
            if (ValuePtr a = atom(ft.arg())) return app(var(f), a);
          }
        }
        if (d < 3) return leaf(t);
        Type s = ground();
        ValuePtr a = atom(s);
        if (!a) return leaf(t);
        std::string x = fresh_var();
        push(x, s);
        CompPtr body = comp(t, d - 2);
        pop();
        return app(fun(x, s, body), a);
      }
      case 8:
      case 9:
        if (d >= 7) return counted_loop(t, d);
        return leaf(t);
      default:
        if (d >= 3) return open_recursion(t, d);
        return leaf(t);
    }
  }

  // fix f(n:int):t. if n = 0 then base else let r = f (n + -1) in step
  CompPtr counted_loop(const Type& t, int d) {
    std::string f = fresh_var();
    std::string n = fresh_var();
    std::string r = fresh_var();
    push(f, Type::arrow(Type::integer(), t));
    push(n, Type::integer());
    CompPtr base = comp(t, d - 3);
    push(r, t);
    CompPtr step = comp(t, d - 4);
    pop();
    pop();
    pop();
    CompPtr body = cond(equal(var(n), integer(0)), base,
                        let(r, app(var(f), plus(var(n), integer(-1))), step));
    return app(fix(f, n, Type::integer(), t, body),
               integer(static_cast<std::int64_t>(below(4))));
  }

  // A recursive function whose body may or may not call itself, so it may
  // not terminate.
  CompPtr open_recursion(const Type& t, int d) {
    std::string f = fresh_var();
    std::string n = fresh_var();
    push(f, Type::arrow(Type::integer(), t));
    push(n, Type::integer());
    CompPtr body = comp(t, d - 2);
    pop();
    pop();
    return app(fix(f, n, Type::integer(), t, body), literal(Type::integer()));
  }

  GeneratedTerm closed(int depth) {
    ctx_.clear();
    counter_ = 0;
    Type t = depth <= 1 ? (below(2) == 0 ? Type::integer() : Type::boolean()) : ground();
    return {comp(t, depth), t};
  }

  CompPtr open(const Type& t, int depth) { return comp(t, depth); }

  void reset(std::vector<std::pair<std::string, Type>> ctx) {
    ctx_ = std::move(ctx);
    counter_ = 0;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::pair<std::string, Type>> ctx_;
  std::size_t counter_ = 0;
};

/// Rebuilds a term with its `target`-th literal (in traversal order) bumped:
/// integers by one, booleans negated.
class Mutator {
 public:
  explicit Mutator(std::size_t target) : target_(target) {}

  std::size_t seen() const { return seen_; }

  ValuePtr value(const ValuePtr& v) {
    return std::visit(
        overloaded{
            [&](const Var&) { return v; },
            [&](const BoolLit& b) { return hit() ? boolean(!b.value) : v; },
            [&](const IntLit& i) { return hit() ? integer(i.value + 1) : v; },
            [&](const Fix& f) {
              Fix g = f;
              g.body = comp(f.body);
              return std::make_shared<const Value>(Value{std::move(g)});
            },
            [&](const Plus& p) {
              ValuePtr a = value(p.lhs);
              return plus(a, value(p.rhs));
            },
            [&](const Equal& p) {
              ValuePtr a = value(p.lhs);
              return equal(a, value(p.rhs));
            },
        },
        v->node);
  }

  CompPtr comp(const CompPtr& e) {
    return std::visit(overloaded{
                          [&](const Ret& r) { return ret(value(r.value)); },
                          [&](const New&) { return e; },
                          [&](const Let& l) {
                            CompPtr b = comp(l.bound);
                            return let(l.name, b, comp(l.body));
                          },
                          [&](const App& a) {
                            ValuePtr f = value(a.fn);
                            return app(f, value(a.arg));
                          },
                          [&](const If& i) {
                            ValuePtr c = value(i.cond);
                            CompPtr t = comp(i.then_branch);
                            return cond(c, t, comp(i.else_branch));
                          },
                      },
                      e->node);
  }

 private:
  bool hit() { return seen_++ == target_; }

  std::size_t target_;
  std::size_t seen_ = 0;
};

}  // namespace

std::vector<GeneratedTerm> gen_corpus(std::uint64_t seed, std::size_t count, int depth) {
  Generator g(seed);
  std::vector<GeneratedTerm> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(g.closed(depth));
  return out;
}

std::vector<TermPair> gen_pairs(std::uint64_t seed, std::size_t count, int depth) {
  Generator g(seed);
  std::vector<TermPair> out;
  const Type name_to_bool = Type::arrow(Type::name(), Type::boolean());
  for (std::size_t i = 0; out.size() < count; ++i) {
    switch (i % 5) {
      case 0: {
        GeneratedTerm e = g.closed(depth);
        out.push_back({let("z", fresh(), e.term), e.term, e.type, "drop"});
        break;
      }
      case 1: {
        Type t = g.ground();
        g.reset({{"a", Type::name()}, {"b", Type::name()}});
        CompPtr body = g.open(t, depth);
        out.push_back({let("a", fresh(), let("b", fresh(), body)),
                       let("b", fresh(), let("a", fresh(), body)), t, "swap"});
        break;
      }
      case 2: {
        // The hidden name never reaches the caller, so the test on it is
        // always false.
        g.reset({{"x", Type::name()}});
        CompPtr other = g.open(Type::boolean(), std::max(depth - 2, 1));
        g.reset({{"x", Type::name()}, {"n", Type::name()}});
        CompPtr taken = g.open(Type::boolean(), std::max(depth - 2, 1));
        CompPtr lhs =
            let("n", fresh(),
                ret(fun("x", Type::name(), cond(equal(var("x"), var("n")), taken, other))));
        out.push_back({lhs, ret(fun("x", Type::name(), other)), name_to_bool, "private"});
        break;
      }
      case 3: {
        GeneratedTerm a = g.closed(depth);
        GeneratedTerm b = g.closed(depth);
        for (int tries = 0; tries < 8 && !(b.type == a.type); ++tries) b = g.closed(depth);
        if (!(b.type == a.type)) break;
        out.push_back({a.term, b.term, a.type, "random"});
        break;
      }
      default: {
        GeneratedTerm e = g.closed(depth);
        Mutator count_literals(static_cast<std::size_t>(-1));
        count_literals.comp(e.term);
        if (count_literals.seen() == 0) break;
        Mutator m(g.below(count_literals.seen()));
        out.push_back({e.term, m.comp(e.term), e.type, "mutant"});
        break;
      }
    }
  }
  return out;
}

}  // namespace nu
