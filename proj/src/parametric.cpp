// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "nu/equiv.hpp"
#include "nu/error.hpp"

namespace nu {
namespace {

bool apply_bool(const AValue& fn, const World& world, Name n, std::uint64_t fuel) {
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

void require_endpoints(const Span& s, const AValue& a, const AValue& a_prime) {
  if (!lives_at(a, s.left()) || !lives_at(a_prime, s.right())) {
    throw Error(ErrorKind::WorldMismatch,
                to_string(a) + " and " + to_string(a_prime) + " do not live over " + s.to_string());
  }
}

std::optional<bool> agreed_at(const ParamWitness& w, const World& low, Name n) {
  if (!low.contains(n)) return std::nullopt;
  std::size_t i = low.index_of(n);
  if (i >= w.agreed.size()) return std::nullopt;
  return w.agreed[i];
}

// Chases every element of the composite low point back to the first span's
// low point and copies the agreed table value from there.
std::optional<ParamWitness> compose_value_witness(const Span& s, const Span& s_prime,
                                                  const ParamWitness& w,
                                                  const ParamWitness& w_prime) {
  if (w.evidence != w_prime.evidence) return std::nullopt;
  ParamWitness out{std::nullopt, w.evidence, {}};
  if (w.evidence != ParamWitness::Evidence::Tables) return out;
  PullbackSquare sq = pullback_cospan(s.u_prime(), s_prime.u());
  for (Name n : sq.low) {
    auto left = agreed_at(w, s.low(), sq.left_down(n));
    auto right = agreed_at(w_prime, s_prime.low(), sq.right_down(n));
    if (!left || !right || *left != *right) return std::nullopt;
    out.agreed.push_back(*left);
  }
  return out;
}

// Order-reversing permutation of a world, as an injection into `cod`.
Injection reversed_into(const World& w, const World& cod) {
  std::vector<std::pair<Name, Name>> pairs;
  const auto& ns = w.names();
  for (std::size_t i = 0; i < ns.size(); ++i) pairs.emplace_back(ns[i], ns[ns.size() - 1 - i]);
  return Injection(w, cod, pairs);
}

World grow(const World& w, unsigned count) {
  std::vector<Name> names = w.names();
  Name base = w.next_fresh();
  for (unsigned k = 0; k < count; ++k) names.push_back(base + k);
  return World(names);
}

}  // namespace

std::optional<ParamWitness> param_relate(const Span& s, const AValue& a, const AValue& a_prime,
                                         const Type& t, std::uint64_t fuel) {
  require_fragment(t);
  require_endpoints(s, a, a_prime);
  using E = ParamWitness::Evidence;
  switch (t.kind()) {
    case Type::Kind::Int:
    case Type::Kind::Bool:
      if (a.v.index() != a_prime.v.index()) {
        throw Error(ErrorKind::TypeError, "payloads of different shapes");
      }
      if (!(a == a_prime)) return std::nullopt;
      return ParamWitness{std::nullopt, E::Star, {}};
    case Type::Kind::Name: {
      auto* n = std::get_if<AName>(&a.v);
      auto* m = std::get_if<AName>(&a_prime.v);
      if (!n || !m) throw Error(ErrorKind::TypeError, "expected names");
      for (Name l : s.low()) {
        if (s.u()(l) == n->value && s.u_prime()(l) == m->value) {
          return ParamWitness{std::nullopt, E::Star, {}};
        }
      }
      return std::nullopt;
    }
    case Type::Kind::Arrow: {
      ParamWitness w{std::nullopt, E::Tables, {}};
      for (Name l : s.low()) {
        bool lhs = apply_bool(a, s.left(), s.u()(l), fuel);
        bool rhs = apply_bool(a_prime, s.right(), s.u_prime()(l), fuel);
        if (lhs != rhs) return std::nullopt;
        w.agreed.push_back(lhs);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::vector<Span> extension_candidates(const Span& s, const World& w1, const World& w1_prime,
                                       std::size_t limit) {
  if (!s.left().is_subset_of(w1) || !s.right().is_subset_of(w1_prime)) {
    throw Error(ErrorKind::ShapeMismatch,
                w1.to_string() + " <-> " + w1_prime.to_string() + " does not extend " +
                    s.to_string());
  }
  const std::vector<Name> fresh = w1.minus(s.left()).names();
  const std::vector<Name> fresh_prime = w1_prime.minus(s.right()).names();
  const auto base = s.links();
  std::vector<Span> out;
  std::vector<std::pair<Name, Name>> extra;
  std::vector<bool> taken(fresh_prime.size(), false);

  auto emit = [&]() {
    auto links = base;
    links.insert(links.end(), extra.begin(), extra.end());
    out.push_back(span_from_links(w1, w1_prime, links));
  };
  auto search = [&](auto&& self, std::size_t i, std::size_t want) -> void {
    if (out.size() >= limit) return;
    if (extra.size() == want) {
      emit();
      return;
    }
    if (fresh.size() - i < want - extra.size()) return;
    for (std::size_t j = 0; j < fresh_prime.size(); ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      extra.emplace_back(fresh[i], fresh_prime[j]);
      self(self, i + 1, want);
      extra.pop_back();
      taken[j] = false;
      if (out.size() >= limit) return;
    }
    self(self, i + 1, want);
  };
  std::size_t most = std::min(fresh.size(), fresh_prime.size());
  for (std::size_t k = 0; k <= most && out.size() < limit; ++k) search(search, 0, k);
  return out;
}

std::optional<ParamWitness> param_relate_t(const Span& s, const TValue& tv,
                                           const TValue& tv_prime, const Type& t,
                                           std::size_t budget, std::uint64_t fuel) {
  require_fragment(t);
  if (tv.is_bottom() && tv_prime.is_bottom()) {
    return ParamWitness{std::nullopt, ParamWitness::Evidence::Bottom, {}};
  }
  if (tv.is_bottom() || tv_prime.is_bottom()) return std::nullopt;
  Injection top = Injection::inclusion(s.left(), *tv.world);
  Injection bottom = Injection::inclusion(s.right(), *tv_prime.world);
  for (const Span& s1 : extension_candidates(s, *tv.world, *tv_prime.world, budget)) {
    if (!check_parametric_square(top, bottom, s, s1)) continue;
    if (auto inner = param_relate(s1, *tv.value, *tv_prime.value, t, fuel)) {
      inner->span = s1;
      return inner;
    }
  }
  return std::nullopt;
}

bool verify_param(const Span& s, const AValue& a, const AValue& a_prime, const Type& t,
                  const ParamWitness& witness, std::uint64_t fuel) {
  auto fresh = param_relate(s, a, a_prime, t, fuel);
  return fresh && fresh->evidence == witness.evidence && fresh->agreed == witness.agreed;
}

bool verify_param_t(const Span& s, const TValue& tv, const TValue& tv_prime, const Type& t,
                    const ParamWitness& witness, std::uint64_t fuel) {
  require_fragment(t);
  if (witness.evidence == ParamWitness::Evidence::Bottom) {
    return tv.is_bottom() && tv_prime.is_bottom();
  }
  if (tv.is_bottom() || tv_prime.is_bottom() || !witness.span) return false;
  const Span& s1 = *witness.span;
  if (s1.left() != *tv.world || s1.right() != *tv_prime.world) return false;
  if (!s.left().is_subset_of(s1.left()) || !s.right().is_subset_of(s1.right())) return false;
  if (!check_parametric_square(Injection::inclusion(s.left(), s1.left()),
                               Injection::inclusion(s.right(), s1.right()), s, s1)) {
    return false;
  }
  return verify_param(s1, *tv.value, *tv_prime.value, t, witness, fuel);
}

ParamWitness param_reverse(const ParamWitness& witness) {
  ParamWitness out = witness;
  if (out.span) out.span = reverse_span(*out.span);
  return out;
}

std::optional<ParamWitness> param_compose(const Span& s, const Span& s_prime, const AValue& a,
                                          const AValue& a_mid, const AValue& a_last,
                                          const Type& t, const ParamWitness& witness,
                                          const ParamWitness& witness_prime,
                                          std::uint64_t fuel) {
  if (s.right() != s_prime.left()) {
    throw Error(ErrorKind::MiddleMismatch,
                s.right().to_string() + " vs " + s_prime.left().to_string());
  }
  if (!verify_param(s, a, a_mid, t, witness, fuel) ||
      !verify_param(s_prime, a_mid, a_last, t, witness_prime, fuel)) {
    return std::nullopt;
  }
  auto composite = compose_value_witness(s, s_prime, witness, witness_prime);
  if (!composite) return std::nullopt;
  if (!verify_param(compose_spans(s, s_prime), a, a_last, t, *composite, fuel)) {
    return std::nullopt;
  }
  return composite;
}

std::optional<ParamWitness> param_compose_t(const Span& s, const Span& s_prime,
                                            const TValue& tv, const TValue& tv_mid,
                                            const TValue& tv_last, const Type& t,
                                            const ParamWitness& witness,
                                            const ParamWitness& witness_prime,
                                            std::uint64_t fuel) {
  if (s.right() != s_prime.left()) {
    throw Error(ErrorKind::MiddleMismatch,
                s.right().to_string() + " vs " + s_prime.left().to_string());
  }
  using E = ParamWitness::Evidence;
  if (witness.evidence == E::Bottom || witness_prime.evidence == E::Bottom) {
    if (witness.evidence != witness_prime.evidence) return std::nullopt;
    ParamWitness out{std::nullopt, E::Bottom, {}};
    if (!verify_param_t(compose_spans(s, s_prime), tv, tv_last, t, out, fuel)) return std::nullopt;
    return out;
  }
  if (!witness.span || !witness_prime.span) return std::nullopt;
  const Span& s1 = *witness.span;
  const Span& s1p = *witness_prime.span;
  if (s1.right() != s1p.left()) {
    throw Error(ErrorKind::MiddleMismatch,
                s1.right().to_string() + " vs " + s1p.left().to_string());
  }
  if (!verify_param_t(s, tv, tv_mid, t, witness, fuel) ||
      !verify_param_t(s_prime, tv_mid, tv_last, t, witness_prime, fuel)) {
    return std::nullopt;
  }
  auto composite = compose_value_witness(s1, s1p, witness, witness_prime);
  if (!composite) return std::nullopt;
  composite->span = compose_spans(s1, s1p);
  if (!verify_param_t(compose_spans(s, s_prime), tv, tv_last, t, *composite, fuel)) {
    return std::nullopt;
  }
  return composite;
}

SweepResult param_sweep(const Span& s1, const AValue& a, const AValue& a_prime, const Type& t,
                        unsigned ext, std::uint64_t fuel) {
  SweepResult result;
  const World& w1 = s1.left();
  const World& w1p = s1.right();
  const auto old_links = s1.links();
  for (bool reverse : {false, true}) {
    for (unsigned common = 0; common <= ext; ++common) {
      for (unsigned garbage = 0; garbage <= ext; ++garbage) {
        for (unsigned garbage_prime = 0; garbage_prime <= ext; ++garbage_prime) {
          World left = grow(w1, common + garbage);
          World right = grow(w1p, common + garbage_prime);
          Injection top = reverse ? reversed_into(w1, left) : Injection::inclusion(w1, left);
          Injection bottom =
              reverse ? reversed_into(w1p, right) : Injection::inclusion(w1p, right);
          std::vector<std::pair<Name, Name>> links;
          for (auto [l, r] : old_links) links.emplace_back(top(l), bottom(r));
          for (unsigned k = 0; k < common; ++k) {
            links.emplace_back(w1.next_fresh() + k, w1p.next_fresh() + k);
          }
          Span s2 = span_from_links(left, right, links);
          ++result.checked;
          if (!check_parametric_square(top, bottom, s1, s2) ||
              !param_relate(s2, transport(top, a), transport(bottom, a_prime), t, fuel)) {
            result.counterexample = s2;
            return result;
          }
          // Linking an old, unlinked name to a new one on the other side
          // must never be a parametric extension.
          if (common + garbage_prime == 0) continue;
          for (Name l : w1) {
            bool linked = std::any_of(old_links.begin(), old_links.end(),
                                      [&](const auto& p) { return p.first == l; });
            if (linked) continue;
            Name target = right.names().back();
            auto bad = links;
            std::erase_if(bad, [&](const auto& p) { return p.second == target; });
            bad.emplace_back(top(l), target);
            ++result.checked;
            if (check_parametric_square(top, bottom, s1, span_from_links(left, right, bad))) {
              result.counterexample = span_from_links(left, right, bad);
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

}  // namespace nu
