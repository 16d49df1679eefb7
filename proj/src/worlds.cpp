// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/worlds.hpp"

#include <algorithm>
#include <sstream>

#include "nu/error.hpp"

namespace nu {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInjection: return "InvalidInjection";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotAPullback: return "NotAPullback";
    case ErrorKind::MiddleMismatch: return "MiddleMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::WorldMismatch: return "WorldMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::StuckTerm: return "StuckTerm";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::HigherOrderArgument: return "HigherOrderArgument";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::BrokenCertificate: return "BrokenCertificate";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// World

World::World(std::initializer_list<Name> names) : World(std::vector<Name>(names)) {}

World::World(std::vector<Name> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

World World::range(Name n) {
  std::vector<Name> names(n);
  for (Name i = 0; i < n; ++i) names[i] = i;
  return World(std::move(names));
}

bool World::contains(Name n) const {
  return std::binary_search(names_.begin(), names_.end(), n);
}

std::optional<Name> World::max() const {
  if (names_.empty()) return std::nullopt;
  return names_.back();
}

Name World::next_fresh() const { return names_.empty() ? 0 : names_.back() + 1; }

std::size_t World::index_of(Name n) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), n);
  return static_cast<std::size_t>(it - names_.begin());
}

bool World::is_subset_of(const World& other) const {
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(),
                       names_.end());
}

World World::with(Name n) const {
  std::vector<Name> names = names_;
  names.push_back(n);
  return World(std::move(names));
}

World World::unite(const World& other) const {
  std::vector<Name> out;
  std::set_union(names_.begin(), names_.end(), other.names_.begin(), other.names_.end(),
                 std::back_inserter(out));
  return World(std::move(out));
}

World World::intersect(const World& other) const {
  std::vector<Name> out;
  std::set_intersection(names_.begin(), names_.end(), other.names_.begin(),
                        other.names_.end(), std::back_inserter(out));
  return World(std::move(out));
}

World World::minus(const World& other) const {
  std::vector<Name> out;
  std::set_difference(names_.begin(), names_.end(), other.names_.begin(),
                      other.names_.end(), std::back_inserter(out));
  return World(std::move(out));
}

std::string World::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out << ',';
    out << names_[i];
  }
  out << '}';
  return out.str();
}

// ---------------------------------------------------------------------------
// Injection

Injection::Injection(World dom, World cod, std::vector<Name> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {}

Injection::Injection(World dom, World cod, const std::vector<std::pair<Name, Name>>& pairs)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (pairs.size() != dom_.size()) {
    throw Error(ErrorKind::InvalidInjection,
                "expected " + std::to_string(dom_.size()) + " pairs, got " +
                    std::to_string(pairs.size()));
  }
  images_.assign(dom_.size(), 0);
  std::vector<bool> seen(dom_.size(), false);
  for (const auto& [from, to] : pairs) {
    if (!dom_.contains(from)) {
      throw Error(ErrorKind::InvalidInjection,
                  std::to_string(from) + " is not in the domain " + dom_.to_string());
    }
    if (!cod_.contains(to)) {
      throw Error(ErrorKind::InvalidInjection,
                  std::to_string(to) + " is not in the codomain " + cod_.to_string());
    }
    std::size_t idx = dom_.index_of(from);
    if (seen[idx]) {
      throw Error(ErrorKind::InvalidInjection, std::to_string(from) + " mapped twice");
    }
    seen[idx] = true;
    images_[idx] = to;
  }
  std::vector<Name> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidInjection, "map is not injective");
  }
}

Injection Injection::identity(const World& w) { return Injection(w, w, w.names()); }

Injection Injection::inclusion(const World& dom, const World& cod) {
  if (!dom.is_subset_of(cod)) {
    throw Error(ErrorKind::InvalidInjection,
                dom.to_string() + " is not a subset of " + cod.to_string());
  }
  return Injection(dom, cod, dom.names());
}

Name Injection::operator()(Name n) const {
  if (!dom_.contains(n)) {
    throw Error(ErrorKind::DomainMismatch,
                std::to_string(n) + " is not in " + dom_.to_string());
  }
  return images_[dom_.index_of(n)];
}

std::optional<Name> Injection::preimage(Name n) const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == n) return dom_.names()[i];
  }
  return std::nullopt;
}

World Injection::image() const { return World(images_); }

bool Injection::is_inclusion() const { return images_ == dom_.names(); }

std::vector<std::pair<Name, Name>> Injection::pairs() const {
  std::vector<std::pair<Name, Name>> out;
  out.reserve(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.emplace_back(dom_.names()[i], images_[i]);
  return out;
}

Injection Injection::inverse() const {
  if (!is_iso()) {
    throw Error(ErrorKind::InvalidInjection, "only isomorphisms have inverses");
  }
  std::vector<std::pair<Name, Name>> flipped;
  for (const auto& [from, to] : pairs()) flipped.emplace_back(to, from);
  return Injection(cod_, dom_, flipped);
}

std::string Injection::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << dom_.names()[i] << "->" << images_[i];
  }
  out << "] : " << dom_.to_string() << " -> " << cod_.to_string();
  return out.str();
}

Injection compose(const Injection& v, const Injection& u) {
  if (u.cod() != v.dom()) {
    throw Error(ErrorKind::DomainMismatch,
                "cannot compose: " + u.cod().to_string() + " vs " + v.dom().to_string());
  }
  std::vector<std::pair<Name, Name>> pairs;
  for (const auto& [from, to] : u.pairs()) pairs.emplace_back(from, v(to));
  return Injection(u.dom(), v.cod(), pairs);
}

// ---------------------------------------------------------------------------
// Pullback squares

PullbackSquare make_square(Injection left_up, Injection right_up, Injection left_down,
                           Injection right_down) {
  if (left_up.cod() != right_up.cod()) {
    throw Error(ErrorKind::ShapeMismatch, "upper legs do not share an apex");
  }
  if (left_down.dom() != right_down.dom()) {
    throw Error(ErrorKind::ShapeMismatch, "lower legs do not share a low point");
  }
  if (left_down.cod() != left_up.dom() || right_down.cod() != right_up.dom()) {
    throw Error(ErrorKind::ShapeMismatch, "lower legs do not meet the upper legs");
  }
  World low = left_down.dom();
  World apex = left_up.cod();
  return PullbackSquare{std::move(low),          std::move(apex),
                        std::move(left_up),      std::move(right_up),
                        std::move(left_down),    std::move(right_down)};
}

namespace {

void check_shape(const PullbackSquare& sq) {
  if (sq.left_up.cod() != sq.apex || sq.right_up.cod() != sq.apex ||
      sq.left_down.dom() != sq.low || sq.right_down.dom() != sq.low ||
      sq.left_down.cod() != sq.left_up.dom() || sq.right_down.cod() != sq.right_up.dom()) {
    throw Error(ErrorKind::ShapeMismatch, "square legs do not line up");
  }
}

}  // namespace

bool commutes(const PullbackSquare& sq) {
  check_shape(sq);
  for (Name n : sq.low) {
    if (sq.left_up(sq.left_down(n)) != sq.right_up(sq.right_down(n))) return false;
  }
  return true;
}

PullbackSquare pullback_cospan(const Injection& f, const Injection& g) {
  if (f.cod() != g.cod()) {
    throw Error(ErrorKind::CodomainMismatch,
                "co-span legs end in " + f.cod().to_string() + " and " + g.cod().to_string());
  }
  World common = f.image().intersect(g.image());
  std::vector<Name> low_names;
  std::vector<std::pair<Name, Name>> to_right;
  for (Name z : common) {
    Name x = *f.preimage(z);
    low_names.push_back(x);
    to_right.emplace_back(x, *g.preimage(z));
  }
  World low(low_names);
  Injection u = Injection::inclusion(low, f.dom());
  Injection u_prime(low, g.dom(), to_right);
  return make_square(f, g, std::move(u), std::move(u_prime));
}

PullbackSquare complete_span_minimal(const Injection& u, const Injection& u_prime) {
  if (u.dom() != u_prime.dom()) {
    throw Error(ErrorKind::DomainMismatch,
                "span legs start at " + u.dom().to_string() + " and " +
                    u_prime.dom().to_string());
  }
  const World& left = u.cod();
  const World& right = u_prime.cod();
  Name fresh = left.next_fresh();
  std::vector<Name> apex_names = left.names();
  std::vector<std::pair<Name, Name>> right_pairs;
  for (Name m : right) {
    if (auto w = u_prime.preimage(m)) {
      right_pairs.emplace_back(m, u(*w));
    } else {
      apex_names.push_back(fresh);
      right_pairs.emplace_back(m, fresh);
      ++fresh;
    }
  }
  World apex(std::move(apex_names));
  Injection x = Injection::inclusion(left, apex);
  Injection x_prime(right, apex, right_pairs);
  return make_square(std::move(x), std::move(x_prime), u, u_prime);
}

bool is_pullback(const PullbackSquare& sq) {
  if (!commutes(sq)) throw Error(ErrorKind::NotCommuting, "square does not commute");
  World meet = sq.left_up.image().intersect(sq.right_up.image());
  return meet == compose(sq.left_up, sq.left_down).image();
}

bool is_minimal_pullback(const PullbackSquare& sq) {
  if (!is_pullback(sq)) throw Error(ErrorKind::NotAPullback, "square is not a pullback");
  return sq.left_up.image().unite(sq.right_up.image()) == sq.apex;
}

std::optional<Injection> mediate(const PullbackSquare& sq, const Injection& v,
                                 const Injection& v_prime) {
  if (v.dom() != v_prime.dom() || v.cod() != sq.left() || v_prime.cod() != sq.right()) {
    throw Error(ErrorKind::ShapeMismatch, "cone does not sit over the square");
  }
  std::vector<std::pair<Name, Name>> pairs;
  for (Name c : v.dom()) {
    auto t = sq.left_down.preimage(v(c));
    if (!t || sq.right_down(*t) != v_prime(c)) return std::nullopt;
    pairs.emplace_back(c, *t);
  }
  try {
    return Injection(v.dom(), sq.low, pairs);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Factorization factorize(const Injection& u) {
  // u = i2 ∘ u2: corestrict onto the image.
  World img = u.image();
  Injection u2(u.dom(), img, u.pairs());
  Injection i2 = Injection::inclusion(img, u.cod());

  // u = u1 ∘ i1: pad the domain with fresh names standing for cod ∖ image.
  World missing = u.cod().minus(img);
  std::vector<Name> carrier = u.dom().names();
  std::vector<std::pair<Name, Name>> u1_pairs = u.pairs();
  Name fresh = u.dom().next_fresh();
  for (Name m : missing) {
    carrier.push_back(fresh);
    u1_pairs.emplace_back(fresh, m);
    ++fresh;
  }
  World mid(std::move(carrier));
  Injection i1 = Injection::inclusion(u.dom(), mid);
  Injection u1(mid, u.cod(), u1_pairs);
  return Factorization{std::move(i1), std::move(u1), std::move(u2), std::move(i2)};
}

}  // namespace nu
