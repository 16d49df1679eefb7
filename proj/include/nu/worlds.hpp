// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// The category of worlds: finite sets of naturals with injective maps.
// Pullback squares are the proof objects everything else is built from.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nu {

using Name = std::uint32_t;

/// A finite set of names, kept sorted and duplicate-free.
class World {
 public:
  World() = default;
  World(std::initializer_list<Name> names);
  explicit World(std::vector<Name> names);

  /// Names 0..n-1.
  static World range(Name n);

  const std::vector<Name>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  bool contains(Name n) const;
  std::optional<Name> max() const;

  /// max(w)+1, with max of the empty world taken as -1.
  Name next_fresh() const;

  /// Index of n in the sorted carrier; n must be a member.
  std::size_t index_of(Name n) const;

  bool is_subset_of(const World& other) const;
  World with(Name n) const;
  World unite(const World& other) const;
  World intersect(const World& other) const;
  World minus(const World& other) const;

  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World&, const World&) = default;

  std::string to_string() const;

 private:
  std::vector<Name> names_;
};

/// An injective total map between worlds.
class Injection {
 public:
  /// Throws InvalidInjection unless pairs describe an injective total map
  /// dom -> cod.
  Injection(World dom, World cod, const std::vector<std::pair<Name, Name>>& pairs);

  static Injection identity(const World& w);
  /// The subset inclusion dom -> cod; throws InvalidInjection unless dom is a
  /// subset of cod.
  static Injection inclusion(const World& dom, const World& cod);

  const World& dom() const { return dom_; }
  const World& cod() const { return cod_; }

  Name operator()(Name n) const;
  /// The unique m with this(m) == n, if any.
  std::optional<Name> preimage(Name n) const;
  World image() const;

  bool is_inclusion() const;
  bool is_iso() const { return dom_.size() == cod_.size(); }

  /// Sorted (from, to) pairs.
  std::vector<std::pair<Name, Name>> pairs() const;

  /// Inverse of an isomorphism.
  Injection inverse() const;

  friend bool operator==(const Injection&, const Injection&) = default;

  std::string to_string() const;

 private:
  Injection(World dom, World cod, std::vector<Name> images);

  World dom_;
  World cod_;
  std::vector<Name> images_;  // images_[i] is the image of dom_.names()[i]
};

/// v ∘ u. Throws DomainMismatch unless u.cod() == v.dom().
Injection compose(const Injection& v, const Injection& u);

/// Square x∘u = x′∘u′ with apex cod(x) and low point dom(u).
///
///            apex
///     left_up /  \ right_up
///          W1      W1′
///   left_down \  / right_down
///             low
struct PullbackSquare {
  World low;
  World apex;
  Injection left_up;
  Injection right_up;
  Injection left_down;
  Injection right_down;

  const World& left() const { return left_up.dom(); }
  const World& right() const { return right_up.dom(); }

  friend bool operator==(const PullbackSquare&, const PullbackSquare&) = default;
};

/// Builds a square from its four legs, checking that the shapes line up
/// (ShapeMismatch otherwise). Commutation is not checked here.
PullbackSquare make_square(Injection left_up, Injection right_up,
                           Injection left_down, Injection right_down);

bool commutes(const PullbackSquare& sq);

/// Pullback of the co-span f: X -> Z <- Y: g. The low point is f⁻¹(fX ∩ gY)
/// taken inside X.
PullbackSquare pullback_cospan(const Injection& f, const Injection& g);

/// Canonical minimal pullback completing the span u: W -> W1, u′: W -> W1′.
/// The left upper leg is the inclusion W1 ↪ apex; names of W1′ outside
/// u′(W) are sent to fresh names above max(W1), in ascending order.
PullbackSquare complete_span_minimal(const Injection& u, const Injection& u_prime);

/// Image-intersection test: x(W1) ∩ x′(W1′) = x(u(low)).
/// Throws NotCommuting for a non-commuting square.
bool is_pullback(const PullbackSquare& sq);

/// x(W1) ∪ x′(W1′) = apex. Throws NotAPullback if sq is not a pullback.
bool is_minimal_pullback(const PullbackSquare& sq);

/// The mediating t with left_down∘t = v and right_down∘t = v′ for a cone
/// (v, v′) over a pullback, or nullopt if the cone does not factor.
std::optional<Injection> mediate(const PullbackSquare& sq, const Injection& v,
                                 const Injection& v_prime);

/// u = u1∘i1 = i2∘u2 with i1, i2 inclusions and u1, u2 isomorphisms.
struct Factorization {
  Injection i1;
  Injection u1;
  Injection u2;
  Injection i2;
};

Factorization factorize(const Injection& u);

}  // namespace nu
