// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Spans of worlds, read as partial bijections between their endpoints, with
// the identity / reverse / compose operations and parametric squares.

#pragma once

#include <optional>

#include "nu/worlds.hpp"

namespace nu {

/// left <-u- low -u′-> right
class Span {
 public:
  /// Throws ShapeMismatch unless both legs start at the same world.
  Span(Injection u, Injection u_prime);

  const World& left() const { return u_.cod(); }
  const World& right() const { return u_prime_.cod(); }
  const World& low() const { return u_.dom(); }
  const Injection& u() const { return u_; }
  const Injection& u_prime() const { return u_prime_; }

  /// Linked pairs (u(n), u′(n)) for n in the low point, ordered by n.
  std::vector<std::pair<Name, Name>> links() const;

  friend bool operator==(const Span&, const Span&) = default;

  std::string to_string() const;

 private:
  Injection u_;
  Injection u_prime_;
};

/// Span whose low point is carried onto `left` and `right` by the given
/// links; the low point is {0..k-1} in link order.
Span span_from_links(const World& left, const World& right,
                     const std::vector<std::pair<Name, Name>>& links);

/// r(w)
Span identity_span(const World& w);

/// s(S)
Span reverse_span(const Span& s);

/// t(S, S′), through the fixed pullback of the co-span S.u′, S′.u.
/// Throws MiddleMismatch unless S.right == S′.left.
Span compose_spans(const Span& s, const Span& s_prime);

/// (top, bottom): from -> to together with its mediating map.
struct ParametricSquare {
  Span from;
  Span to;
  Injection top;
  Injection bottom;
  Injection mediating;
};

/// Returns the parametric square if the mediating map exists and makes both
/// halves pullbacks; nullopt otherwise. Throws ShapeMismatch if top/bottom
/// do not go between the spans' endpoints.
std::optional<ParametricSquare> check_parametric_square(const Injection& top,
                                                        const Injection& bottom,
                                                        const Span& from, const Span& to);

/// Isomorphism t: low S -> low S′ commuting with both legs, if any.
/// Throws ShapeMismatch unless the spans share endpoints.
std::optional<Injection> spans_isomorphic(const Span& s, const Span& s_prime);

}  // namespace nu
