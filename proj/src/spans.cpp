// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nu/spans.hpp"

#include <sstream>

#include "nu/error.hpp"

namespace nu {

Span::Span(Injection u, Injection u_prime) : u_(std::move(u)), u_prime_(std::move(u_prime)) {
  if (u_.dom() != u_prime_.dom()) {
    throw Error(ErrorKind::ShapeMismatch, "span legs start at " + u_.dom().to_string() +
                                              " and " + u_prime_.dom().to_string());
  }
}

std::vector<std::pair<Name, Name>> Span::links() const {
  std::vector<std::pair<Name, Name>> out;
  for (Name n : low()) out.emplace_back(u_(n), u_prime_(n));
  return out;
}

std::string Span::to_string() const {
  std::ostringstream out;
  out << left().to_string() << " <- " << low().to_string() << " -> " << right().to_string()
      << " links ";
  for (const auto& [a, b] : links()) out << a << '~' << b << ' ';
  return out.str();
}

Span span_from_links(const World& left, const World& right,
                     const std::vector<std::pair<Name, Name>>& links) {
  World low = World::range(static_cast<Name>(links.size()));
  std::vector<std::pair<Name, Name>> to_left, to_right;
  for (Name i = 0; i < links.size(); ++i) {
    to_left.emplace_back(i, links[i].first);
    to_right.emplace_back(i, links[i].second);
  }
  return Span(Injection(low, left, to_left), Injection(low, right, to_right));
}

Span identity_span(const World& w) {
  return Span(Injection::identity(w), Injection::identity(w));
}

Span reverse_span(const Span& s) { return Span(s.u_prime(), s.u()); }

Span compose_spans(const Span& s, const Span& s_prime) {
  if (s.right() != s_prime.left()) {
    throw Error(ErrorKind::MiddleMismatch,
                s.right().to_string() + " vs " + s_prime.left().to_string());
  }
  PullbackSquare sq = pullback_cospan(s.u_prime(), s_prime.u());
  return Span(compose(s.u(), sq.left_down), compose(s_prime.u_prime(), sq.right_down));
}

std::optional<ParametricSquare> check_parametric_square(const Injection& top,
                                                        const Injection& bottom,
                                                        const Span& from, const Span& to) {
  if (top.dom() != from.left() || top.cod() != to.left() || bottom.dom() != from.right() ||
      bottom.cod() != to.right()) {
    throw Error(ErrorKind::ShapeMismatch, "top/bottom do not connect the spans' endpoints");
  }
  // The mediating map is forced by commutation with the left legs.
  std::vector<std::pair<Name, Name>> pairs;
  for (Name n : from.low()) {
    auto m = to.u().preimage(top(from.u()(n)));
    if (!m) return std::nullopt;
    pairs.emplace_back(n, *m);
  }
  std::optional<Injection> mediating;
  try {
    mediating.emplace(from.low(), to.low(), pairs);
  } catch (const Error&) {
    return std::nullopt;
  }
  PullbackSquare upper = make_square(top, to.u(), from.u(), *mediating);
  PullbackSquare lower = make_square(bottom, to.u_prime(), from.u_prime(), *mediating);
  if (!commutes(upper) || !commutes(lower)) return std::nullopt;
  if (!is_pullback(upper) || !is_pullback(lower)) return std::nullopt;
  return ParametricSquare{from, to, top, bottom, std::move(*mediating)};
}

std::optional<Injection> spans_isomorphic(const Span& s, const Span& s_prime) {
  if (s.left() != s_prime.left() || s.right() != s_prime.right()) {
    throw Error(ErrorKind::ShapeMismatch, "spans have different endpoints");
  }
  if (s.low().size() != s_prime.low().size()) return std::nullopt;
  std::vector<std::pair<Name, Name>> pairs;
  for (Name n : s.low()) {
    auto m = s_prime.u().preimage(s.u()(n));
    if (!m || s_prime.u_prime()(*m) != s.u_prime()(n)) return std::nullopt;
    pairs.emplace_back(n, *m);
  }
  return Injection(s.low(), s_prime.low(), pairs);
}

}  // namespace nu
