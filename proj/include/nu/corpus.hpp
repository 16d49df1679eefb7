// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Seeded, type-directed generation of closed well-typed terms.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nu/syntax.hpp"

namespace nu {

struct GeneratedTerm {
  CompPtr term;
  Type type;
};

/// `count` closed terms of ground type, nesting roughly `depth` levels.
/// The same seed always yields the same terms.
std::vector<GeneratedTerm> gen_corpus(std::uint64_t seed, std::size_t count, int depth);

struct TermPair {
  CompPtr lhs;
  CompPtr rhs;
  Type type;
  /// drop, swap, private, random or mutant.
  std::string kind;
};

/// Pairs cycling through: a dropped allocation, two swapped allocations, a
/// privately allocated name hidden in a closure, two unrelated terms of one
/// type, and a term against a copy with one literal changed.
std::vector<TermPair> gen_pairs(std::uint64_t seed, std::size_t count, int depth);

}  // namespace nu
