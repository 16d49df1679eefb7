// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Equivalence certificates and the checks around them.
//
// Certificates cover results of type int, bool, name and name -> bool:
//   * co-span proofs (x, x′, p): both results are moved into a common apex
//     world where their payloads coincide;
//   * span witnesses: results are related over a span (a partial bijection)
//     that extends the starting span by fresh-to-fresh links only.
// Everything else falls back to the observation oracle, which can only ever
// tell terms apart.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nu/abstract.hpp"
#include "nu/concrete.hpp"
#include "nu/lang.hpp"
#include "nu/spans.hpp"
#include "nu/syntax.hpp"
#include "nu/worlds.hpp"

namespace nu {

inline constexpr std::uint64_t kDefaultFuel = 1000;

/// Throws UnsupportedType unless t is int, bool, name or name -> bool.
void require_fragment(const Type& t);
bool in_fragment(const Type& t);

// ---------------------------------------------------------------------------
// Co-span proofs

/// A name -> bool closure, tabulated on the listed names.
using TruthTable = std::vector<std::pair<Name, bool>>;

struct IntEq {
  std::int64_t value;
};
struct BoolEq {
  bool value;
};
struct NameEq {
  Name name;
};
struct TableEq {
  TruthTable table;
};
/// What both payloads reduce to once moved to the apex.
using GroundEq = std::variant<IntEq, BoolEq, NameEq, TableEq>;

bool operator==(const GroundEq& a, const GroundEq& b);

struct BottomProof {};
struct CospanProof {
  Injection x;        // w1 -> apex
  Injection x_prime;  // w1′ -> apex
  GroundEq evidence;
};
using TProof = std::variant<BottomProof, CospanProof>;

/// Applies a name -> bool closure living at `world` to every name of
/// `world` and to one name fresh for it. Throws FuelExhausted if any
/// application fails to return within `fuel`.
TruthTable tabulate(const AValue& fn, const World& world, std::uint64_t fuel);

/// Reduces a payload living at `world` to its ground evidence.
GroundEq ground_evidence(const AValue& a, const Type& t, const World& world,
                         std::uint64_t fuel);

/// Checks a proof that tv and tv′ (both computations over w) are equal.
/// Throws ShapeMismatch when the proof's legs do not fit the results.
bool verify_tproof(const World& w, const TValue& tv, const TValue& tv_prime,
                   const TProof& proof, const Type& t, std::uint64_t fuel = kDefaultFuel);

/// Searches for a co-span proof: x is the inclusion of w1 into the apex, x′
/// is the identity on w and matches the remaining names of w1′ to unused
/// names of w1 or to brand-new ones, backtracking until the payloads agree.
std::optional<TProof> synth_tproof(const World& w, const TValue& tv, const TValue& tv_prime,
                                   const Type& t, std::uint64_t fuel = kDefaultFuel);

// ---------------------------------------------------------------------------
// Span-indexed relation

struct ParamWitness {
  enum class Evidence { Star, Tables, Bottom };

  /// Extension span S1: w1 <-> w1′ for computation-level witnesses.
  std::optional<Span> span;
  Evidence evidence = Evidence::Star;
  /// For Tables: the common value on each low-point element of the span the
  /// payloads were compared over.
  std::vector<bool> agreed;
};

/// Value-level relation over S: a lives at S.left(), a′ at S.right().
std::optional<ParamWitness> param_relate(const Span& s, const AValue& a, const AValue& a_prime,
                                         const Type& t, std::uint64_t fuel = kDefaultFuel);

/// Candidate extension spans S1: w1 <-> w1′ for computations tv over
/// S.left() and tv′ over S.right(): S's links plus a partial matching of
/// fresh names, fewest fresh links first, at most `limit` of them.
std::vector<Span> extension_candidates(const Span& s, const World& w1, const World& w1_prime,
                                       std::size_t limit);

/// Computation-level relation: searches at most `budget` extension spans.
std::optional<ParamWitness> param_relate_t(const Span& s, const TValue& tv,
                                           const TValue& tv_prime, const Type& t,
                                           std::size_t budget, std::uint64_t fuel = kDefaultFuel);

bool verify_param(const Span& s, const AValue& a, const AValue& a_prime, const Type& t,
                  const ParamWitness& witness, std::uint64_t fuel = kDefaultFuel);
bool verify_param_t(const Span& s, const TValue& tv, const TValue& tv_prime, const Type& t,
                    const ParamWitness& witness, std::uint64_t fuel = kDefaultFuel);

/// Witness over s(S) for the swapped pair.
ParamWitness param_reverse(const ParamWitness& witness);

/// Witness over t(S, S′) for (a, a″) from witnesses for (a, a′) over S and
/// (a′, a″) over S′. Throws MiddleMismatch when the spans do not meet;
/// nullopt if the composite fails re-verification.
std::optional<ParamWitness> param_compose(const Span& s, const Span& s_prime, const AValue& a,
                                          const AValue& a_mid, const AValue& a_last,
                                          const Type& t, const ParamWitness& witness,
                                          const ParamWitness& witness_prime,
                                          std::uint64_t fuel = kDefaultFuel);
std::optional<ParamWitness> param_compose_t(const Span& s, const Span& s_prime,
                                            const TValue& tv, const TValue& tv_mid,
                                            const TValue& tv_last, const Type& t,
                                            const ParamWitness& witness,
                                            const ParamWitness& witness_prime,
                                            std::uint64_t fuel = kDefaultFuel);

/// Moves a related pair along parametric squares out of S1: every span
/// adding up to `ext` common fresh links and up to `ext` garbage names per
/// side, under inclusions and under an order-reversing renaming of the old
/// names. Reports the first extension where the pair stops being related.
struct SweepResult {
  std::size_t checked = 0;
  std::optional<Span> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};
SweepResult param_sweep(const Span& s1, const AValue& a, const AValue& a_prime, const Type& t,
                        unsigned ext, std::uint64_t fuel = kDefaultFuel);

// ---------------------------------------------------------------------------
// Realizability

struct RealizeBounds {
  unsigned ext = 2;
  std::uint64_t fuel = kDefaultFuel;
  std::vector<std::int64_t> int_probe = {-1, 0, 1, 2};
};

/// A concrete computation: supply -> result, drawing on the given fuel.
using ConcreteRun = std::function<CResult(Name supply, Fuel& fuel)>;

bool realizes_value(const CValue& cv, const AValue& av, const Type& t, const World& w,
                    const RealizeBounds& bounds);
bool realizes_comp(const ConcreteRun& cv, const TValue& av, const Type& t, const World& w,
                   const RealizeBounds& bounds);
/// Runs a closed term both ways (concrete at supply max(w)+1, abstract at w)
/// and checks the computation clause.
bool realizes_term(const Comp& e, const Type& t, const World& w, const RealizeBounds& bounds);

// ---------------------------------------------------------------------------
// Verdicts

struct DirectCertificate {
  World world;
  TValue lhs;
  TValue rhs;
  TProof proof;
};
struct ParametricCertificate {
  Span span;
  TValue lhs;
  TValue rhs;
  ParamWitness witness;
  std::size_t extensions_checked = 0;
};
using Certificate = std::variant<DirectCertificate, ParametricCertificate>;

struct Equivalent {
  Type type;
  Certificate certificate;
};
struct Distinguished {
  /// Closed observation `fun (x:T). e` of type T -> bool.
  ValuePtr observation;
  std::string lhs_outcome;
  std::string rhs_outcome;
};
struct Unknown {
  std::string reason;
};
using Verdict = std::variant<Equivalent, Distinguished, Unknown>;

enum class Method { Direct, Parametric, Oracle };

struct Budgets {
  std::uint64_t fuel = kDefaultFuel;
  int depth = 4;
  unsigned ext = 2;
  std::size_t budget = 256;
};

/// Closed observations of type t -> bool up to the given AST depth, in a
/// fixed order. Integer literals come from {-1, 0, 1, 2}.
std::vector<ValuePtr> enumerate_observations(const Type& t, int depth);

/// Runs `let r = e in o r` for every observation o; Distinguished on the
/// first disagreement, Unknown otherwise.
Verdict oracle_equiv(const Comp& e, const Comp& e_prime, const Type& t, int depth,
                     std::uint64_t fuel);

/// Re-checks a certificate from scratch.
bool verify_certificate(const Equivalent& eq, std::uint64_t fuel = kDefaultFuel);

/// Both terms must be closed and of type t (TypeError otherwise).
Verdict check_equivalence(const Comp& e, const Comp& e_prime, const Type& t, Method method,
                          const Budgets& budgets = {});

std::string_view to_string(Method m);

}  // namespace nu
