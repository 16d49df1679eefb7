// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "nu/corpus.hpp"
#include "nu/equiv.hpp"
#include "nu/lang.hpp"

namespace nu {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const Type kNameToBool = Type::arrow(Type::name(), Type::boolean());

bool is_equivalent(const Verdict& v) { return std::holds_alternative<Equivalent>(v); }
bool is_distinguished(const Verdict& v) { return std::holds_alternative<Distinguished>(v); }

/// Equivalent by the direct method with a certificate that re-verifies.
bool direct_certified(const Comp& a, const Comp& b, const Type& t) {
  Verdict v = check_equivalence(a, b, t, Method::Direct, Budgets{});
  auto* eq = std::get_if<Equivalent>(&v);
  if (eq == nullptr) return false;
  const auto& c = std::get<DirectCertificate>(eq->certificate);
  return verify_tproof(c.world, c.lhs, c.rhs, c.proof, t);
}

Outcome drop_equation() {
  auto t0 = Clock::now();
  int ok = 0;
  int total = 0;
  for (const auto& g : gen_corpus(101, 20, 5)) {
    CompPtr lhs = build::let("x", build::fresh(), g.term);
    ++total;
    if (direct_certified(*lhs, *g.term, g.type)) ++ok;
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/" << total << " certified in " << s << " s";
  return {ok == total && s < 5.0, d.str()};
}

Outcome swap_equation() {
  auto t0 = Clock::now();
  int ok = 0;
  int total = 0;
  CompPtr first = parse("let x = new in let y = new in x");
  CompPtr second = parse("let y = new in let x = new in x");
  Verdict v = check_equivalence(*first, *second, Type::name(), Method::Direct, Budgets{});
  bool transposition = false;
  if (auto* eq = std::get_if<Equivalent>(&v)) {
    const auto& c = std::get<DirectCertificate>(eq->certificate);
    if (auto* p = std::get_if<CospanProof>(&c.proof)) {
      transposition =
          p->x_prime == Injection(World{0, 1}, World{0, 1},
                                  std::vector<std::pair<Name, Name>>{{0, 1}, {1, 0}}) &&
          verify_tproof(c.world, c.lhs, c.rhs, c.proof, Type::name());
    }
  }
  ++total;
  if (transposition) ++ok;
  for (const auto& p : gen_pairs(102, 120, 5)) {
    if (p.kind != "swap") continue;
    ++total;
    if (direct_certified(*p.lhs, *p.rhs, p.type)) ++ok;
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/" << total << " certified (ground-name instance "
    << (transposition ? "uses" : "does NOT use") << " the transposition) in " << s << " s";
  return {ok == total && total >= 20 && s < 5.0, d.str()};
}

Outcome equivalence_12() {
  CompPtr lhs = parse("let n = new in fun (x:name). x = n");
  CompPtr rhs = parse("fun (x:name). false");
  Budgets b;
  Verdict par = check_equivalence(*lhs, *rhs, kNameToBool, Method::Parametric, b);
  Verdict dir = check_equivalence(*lhs, *rhs, kNameToBool, Method::Direct, b);
  Verdict orc = oracle_equiv(*lhs, *rhs, kNameToBool, 4, 500);

  bool par_ok = false;
  std::size_t extensions = 0;
  if (auto* eq = std::get_if<Equivalent>(&par)) {
    const auto& c = std::get<ParametricCertificate>(eq->certificate);
    // The private name is 0 on the left; no low point may reach it.
    par_ok = c.witness.span && !c.witness.span->u().image().contains(0) &&
             verify_certificate(*eq) && c.extensions_checked > 0;
    extensions = c.extensions_checked;
  }
  bool dir_ok = std::holds_alternative<Unknown>(dir);
  bool orc_ok = !is_distinguished(orc);
  std::ostringstream d;
  d << "parametric " << (par_ok ? "equivalent" : "FAILED") << " (" << extensions
    << " extensions), direct " << (dir_ok ? "unknown" : "NOT unknown") << ", oracle "
    << (orc_ok ? "silent" : "DISTINGUISHES");
  return {par_ok && dir_ok && orc_ok, d.str()};
}

Outcome realizability() {
  RealizeBounds bounds;
  bounds.fuel = 1000;
  int ok = 0;
  int diverging = 0;
  auto terms = gen_corpus(104, 200, 5);
  for (const auto& g : terms) {
    if (realizes_term(*g.term, g.type, {}, bounds)) ++ok;
    if (eval_concrete(CEnv{}, *g.term, 0, bounds.fuel).diverged) ++diverging;
  }
  std::ostringstream d;
  d << ok << "/" << terms.size() << " realized (" << diverging << " diverge on both sides)";
  return {ok == static_cast<int>(terms.size()), d.str()};
}

/// The apex map forced by two cospans over the same span, if it is a
/// bijection commuting with both legs.
bool forced_iso(const PullbackSquare& a, const PullbackSquare& b) {
  if (a.apex.size() != b.apex.size()) return false;
  std::map<Name, Name> m;
  auto add = [&](const Injection& from, const Injection& to) {
    for (Name n : from.dom().names()) {
      auto [it, fresh] = m.emplace(from(n), to(n));
      if (!fresh && it->second != to(n)) return false;
    }
    return true;
  };
  if (!add(a.left_up, b.left_up) || !add(a.right_up, b.right_up)) return false;
  std::vector<Name> targets;
  for (auto [k, v] : m) targets.push_back(v);
  return m.size() == a.apex.size() && World(targets) == b.apex;
}

Outcome category_laws() {
  brute::Rand rnd(105);
  int failures = 0;
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    // A co-span X -> Z <- Y over one codomain of at most five names.
    Injection f = rnd.injection_from(rnd.world(5), 2, 9);
    while (f.cod().size() > 5) f = rnd.injection_from(rnd.world(5), 2, 9);
    World y = rnd.world(f.cod().size(), 9);
    std::vector<Name> pool = f.cod().names();
    std::shuffle(pool.begin(), pool.end(), rnd.engine());
    std::vector<std::pair<Name, Name>> pairs;
    for (std::size_t k = 0; k < y.size(); ++k) pairs.emplace_back(y.names()[k], pool[k]);
    Injection g(y, f.cod(), pairs);
    PullbackSquare pb = pullback_cospan(f, g);
    bool pb_ok = commutes(pb) && is_pullback(pb) &&
                 (pb.apex.size() > 5 || brute::universal_pullback(pb));

    Span s = rnd.span(rnd.world(5), rnd.world(5));
    PullbackSquare c = complete_span_minimal(s.u(), s.u_prime());
    bool min_ok = commutes(c) && is_minimal_pullback(c) &&
                  c.left_up.image().unite(c.right_up.image()) == c.apex;
    // Joint epi: the legs cover the apex; mono: distinct names stay distinct.
    bool mono = c.left_up.image().size() == c.left_up.dom().size() &&
                c.right_up.image().size() == c.right_up.dom().size();
    PullbackSquare other = complete_span_minimal(s.u_prime(), s.u());
    PullbackSquare swapped =
        make_square(other.right_up, other.left_up, other.right_down, other.left_down);
    bool iso_ok = forced_iso(c, swapped) && forced_iso(swapped, c);
    if (c.apex.size() <= 4) {
      auto all = brute::minimal_completions(s.u(), s.u_prime());
      for (const auto& m : all) iso_ok = iso_ok && brute::cospan_iso(c, m).has_value();
      iso_ok = iso_ok && !all.empty();
    }
    if (!(pb_ok && min_ok && mono && iso_ok)) ++failures;
  }
  std::ostringstream d;
  d << failures << " failures over " << n << " instances";
  return {failures == 0, d.str()};
}

Outcome span_algebra() {
  brute::Rand rnd(106);
  int failures = 0;
  const int n = 300;
  for (int i = 0; i < n; ++i) {
    World a = rnd.world(4);
    World b = rnd.world(4);
    World c = rnd.world(4);
    World d = rnd.world(4);
    Span s = rnd.span(a, b);
    Span s2 = rnd.span(b, c);
    Span s3 = rnd.span(c, d);
    bool ok = spans_isomorphic(compose_spans(s, identity_span(b)), s).has_value() &&
              spans_isomorphic(compose_spans(identity_span(a), s), s).has_value() &&
              brute::spans_iso(compose_spans(compose_spans(s, s2), s3),
                               compose_spans(s, compose_spans(s2, s3))) &&
              reverse_span(reverse_span(s)) == s;
    if (!ok) ++failures;
  }
  using Pairs = std::vector<std::pair<Name, Name>>;
  Span from(Injection::inclusion({0, 1}, {0, 1, 2}),
            Injection(World{0, 1}, World{0, 1, 2}, Pairs{{0, 1}, {1, 2}}));
  auto to = [](Name last) {
    World big{0, 1, 2, 3};
    return Span(Injection(World{0, 1, 2}, big, Pairs{{0, 0}, {1, 1}, {2, last}}),
                Injection(World{0, 1, 2}, big, Pairs{{0, 1}, {1, 2}, {2, 3}}));
  };
  Injection u = Injection::inclusion({0, 1, 2}, {0, 1, 2, 3});
  bool accept = check_parametric_square(u, u, from, to(3)).has_value();
  bool reject = !check_parametric_square(u, u, from, to(2)).has_value();
  std::ostringstream out;
  out << failures << " failures over " << n << " spans; diagrams "
      << (accept ? "accepted" : "NOT accepted") << "/" << (reject ? "rejected" : "NOT rejected");
  return {failures == 0 && accept && reject, out.str()};
}

// Y(F) for F : (A -> R) -> (A -> R), applied lazily so it is a value.
std::string y_of(const std::string& f, const std::string& arg, const std::string& res,
                 const std::string& h) {
  return "(fix " + h + "(a:" + arg + "):" + res + ". let k = (" + f + ") " + h + " in k a)";
}

struct Functional {
  const char* res;
  const char* body;  // in terms of k : int -> res and x : int
};

const Functional kFunctionals[] = {
    {"int", "if x = 0 then 1 else let r = k (x + -1) in r + r"},
    {"int", "if x = 0 then 0 else let r = k (x + -1) in r + x"},
    {"int", "7"},
    {"int", "if x = 0 then 5 else k (x + -1)"},
    {"bool", "if x = 0 then true else let r = k (x + -1) in if r then false else true"},
    {"int", "k x"},
    {"name", "if x = 0 then new else k (x + -1)"},
    {"bool", "let n = new in if x = 0 then false else k (x + -1)"},
    {"int", "if x = 0 then 2 else if x = 1 then 3 else let a = k (x + -1) in let b = k (x + -1 + -1) in a + b"},
    {"name", "let n = new in if x = 0 then n else let m = k (x + -1) in if m = n then n else m"},
};

Type res_type(const std::string& r) { return parse_type(r); }

bool observed_equal(const std::string& lhs, const std::string& rhs, const Type& t) {
  return direct_certified(*parse(lhs), *parse(rhs), t);
}

Outcome fixpoint_laws() {
  int fixpoint = 0;
  int power = 0;
  int total = 0;
  for (const Functional& fn : kFunctionals) {
    std::string res = fn.res;
    std::string f = "fun (k:int -> " + res + "). fun (x:int). " + fn.body;
    std::string ff = "fun (k:int -> " + res + "). let k1 = (" + f + ") k in (" + f + ") k1";
    Type t = res_type(res);
    bool fix_ok = true;
    bool pow_ok = true;
    for (int a = 0; a <= 3; ++a) {
      std::string arg = std::to_string(a);
      std::string yf = y_of(f, "int", res, "h");
      fix_ok = fix_ok && observed_equal(yf + " " + arg,
                                        "let g = (" + f + ") " + yf + " in g " + arg, t);
      pow_ok = pow_ok && observed_equal(y_of(ff, "int", res, "h") + " " + arg, yf + " " + arg, t);
    }
    ++total;
    fixpoint += fix_ok;
    power += pow_ok;
  }

  const std::string ii = "int -> int";
  // Dinaturality: Y(G . F) = G (Y(F . G)).
  std::string F = "fun (k:int -> int). fun (x:int). if x = 0 then 1 else let r = k (x + -1) in r + 1";
  std::string G = "fun (k:int -> int). fun (x:int). if x = 0 then 2 else let r = k (x + -1) in r + r";
  std::string gf = "fun (k:int -> int). let m = (" + F + ") k in (" + G + ") m";
  std::string fg = "fun (k:int -> int). let m = (" + G + ") k in (" + F + ") m";
  bool dinat = observed_equal(y_of(gf, "int", "int", "h") + " 3",
                              "let g = (" + G + ") " + y_of(fg, "int", "int", "h") + " in g 3",
                              Type::integer());

  // Uniformity: H strict with H . F = G . H gives H (Y F) = Y G.
  std::string F1 = "fun (k:int -> int). fun (x:int). if x = 0 then 1 else k (x + -1)";
  std::string G1 = "fun (k:int -> int). fun (x:int). if x = 0 then 2 else k (x + -1)";
  std::string H = "fun (k:int -> int). fun (x:int). let r = k x in r + r";
  bool uniform = observed_equal("let g = (" + H + ") " + y_of(F1, "int", "int", "h") + " in g 3",
                                y_of(G1, "int", "int", "h") + " 3", Type::integer());

  // Diagonal: Y(k. D k k) = Y(k. Y(m. D k m)).
  std::string D =
      "fun (k:int -> int). fun (m:int -> int). fun (x:int). if x = 0 then 1 else "
      "let a = k (x + -1) in let b = m (x + -1) in a + b";
  std::string diag = "fun (k:int -> int). let dk = (" + D + ") k in dk k";
  std::string inner =
      "fun (k:int -> int). let dk = (" + D + ") k in " + y_of("dk", "int", "int", "h2");
  bool diagonal = observed_equal(y_of(diag, "int", "int", "h") + " 3",
                                 y_of(inner, "int", "int", "h") + " 3", Type::integer());

  // Amalgamation: a pair of int -> int functions as bool -> int -> int.
  std::string pf = "fun (x:int). if x = 0 then 1 else let r = q (x + -1) in r + 1";
  std::string qf = "fun (x:int). if x = 0 then 0 else let r = p (x + -1) in r + 2";
  std::string joint =
      "fun (h:bool -> int -> int). fun (b:bool). "
      "let p = fun (y:int). let pp = h true in pp y in "
      "let q = fun (y:int). let qq = h false in qq y in "
      "if b then " + pf + " else " + qf;
  std::string y_joint =
      "(fix j(b:bool):int -> int. let k = (" + joint + ") j in k b)";
  std::string q_given_p = "fun (q:int -> int). " + qf;
  std::string p_star =
      y_of("fun (p:int -> int). let q = " + y_of(q_given_p, "int", "int", "hq") + " in " + pf,
           "int", "int", "hp");
  std::string q_star = "let p = " + p_star + " in " + y_of(q_given_p, "int", "int", "hq");
  bool amalgamation = true;
  for (int a = 0; a <= 3; ++a) {
    std::string arg = std::to_string(a);
    amalgamation = amalgamation &&
                   observed_equal("let s = " + y_joint + " true in s " + arg, p_star + " " + arg,
                                  Type::integer()) &&
                   observed_equal("let s = " + y_joint + " false in s " + arg,
                                  "let qs = (" + q_star + ") in qs " + arg, Type::integer());
  }

  std::ostringstream d;
  d << "fixpoint " << fixpoint << "/" << total << ", power " << power << "/" << total
    << ", dinaturality " << dinat << ", uniformity " << uniform << ", diagonal " << diagonal
    << ", amalgamation " << amalgamation;
  return {fixpoint == total && power == total && dinat && uniform && diagonal && amalgamation,
          d.str()};
}

AValue aname(Name n) { return AValue{AName{n}}; }

AValue closure(const World& w, const std::string& text, std::optional<Name> n) {
  AEnv env{w, {}};
  if (n) env.values.emplace("n", aname(*n));
  return *eval_abstract(w, env, *parse(text), kDefaultFuel).value;
}

Outcome relation_laws() {
  brute::Rand rnd(108);
  int triples = 0;
  int failures = 0;
  for (int i = 0; triples < 100 && i < 10000; ++i) {
    World a = rnd.world(4, 6);
    World b = rnd.world(4, 6);
    World c = rnd.world(4, 6);
    Span s = rnd.span(a, b);
    Span sp = rnd.span(b, c);
    for (const auto& [x, y] : s.links()) {
      for (const auto& [y2, z] : sp.links()) {
        if (y2 != y || triples >= 100) continue;
        // Alternate between the names themselves and closures testing them.
        bool fn = triples % 2 == 1;
        Type t = fn ? kNameToBool : Type::name();
        const std::string text = "fun (v:name). v = n";
        AValue va = fn ? closure(a, text, x) : aname(x);
        AValue vb = fn ? closure(b, text, y) : aname(y);
        AValue vc = fn ? closure(c, text, z) : aname(z);
        ++triples;
        bool ok = param_relate(identity_span(a), va, va, t).has_value();
        auto w1 = param_relate(s, va, vb, t);
        auto w2 = param_relate(sp, vb, vc, t);
        ok = ok && w1 && w2;
        if (ok) {
          ok = verify_param(reverse_span(s), vb, va, t, param_reverse(*w1));
          auto w3 = param_compose(s, sp, va, vb, vc, t, *w1, *w2);
          ok = ok && w3 && verify_param(compose_spans(s, sp), va, vc, t, *w3);
        }
        if (!ok) ++failures;
      }
    }
  }
  std::ostringstream d;
  d << failures << " failures over " << triples << " triples";
  return {failures == 0 && triples == 100, d.str()};
}

Outcome oracle_consistency() {
  auto t0 = Clock::now();
  Budgets b;
  b.fuel = 500;
  int contradictions = 0;
  int distinguished = 0;
  int equivalent = 0;
  auto pairs = gen_pairs(109, 200, 5);
  for (const auto& p : pairs) {
    Verdict o = oracle_equiv(*p.lhs, *p.rhs, p.type, 4, 500);
    bool dist = is_distinguished(o);
    distinguished += dist;
    bool eq = false;
    for (Method m : {Method::Direct, Method::Parametric}) {
      if (!in_fragment(p.type)) break;
      if (is_equivalent(check_equivalence(*p.lhs, *p.rhs, p.type, m, b))) eq = true;
    }
    equivalent += eq;
    if (eq && dist) ++contradictions;
  }
  std::ostringstream d;
  d << pairs.size() << " pairs: " << equivalent << " certified, " << distinguished
    << " distinguished, " << contradictions << " contradictions in " << seconds_since(t0)
    << " s";
  return {contradictions == 0 && distinguished >= 30, d.str()};
}

Outcome monotonicity() {
  brute::Rand rnd(110);
  RealizeBounds bounds;
  std::vector<GeneratedTerm> terms;
  for (const auto& p : gen_pairs(112, 60, 4)) {
    if (p.type == kNameToBool) {
      terms.push_back({p.lhs, p.type});
      terms.push_back({p.rhs, p.type});
    }
  }
  for (auto& g : gen_corpus(111, 150, 5)) terms.push_back(std::move(g));
  int triples = 0;
  int closures = 0;
  int failures = 0;
  for (const auto& g : terms) {
    if (triples >= 100) break;
    CResult c = eval_concrete(CEnv{}, *g.term, 0, bounds.fuel);
    TValue a = eval_abstract({}, AEnv{{}, {}}, *g.term, bounds.fuel);
    if (c.diverged || a.is_bottom()) continue;
    if (!realizes_value(*c.value, *a.value, g.type, *a.world, bounds)) {
      ++failures;
      continue;
    }
    World extra = rnd.world(3, 12);
    World bigger = a.world->unite(World{a.world->next_fresh() + 12}).unite(extra);
    Injection incl = Injection::inclusion(*a.world, bigger);
    ++triples;
    closures += !g.type.is_ground();
    if (!realizes_value(*c.value, transport(incl, *a.value), g.type, bigger, bounds)) ++failures;
  }
  std::ostringstream d;
  d << failures << " failures over " << triples << " triples (" << closures << " at name -> bool)";
  return {failures == 0 && triples == 100 && closures > 0, d.str()};
}

}  // namespace
}  // namespace nu

int main() {
  using namespace nu;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Drop equation", drop_equation},
      {"Swap equation", swap_equation},
      {"Private name in a closure", equivalence_12},
      {"Concrete realizes abstract", realizability},
      {"Pullback laws", category_laws},
      {"Span algebra", span_algebra},
      {"Fixpoint laws", fixpoint_laws},
      {"Relation laws", relation_laws},
      {"Oracle consistency", oracle_consistency},
      {"Realizability monotonicity", monotonicity},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
