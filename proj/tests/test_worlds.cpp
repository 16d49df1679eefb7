// Copyright 2026 The nu-workbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "brute.hpp"
#include "nu/error.hpp"
#include "nu/worlds.hpp"

namespace nu {
namespace {

Injection inj(World dom, World cod, std::vector<std::pair<Name, Name>> pairs) {
  return Injection(std::move(dom), std::move(cod), pairs);
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::StuckTerm;
}

TEST(World, SetSemantics) {
  World w{3, 1, 3, 0};
  EXPECT_EQ(w.names(), (std::vector<Name>{0, 1, 3}));
  EXPECT_EQ(w.to_string(), "{0,1,3}");
  EXPECT_EQ(w.next_fresh(), 4u);
  EXPECT_EQ(World{}.next_fresh(), 0u);
  EXPECT_FALSE(World{}.max().has_value());
  EXPECT_TRUE(World({0, 1}).is_subset_of(w));
  EXPECT_EQ(w.minus(World{1}), World({0, 3}));
  EXPECT_EQ(w.intersect(World{1, 2, 3}), World({1, 3}));
  EXPECT_EQ(World::range(3), World({0, 1, 2}));
}

TEST(Injection, RejectsNonInjective) {
  EXPECT_EQ(kind_of([] { inj({0, 1}, {0}, {{0, 0}, {1, 0}}); }), ErrorKind::InvalidInjection);
  EXPECT_EQ(kind_of([] { inj({0, 1}, {0, 1}, {{0, 0}}); }), ErrorKind::InvalidInjection);
  EXPECT_EQ(kind_of([] { inj({0}, {0}, {{0, 4}}); }), ErrorKind::InvalidInjection);
  EXPECT_EQ(kind_of([] { Injection::inclusion({2}, {0, 1}); }), ErrorKind::InvalidInjection);
}

TEST(Injection, Inclusion) {
  EXPECT_TRUE(Injection::inclusion({0}, {0, 1}).is_inclusion());
  EXPECT_FALSE(inj({0}, {0, 1}, {{0, 1}}).is_inclusion());
}

TEST(Compose, Examples) {
  Injection u = inj({0}, {0, 1}, {{0, 1}});
  EXPECT_EQ(compose(Injection::identity({0, 1}), u), u);
  EXPECT_EQ(compose(inj({0, 1}, {2, 3}, {{0, 2}, {1, 3}}), u), inj({0}, {2, 3}, {{0, 3}}));
  EXPECT_EQ(compose(inj({0, 1}, {5, 7}, {{0, 5}, {1, 7}}), Injection::inclusion({0}, {0, 1})),
            inj({0}, {5, 7}, {{0, 5}}));
  EXPECT_EQ(kind_of([&] { compose(u, u); }), ErrorKind::DomainMismatch);
}

TEST(Compose, AssociativeAndUnital) {
  brute::Rand r(11);
  for (int i = 0; i < 300; ++i) {
    World a = r.world(4);
    Injection f = r.injection_from(a, 1);
    Injection g = r.injection_from(f.cod(), 1);
    Injection h = r.injection_from(g.cod(), 1);
    EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
    EXPECT_EQ(compose(Injection::identity(f.cod()), f), f);
    EXPECT_EQ(compose(f, Injection::identity(a)), f);
  }
}

TEST(Compose, InjectionsAreMono) {
  brute::Rand r(12);
  for (int i = 0; i < 200; ++i) {
    World c = r.world(3);
    Injection a = r.injection_from(c, 2);
    Injection u = r.injection_from(a.cod(), 2);
    for (const Injection& b : brute::injections(c, a.cod())) {
      EXPECT_EQ(compose(u, a) == compose(u, b), a == b);
    }
  }
}

TEST(PullbackCospan, Examples) {
  PullbackSquare sq =
      pullback_cospan(Injection::inclusion({0, 1}, {0, 1, 2}), Injection::inclusion({1, 2}, {0, 1, 2}));
  EXPECT_EQ(sq.low, World{1});
  EXPECT_EQ(sq.left_down, inj({1}, {0, 1}, {{1, 1}}));
  EXPECT_EQ(sq.right_down, inj({1}, {1, 2}, {{1, 1}}));

  EXPECT_TRUE(pullback_cospan(Injection::identity({}), Injection::identity({})).low.empty());
  EXPECT_TRUE(pullback_cospan(inj({0}, {0, 1, 2}, {{0, 2}}), Injection::inclusion({0, 1}, {0, 1, 2}))
                  .low.empty());
  EXPECT_EQ(kind_of([] { pullback_cospan(Injection::identity({0}), Injection::identity({1})); }),
            ErrorKind::CodomainMismatch);
}

TEST(PullbackCospan, MatchesUniversalProperty) {
  brute::Rand r(13);
  for (int i = 0; i < 300; ++i) {
    World z = r.world(6);
    std::vector<Name> pool = z.names();
    std::shuffle(pool.begin(), pool.end(), r.engine());
    std::size_t nx = r.below(z.size() + 1);
    std::size_t ny = r.below(z.size() + 1);
    std::vector<std::pair<Name, Name>> fp;
    std::vector<std::pair<Name, Name>> gp;
    std::vector<Name> xs;
    std::vector<Name> ys;
    for (std::size_t k = 0; k < nx; ++k) {
      xs.push_back(static_cast<Name>(k));
      fp.emplace_back(static_cast<Name>(k), pool[k]);
    }
    std::shuffle(pool.begin(), pool.end(), r.engine());
    for (std::size_t k = 0; k < ny; ++k) {
      ys.push_back(static_cast<Name>(k + 10));
      gp.emplace_back(static_cast<Name>(k + 10), pool[k]);
    }
    Injection ff(World(xs), z, fp);
    Injection gg(World(ys), z, gp);
    PullbackSquare sq = pullback_cospan(ff, gg);
    EXPECT_TRUE(commutes(sq));
    EXPECT_TRUE(is_pullback(sq));
    EXPECT_TRUE(brute::universal_pullback(sq));
  }
}

// The squares below complete w = {0} -> q = {0,1} (0 |-> 1) against the
// inclusion w -> w1 = {0,1,2}.
PullbackSquare worked_square(const World& apex, std::vector<std::pair<Name, Name>> top) {
  return make_square(inj({0, 1, 2}, apex, std::move(top)), Injection::inclusion({0, 1}, apex),
                     Injection::inclusion({0}, {0, 1, 2}), inj({0}, {0, 1}, {{0, 1}}));
}

TEST(IsPullback, WorkedSquares) {
  PullbackSquare good = worked_square({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_pullback(good));
  EXPECT_TRUE(is_minimal_pullback(good));

  PullbackSquare identified = worked_square({0, 1, 2, 3}, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_TRUE(commutes(identified));
  EXPECT_FALSE(is_pullback(identified));
  EXPECT_FALSE(brute::universal_pullback(identified));

  PullbackSquare garbage = worked_square({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_pullback(garbage));
  EXPECT_FALSE(is_minimal_pullback(garbage));
}

TEST(IsPullback, Errors) {
  PullbackSquare skew = make_square(Injection::identity({0, 1}), Injection::identity({0, 1}),
                                    Injection::inclusion({0}, {0, 1}), inj({0}, {0, 1}, {{0, 1}}));
  EXPECT_EQ(kind_of([&] { is_pullback(skew); }), ErrorKind::NotCommuting);
  PullbackSquare identified = worked_square({0, 1, 2, 3}, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(kind_of([&] { is_minimal_pullback(identified); }), ErrorKind::NotAPullback);
}

TEST(IsPullback, IdentitySquare) {
  World w{0, 2, 5};
  Injection id = Injection::identity(w);
  PullbackSquare sq = make_square(id, id, id, id);
  EXPECT_TRUE(is_pullback(sq));
  EXPECT_TRUE(is_minimal_pullback(sq));
}

TEST(CompleteSpanMinimal, Examples) {
  PullbackSquare sq =
      complete_span_minimal(Injection::inclusion({0}, {0, 1, 2}), inj({0}, {0, 1}, {{0, 1}}));
  EXPECT_EQ(sq.apex, World({0, 1, 2, 3}));
  EXPECT_EQ(sq.left_up, Injection::inclusion({0, 1, 2}, {0, 1, 2, 3}));
  EXPECT_EQ(sq.right_up, inj({0, 1}, {0, 1, 2, 3}, {{1, 0}, {0, 3}}));
  // Same span up to swapping the sides gives the worked square.
  PullbackSquare worked = worked_square({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  PullbackSquare flipped =
      complete_span_minimal(inj({0}, {0, 1}, {{0, 1}}), Injection::inclusion({0}, {0, 1, 2}));
  EXPECT_EQ(flipped.right_up, worked.left_up);
  EXPECT_EQ(flipped.left_up, worked.right_up);

  EXPECT_TRUE(complete_span_minimal(Injection::identity({}), Injection::identity({})).apex.empty());

  PullbackSquare two =
      complete_span_minimal(Injection::inclusion({0}, {0, 1}), Injection::inclusion({0}, {0, 2}));
  EXPECT_EQ(two.apex.size(), 3u);
  auto all = brute::minimal_completions(Injection::inclusion({0}, {0, 1}),
                                        Injection::inclusion({0}, {0, 2}));
  ASSERT_FALSE(all.empty());
  for (const auto& other : all) EXPECT_TRUE(brute::cospan_iso(two, other).has_value());

  EXPECT_EQ(kind_of([] {
              complete_span_minimal(Injection::identity({0}), Injection::identity({1}));
            }),
            ErrorKind::DomainMismatch);
}

TEST(CompleteSpanMinimal, MinimalAndUniqueUpToIso) {
  brute::Rand r(14);
  for (int i = 0; i < 150; ++i) {
    World low = r.world(2, 5);
    Injection u = r.injection_from(low, 1, 6);
    Injection up = r.injection_from(low, 2, 6);
    PullbackSquare sq = complete_span_minimal(u, up);
    ASSERT_TRUE(is_minimal_pullback(sq));
    EXPECT_TRUE(sq.left_up.is_inclusion());
    EXPECT_TRUE(brute::universal_pullback(sq));
    auto all = brute::minimal_completions(u, up);
    ASSERT_FALSE(all.empty());
    for (const auto& other : all) {
      EXPECT_TRUE(brute::cospan_iso(sq, other).has_value());
    }
  }
}

TEST(CompleteSpanMinimal, LegsJointlyEpic) {
  brute::Rand r(15);
  for (int i = 0; i < 100; ++i) {
    World low = r.world(2, 4);
    PullbackSquare sq = complete_span_minimal(r.injection_from(low, 1, 5), r.injection_from(low, 1, 5));
    World target = sq.apex.unite(World{20, 21});
    auto maps = brute::injections(sq.apex, target);
    for (std::size_t a = 0; a < maps.size() && a < 12; ++a) {
      for (std::size_t b = 0; b < maps.size() && b < 12; ++b) {
        bool agree = compose(maps[a], sq.left_up) == compose(maps[b], sq.left_up) &&
                     compose(maps[a], sq.right_up) == compose(maps[b], sq.right_up);
        EXPECT_EQ(agree, a == b);
      }
    }
  }
}

TEST(Mediate, FindsTheUniqueMap) {
  PullbackSquare sq = worked_square({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  World c{7};
  auto m = mediate(sq, inj(c, {0, 1, 2}, {{7, 0}}), inj(c, {0, 1}, {{7, 1}}));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, inj(c, {0}, {{7, 0}}));
  EXPECT_FALSE(mediate(sq, inj(c, {0, 1, 2}, {{7, 1}}), inj(c, {0, 1}, {{7, 0}})).has_value());
}

TEST(Factorize, Examples) {
  Factorization f = factorize(Injection::inclusion({0}, {0, 1}));
  EXPECT_EQ(f.u2, Injection::identity({0}));
  EXPECT_EQ(f.i2, Injection::inclusion({0}, {0, 1}));

  Factorization g = factorize(inj({0}, {0, 1}, {{0, 1}}));
  EXPECT_EQ(g.u2, inj({0}, {1}, {{0, 1}}));
  EXPECT_EQ(g.i2, Injection::inclusion({1}, {0, 1}));

  Factorization h = factorize(Injection::identity({0, 4}));
  EXPECT_EQ(h.i1, Injection::identity({0, 4}));
  EXPECT_EQ(h.u1, Injection::identity({0, 4}));
  EXPECT_EQ(h.u2, Injection::identity({0, 4}));
  EXPECT_EQ(h.i2, Injection::identity({0, 4}));
}

TEST(Factorize, RecomposesRandomInjections) {
  brute::Rand r(16);
  for (int i = 0; i < 300; ++i) {
    Injection u = r.injection_from(r.world(4), 3);
    Factorization f = factorize(u);
    EXPECT_TRUE(f.i1.is_inclusion());
    EXPECT_TRUE(f.u1.is_iso());
    EXPECT_TRUE(f.i2.is_inclusion());
    EXPECT_TRUE(f.u2.is_iso());
    EXPECT_EQ(compose(f.u1, f.i1), u);
    EXPECT_EQ(compose(f.i2, f.u2), u);
  }
}

}  // namespace
}  // namespace nu
