#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extbayes/algebra.hpp"
#include "extbayes/errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace extbayes;

TEST_CASE("state spaces hold ordered distinct labels") {
  SpacePtr s = make_space({"a", "b", "c"});
  CHECK(s->size() == 3);
  CHECK(s->label(1) == "b");
  CHECK(s->index_of("c") == 2);
  CHECK(!s->index_of("d").has_value());
  CHECK_THROWS_AS(make_space({"a", "a"}), EngineError);
  CHECK_THROWS_AS(make_space({}), EngineError);
}

TEST_CASE("spaces with at least 20 states work") {
  std::vector<std::string> labels;
  for (int i = 0; i < 24; ++i) labels.push_back("x" + std::to_string(i));
  SpacePtr s = make_space(labels);
  Algebra d = Algebra::discrete(s);
  CHECK(d.atom_count() == 24);
  CHECK(Event::full(s).size() == 24);
}

TEST_CASE("event set operations") {
  SpacePtr s = make_space({"a", "b", "c", "d"});
  Event e(s, {0, 2});
  Event f(s, {2, 3});
  CHECK(e.unite(f) == Event(s, {0, 2, 3}));
  CHECK(e.intersect(f) == Event(s, {2}));
  CHECK(e.minus(f) == Event(s, {0}));
  CHECK(e.complement() == Event(s, {1, 3}));
  CHECK(Event(s, {2}).is_subset_of(f));
  CHECK(!f.is_subset_of(e));
  CHECK(e.intersects(f));
  CHECK(!e.intersects(Event(s, {1})));
  CHECK(Event::empty(s).is_empty());
  CHECK(Event::full(s).size() == 4);
  CHECK(e.least() == 0);
  CHECK(e.member_labels() == std::vector<std::string>{"a", "c"});
}

TEST_CASE("operations across spaces are hard errors") {
  SpacePtr s = make_space({"a", "b"});
  SpacePtr t = make_space({"a", "c"});
  CHECK_THROWS_AS(Event(s, {0}).unite(Event(t, {0})), SpaceMismatchError);
  CHECK_THROWS_AS(require_same_space(s, t), SpaceMismatchError);
  // Identical label lists are interchangeable even as distinct objects.
  SpacePtr s2 = make_space({"a", "b"});
  CHECK(Event(s, {0}).unite(Event(s2, {1})) == Event(s, {0, 1}));
}

TEST_CASE("from_blocks validates partitions") {
  SpacePtr s = make_space({"a", "b", "c"});
  CHECK_THROWS_AS(
      Algebra::from_blocks(s, {Event(s, {0, 1}), Event(s, {1, 2})}),
      OverlapError);
  CHECK_THROWS_AS(Algebra::from_blocks(s, {Event(s, {0, 1})}), CoverageError);
  CHECK_THROWS_AS(
      Algebra::from_blocks(s, {Event(s, {0, 1, 2}), Event::empty(s)}),
      EmptyBlockError);
}

TEST_CASE("generated_by matches closure examples") {
  SpacePtr p = make_space({"HA", "HB", "TA", "TB"});
  Algebra g = Algebra::generated_by(p, {Event(p, {0, 1})});
  REQUIRE(g.atom_count() == 2);
  CHECK(g.atoms()[0] == Event(p, {0, 1}));
  CHECK(g.atoms()[1] == Event(p, {2, 3}));

  CHECK(Algebra::generated_by(p, {}) == Algebra::trivial(p));

  Algebra d = Algebra::generated_by(p, {Event(p, {0, 2}), Event(p, {0, 1})});
  CHECK(d == Algebra::discrete(p));
}

TEST_CASE("refines examples") {
  SpacePtr s = make_space({"wA", "wB", "wC1", "wC2"});
  Algebra coarse = Algebra::from_blocks(
      s, {Event(s, {0}), Event(s, {1}), Event(s, {2, 3})});
  CHECK(Algebra::discrete(s).refines(coarse));
  CHECK(coarse.refines(coarse));
  Algebra ab = Algebra::from_blocks(s, {Event(s, {0, 1}), Event(s, {2, 3})});
  Algebra split = Algebra::from_blocks(s, {Event(s, {0}), Event(s, {1, 2, 3})});
  CHECK(!ab.refines(split));
}

TEST_CASE("measurable hull examples") {
  SpacePtr s = make_space({"wA", "wB", "wC1", "wC2"});
  Algebra coarse = Algebra::from_blocks(
      s, {Event(s, {0}), Event(s, {1}), Event(s, {2, 3})});
  CHECK(coarse.measurable_hull(Event(s, {3})) == Event(s, {2, 3}));
  CHECK(coarse.measurable_hull(Event(s, {0})) == Event(s, {0}));
  CHECK(coarse.measurable_hull(Event(s, {0, 1, 2})) == Event::full(s));
  CHECK(coarse.is_measurable(Event(s, {0})));
  CHECK(!coarse.is_measurable(Event(s, {2})));
}

TEST_CASE("complete non-measurability examples") {
  fx::ProductSpace ps;
  CHECK(ps.coarse.is_completely_nonmeasurable(Event(ps.space, {0, 2})));
  CHECK(!ps.coarse.is_completely_nonmeasurable(Event(ps.space, {0, 1})));

  SpacePtr s = make_space({"wA", "wB", "wC1", "wC2"});
  Algebra coarse = Algebra::from_blocks(
      s, {Event(s, {0}), Event(s, {1}), Event(s, {2, 3})});
  CHECK(!coarse.is_completely_nonmeasurable(Event(s, {0, 1, 2})));
  CHECK_THROWS_AS(coarse.is_completely_nonmeasurable(Event::empty(s)),
                  EmptyEventError);
}

TEST_CASE("canonical form: rebuilding from atoms is the identity") {
  gen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    SpacePtr s = gen::random_space(rng, 8);
    Algebra a = gen::random_partition(rng, s);
    CHECK(Algebra::from_blocks(s, a.atoms()) == a);
  }
}

TEST_CASE("generated_by yields the coarsest algebra measuring its inputs") {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    SpacePtr s = gen::random_space(rng, 7);
    std::vector<Event> events;
    std::size_t k = gen::pick(rng, 0, 3);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::size_t> members;
      for (std::size_t st = 0; st < s->size(); ++st)
        if (gen::pick(rng, 0, 1)) members.push_back(st);
      events.emplace_back(s, members);
    }
    Algebra g = Algebra::generated_by(s, events);
    for (const Event& e : events) CHECK(g.measurable_hull(e) == e);
    // Coarsest: merging any two atoms breaks measurability of some input.
    for (std::size_t a = 0; a + 1 < g.atom_count(); ++a)
      for (std::size_t b = a + 1; b < g.atom_count(); ++b) {
        std::vector<Event> merged;
        for (std::size_t c = 0; c < g.atom_count(); ++c)
          if (c != a && c != b) merged.push_back(g.atoms()[c]);
        merged.push_back(g.atoms()[a].unite(g.atoms()[b]));
        Algebra m = Algebra::from_blocks(s, merged);
        bool breaks = false;
        for (const Event& e : events)
          if (!(m.measurable_hull(e) == e)) breaks = true;
        CHECK(breaks);
      }
  }
}

TEST_CASE("refines is a partial order") {
  gen::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    SpacePtr s = gen::random_space(rng, 8);
    Algebra a = gen::random_partition(rng, s);
    Algebra b = gen::random_refinement(rng, a);
    Algebra c = gen::random_refinement(rng, b);
    CHECK(a.refines(a));                                // reflexive
    CHECK(c.refines(a));                                // transitive via b
    if (b.refines(a) && a.refines(b)) CHECK(a == b);    // antisymmetric
  }
}

TEST_CASE("measurable hull is monotone and idempotent") {
  gen::Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    SpacePtr s = gen::random_space(rng, 8);
    Algebra a = gen::random_partition(rng, s);
    std::vector<std::size_t> small, big;
    for (std::size_t st = 0; st < s->size(); ++st) {
      if (gen::pick(rng, 0, 2) == 0) small.push_back(st);
      if (gen::pick(rng, 0, 1) == 0 ||
          (!small.empty() && small.back() == st))
        big.push_back(st);
    }
    Event e(s, small);
    Event f = e.unite(Event(s, big));
    CHECK(a.measurable_hull(e).is_subset_of(a.measurable_hull(f)));
    CHECK(a.measurable_hull(a.measurable_hull(e)) == a.measurable_hull(e));
  }
}

TEST_CASE("complete non-measurability agrees with subset enumeration") {
  gen::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    SpacePtr s = gen::random_space(rng, 6);
    Algebra a = gen::random_partition(rng, s);
    std::vector<std::size_t> members;
    for (std::size_t st = 0; st < s->size(); ++st)
      if (gen::pick(rng, 0, 1)) members.push_back(st);
    if (members.empty()) continue;
    Event e(s, members);
    CHECK(a.is_completely_nonmeasurable(e) ==
          oracle::brute_completely_nonmeasurable(a, e));
  }
}
