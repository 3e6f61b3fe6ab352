#pragma once

// Hand-built instances reused across the test files: the four-state disease
// example, the five-state refinement chain, and friends.

#include <vector>

#include "extbayes/engine.hpp"

namespace fx {

using extbayes::Algebra;
using extbayes::Chain;
using extbayes::Event;
using extbayes::Measure;
using extbayes::Rational;
using extbayes::SpacePtr;
using extbayes::UpdatePair;

inline Rational rat(long n, long d = 1) { return Rational(n) / Rational(d); }

// Four states wA, wB, wC1, wC2; prior (1/2, 1/4, 1/4) on the partition
// {wA},{wB},{wC1,wC2}; posterior (4/7, 2/7, 1/7, 0) on the discrete algebra.
struct Disease {
  SpacePtr space = extbayes::make_space({"wA", "wB", "wC1", "wC2"});
  Algebra coarse = Algebra::from_blocks(
      space, {Event(space, {0}), Event(space, {1}), Event(space, {2, 3})});
  Algebra fine = Algebra::discrete(space);
  Measure prior{coarse, {rat(1, 2), rat(1, 4), rat(1, 4)}};
  Measure posterior{fine, {rat(4, 7), rat(2, 7), rat(1, 7), rat(0)}};
  UpdatePair pair{prior, posterior};

  Event ev(std::vector<std::size_t> members) const {
    return Event(space, members);
  }
};

// Five states; stage 0 on {{w1,w2,w3},{w4,w5}} with masses (1/2,1/2);
// stage 1 on {{w1,w2},{w3},{w4,w5}} with (0,1/3,2/3); stage 2 discrete with
// (0,0,1/2,1/2,0). Common witness should be (1/8,1/8,1/4,1/4,1/4).
inline Chain five_state_chain() {
  SpacePtr space = extbayes::make_space({"w1", "w2", "w3", "w4", "w5"});
  Algebra a0 = Algebra::from_blocks(
      space, {Event(space, {0, 1, 2}), Event(space, {3, 4})});
  Algebra a1 = Algebra::from_blocks(
      space, {Event(space, {0, 1}), Event(space, {2}), Event(space, {3, 4})});
  Algebra a2 = Algebra::discrete(space);
  return Chain({Measure(a0, {rat(1, 2), rat(1, 2)}),
                Measure(a1, {rat(0), rat(1, 3), rat(2, 3)}),
                Measure(a2, {rat(0), rat(0), rat(1, 2), rat(1, 2), rat(0)})});
}

// Three states, all algebras discrete; stage 1 concentrates on a state with
// prior mass zero, and the endpoints violate the ratio inequality.
inline Chain measure_zero_chain() {
  SpacePtr space = extbayes::make_space({"w1", "w2", "w3"});
  Algebra d = Algebra::discrete(space);
  return Chain({Measure(d, {rat(0), rat(1, 3), rat(2, 3)}),
                Measure(d, {rat(1), rat(0), rat(0)}),
                Measure(d, {rat(0), rat(2, 3), rat(1, 3)})});
}

// Product space {HA,HB,TA,TB}: prior (1/2,1/2) on the coin coordinate,
// posterior (3/4 on HA, 1/4 on TA). The support {HA,TA} is completely
// non-measurable in the coarse algebra.
struct ProductSpace {
  SpacePtr space = extbayes::make_space({"HA", "HB", "TA", "TB"});
  Algebra coarse = Algebra::from_blocks(
      space, {Event(space, {0, 1}), Event(space, {2, 3})});
  Algebra fine = Algebra::discrete(space);
  Measure prior{coarse, {rat(1, 2), rat(1, 2)}};
  Measure posterior{fine, {rat(3, 4), rat(0), rat(1, 4), rat(0)}};
  UpdatePair pair{prior, posterior};
};

}  // namespace fx
