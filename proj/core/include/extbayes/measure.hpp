#pragma once

#include <cstdint>
#include <vector>

#include "extbayes/algebra.hpp"
#include "extbayes/rational.hpp"

namespace extbayes {

inline constexpr std::uint64_t kDefaultVertexCap = 1'000'000;

// An exact-rational probability measure on the atoms of an Algebra.
// Masses are nonnegative and sum to exactly 1.
class Measure {
public:
  Measure(Algebra algebra, std::vector<Rational> atom_masses);

  const Algebra& algebra() const { return algebra_; }
  const SpacePtr& space() const { return algebra_.space(); }
  const Rational& atom_mass(std::size_t atom) const {
    return masses_.at(atom);
  }
  const std::vector<Rational>& atom_masses() const { return masses_; }

  // Sum of atom masses over atoms contained in the event.
  // Throws NotMeasurableError when the event is not a union of atoms.
  Rational mass(const Event& event) const;

  // Union of atoms with strictly positive mass: the smallest measurable
  // event with probability 1.
  Event support() const;

  // Mass of the measurable hull; defined for any event over the same space.
  Rational outer_measure(const Event& event) const;

  // Bayesian conditional on a measurable event of positive mass, on the
  // same algebra. Throws ZeroMassConditioningError / NotMeasurableError.
  Measure conditional(const Event& event) const;

  // Restriction to a coarser algebra. Throws NotARefinementError unless
  // this measure's algebra refines `coarse`.
  Measure restrict(const Algebra& coarse) const;

  bool operator==(const Measure& other) const;

private:
  Algebra algebra_;
  std::vector<Rational> masses_;
};

// One extreme extension of a coarse measure to a finer algebra: each coarse
// atom hands its full mass to a single fine atom inside it.
struct ExtensionVertex {
  // For each coarse atom (in canonical order), the index into fine.atoms()
  // of the fine atom receiving the coarse atom's mass.
  std::vector<std::size_t> assignment;
  Measure measure;
};

// All extreme extensions of `coarse_measure` to `fine`, in lexicographic
// order over choice functions. The set of extensions of the coarse measure
// is the convex hull of these vertices.
// Throws NotARefinementError; ExplosionError when the vertex count exceeds
// `cap`.
std::vector<ExtensionVertex> extension_vertices(
    const Measure& coarse_measure, const Algebra& fine,
    std::uint64_t cap = kDefaultVertexCap);

}  // namespace extbayes
