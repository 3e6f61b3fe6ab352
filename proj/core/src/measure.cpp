#include "extbayes/measure.hpp"

#include <utility>

namespace extbayes {

Measure::Measure(Algebra algebra, std::vector<Rational> atom_masses)
    : algebra_(std::move(algebra)), masses_(std::move(atom_masses)) {
  if (masses_.size() != algebra_.atom_count()) {
    throw InvalidMeasureError("expected one mass per atom (" +
                              std::to_string(algebra_.atom_count()) + "), got " +
                              std::to_string(masses_.size()));
  }
  Rational total = 0;
  for (const auto& m : masses_) {
    if (m < 0) throw InvalidMeasureError("negative atom mass");
    total += m;
  }
  if (total != 1) {
    throw InvalidMeasureError("atom masses sum to " + rational_to_string(total) +
                              ", not 1");
  }
}

Rational Measure::mass(const Event& event) const {
  if (!algebra_.is_measurable(event)) {
    throw NotMeasurableError("event is not a union of atoms");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < algebra_.atom_count(); ++i) {
    if (algebra_.atoms()[i].is_subset_of(event)) total += masses_[i];
  }
  return total;
}

Event Measure::support() const {
  Event s = Event::empty(space());
  for (std::size_t i = 0; i < algebra_.atom_count(); ++i) {
    if (masses_[i] > 0) s = s.unite(algebra_.atoms()[i]);
  }
  return s;
}

Rational Measure::outer_measure(const Event& event) const {
  return mass(algebra_.measurable_hull(event));
}

Measure Measure::conditional(const Event& event) const {
  const Rational denom = mass(event);  // NotMeasurableError if unmeasurable
  if (denom == 0) {
    throw ZeroMassConditioningError("conditioning event has mass 0");
  }
  std::vector<Rational> masses(algebra_.atom_count(), Rational(0));
  for (std::size_t i = 0; i < algebra_.atom_count(); ++i) {
    if (algebra_.atoms()[i].is_subset_of(event)) {
      masses[i] = masses_[i] / denom;
    }
  }
  return Measure(algebra_, std::move(masses));
}

Measure Measure::restrict(const Algebra& coarse) const {
  if (!algebra_.refines(coarse)) {
    throw NotARefinementError("measure's algebra does not refine the target");
  }
  std::vector<Rational> masses(coarse.atom_count(), Rational(0));
  for (std::size_t i = 0; i < algebra_.atom_count(); ++i) {
    masses[coarse.atom_of(algebra_.atoms()[i].least())] += masses_[i];
  }
  return Measure(coarse, std::move(masses));
}

bool Measure::operator==(const Measure& other) const {
  return algebra_ == other.algebra_ && masses_ == other.masses_;
}

std::vector<ExtensionVertex> extension_vertices(const Measure& coarse_measure,
                                                const Algebra& fine,
                                                std::uint64_t cap) {
  const Algebra& coarse = coarse_measure.algebra();
  if (!fine.refines(coarse)) {
    throw NotARefinementError("target algebra does not refine the measure's");
  }
  // Fine atoms inside each coarse atom, in canonical order.
  std::vector<std::vector<std::size_t>> sub_atoms(coarse.atom_count());
  for (std::size_t j = 0; j < fine.atom_count(); ++j) {
    sub_atoms[coarse.atom_of(fine.atoms()[j].least())].push_back(j);
  }

  std::uint64_t count = 1;
  for (const auto& subs : sub_atoms) {
    if (subs.empty() || count > cap / subs.size()) {
      if (!subs.empty() && count * subs.size() <= cap) {
        count *= subs.size();
        continue;
      }
      throw ExplosionError("extension vertex count exceeds cap " +
                           std::to_string(cap));
    }
    count *= subs.size();
  }

  std::vector<ExtensionVertex> vertices;
  vertices.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> choice(coarse.atom_count(), 0);
  while (true) {
    std::vector<Rational> masses(fine.atom_count(), Rational(0));
    std::vector<std::size_t> assignment(coarse.atom_count());
    for (std::size_t b = 0; b < coarse.atom_count(); ++b) {
      assignment[b] = sub_atoms[b][choice[b]];
      masses[assignment[b]] = coarse_measure.atom_mass(b);
    }
    vertices.push_back(
        ExtensionVertex{std::move(assignment), Measure(fine, std::move(masses))});
    // Lexicographic odometer over choice functions.
    std::size_t b = coarse.atom_count();
    while (b > 0) {
      --b;
      if (++choice[b] < sub_atoms[b].size()) break;
      choice[b] = 0;
      if (b == 0) return vertices;
    }
    if (coarse.atom_count() == 0) return vertices;
  }
}

}  // namespace extbayes
