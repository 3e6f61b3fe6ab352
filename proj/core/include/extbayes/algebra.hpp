#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extbayes/errors.hpp"

namespace extbayes {

// A finite state space: an ordered list of distinct state names. Instances
// are immutable and shared by pointer; two spaces are interchangeable when
// their label lists coincide.
class StateSpace {
public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const StateSpace& other) const {
    return labels_ == other.labels_;
  }

private:
  std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

SpacePtr make_space(std::vector<std::string> labels);

// A set of state indices over a fixed StateSpace, stored as a bitset.
// Operations across distinct spaces are hard errors, never coercions.
class Event {
public:
  Event(SpacePtr space, const std::vector<std::size_t>& members);

  static Event empty(SpacePtr space);
  static Event full(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const;
  bool is_empty() const { return size() == 0; }
  bool contains(std::size_t state) const;
  std::vector<std::size_t> members() const;
  std::vector<std::string> member_labels() const;

  // Least member index; only valid on nonempty events.
  std::size_t least() const;

  Event complement() const;
  Event unite(const Event& other) const;
  Event intersect(const Event& other) const;
  Event minus(const Event& other) const;
  bool is_subset_of(const Event& other) const;
  bool intersects(const Event& other) const;

  bool operator==(const Event& other) const;

  // Total order used for deterministic (lexicographic) event enumeration.
  bool operator<(const Event& other) const;

private:
  struct RawBits {};
  Event(RawBits, SpacePtr space, std::vector<std::uint64_t> bits);
  void check_same_space(const Event& other) const;

  SpacePtr space_;
  std::vector<std::uint64_t> bits_;
};

// Requires identical label lists (pointer equality is a fast path).
void require_same_space(const SpacePtr& a, const SpacePtr& b);

// A sigma-algebra on a finite space, stored as the partition of the space
// into its atoms. Atoms are kept in canonical order (sorted by least member)
// so equality is structural.
class Algebra {
public:
  // make_algebra: validates that the blocks form a partition.
  // Throws EmptyBlockError, OverlapError, CoverageError.
  static Algebra from_blocks(const SpacePtr& space,
                             const std::vector<Event>& blocks);

  // generate_algebra: coarsest algebra making every input event measurable.
  static Algebra generated_by(const SpacePtr& space,
                              const std::vector<Event>& events);

  static Algebra trivial(const SpacePtr& space);
  static Algebra discrete(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  const std::vector<Event>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  // Index of the atom containing the given state.
  std::size_t atom_of(std::size_t state) const { return atom_index_.at(state); }

  // True iff every atom of `coarse` is a union of atoms of this algebra.
  bool refines(const Algebra& coarse) const;

  // Union of all atoms intersecting the event: the smallest measurable
  // superset. An event is measurable iff hull == event.
  Event measurable_hull(const Event& event) const;
  bool is_measurable(const Event& event) const;

  // True iff no atom of this algebra is contained in the event.
  // Throws EmptyEventError on the empty event.
  bool is_completely_nonmeasurable(const Event& event) const;

  bool operator==(const Algebra& other) const;

private:
  Algebra(SpacePtr space, std::vector<Event> atoms);

  SpacePtr space_;
  std::vector<Event> atoms_;
  std::vector<std::size_t> atom_index_;  // state -> atom
};

}  // namespace extbayes
