#include "extbayes/algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace extbayes {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw EmptyEventError("a state space needs at least one state");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw OverlapError("duplicate state label '" + label + "'");
    }
  }
}

std::optional<std::size_t> StateSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

SpacePtr make_space(std::vector<std::string> labels) {
  return std::make_shared<const StateSpace>(std::move(labels));
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) {
    throw SpaceMismatchError("operands belong to different state spaces");
  }
}

Event::Event(RawBits, SpacePtr space, std::vector<std::uint64_t> bits)
    : space_(std::move(space)), bits_(std::move(bits)) {}

Event::Event(SpacePtr space, const std::vector<std::size_t>& members)
    : space_(std::move(space)), bits_(word_count(space_->size()), 0) {
  for (std::size_t idx : members) {
    if (idx >= space_->size()) {
      throw SpaceMismatchError("state index " + std::to_string(idx) +
                               " out of range");
    }
    bits_[idx / 64] |= std::uint64_t{1} << (idx % 64);
  }
}

Event Event::empty(SpacePtr space) {
  std::vector<std::uint64_t> bits(word_count(space->size()), 0);
  return Event(RawBits{}, std::move(space), std::move(bits));
}

Event Event::full(SpacePtr space) { return empty(std::move(space)).complement(); }

std::size_t Event::size() const {
  std::size_t total = 0;
  for (std::uint64_t word : bits_) total += std::popcount(word);
  return total;
}

bool Event::contains(std::size_t state) const {
  if (state >= space_->size()) return false;
  return (bits_[state / 64] >> (state % 64)) & 1;
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space_->size(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Event::member_labels() const {
  std::vector<std::string> out;
  for (std::size_t i : members()) out.push_back(space_->label(i));
  return out;
}

std::size_t Event::least() const {
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if (bits_[w] != 0) {
      return w * 64 + std::countr_zero(bits_[w]);
    }
  }
  throw EmptyEventError("least() on the empty event");
}

void Event::check_same_space(const Event& other) const {
  require_same_space(space_, other.space_);
}

Event Event::complement() const {
  std::vector<std::uint64_t> bits(bits_.size());
  for (std::size_t w = 0; w < bits_.size(); ++w) bits[w] = ~bits_[w];
  // Clear padding above the space size.
  const std::size_t n = space_->size();
  if (n % 64 != 0) {
    bits.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  }
  return Event(RawBits{}, space_, std::move(bits));
}

Event Event::unite(const Event& other) const {
  check_same_space(other);
  std::vector<std::uint64_t> bits(bits_.size());
  for (std::size_t w = 0; w < bits_.size(); ++w) bits[w] = bits_[w] | other.bits_[w];
  return Event(RawBits{}, space_, std::move(bits));
}

Event Event::intersect(const Event& other) const {
  check_same_space(other);
  std::vector<std::uint64_t> bits(bits_.size());
  for (std::size_t w = 0; w < bits_.size(); ++w) bits[w] = bits_[w] & other.bits_[w];
  return Event(RawBits{}, space_, std::move(bits));
}

Event Event::minus(const Event& other) const {
  check_same_space(other);
  std::vector<std::uint64_t> bits(bits_.size());
  for (std::size_t w = 0; w < bits_.size(); ++w) bits[w] = bits_[w] & ~other.bits_[w];
  return Event(RawBits{}, space_, std::move(bits));
}

bool Event::is_subset_of(const Event& other) const {
  check_same_space(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & ~other.bits_[w]) != 0) return false;
  }
  return true;
}

bool Event::intersects(const Event& other) const {
  check_same_space(other);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    if ((bits_[w] & other.bits_[w]) != 0) return true;
  }
  return false;
}

bool Event::operator==(const Event& other) const {
  check_same_space(other);
  return bits_ == other.bits_;
}

bool Event::operator<(const Event& other) const {
  check_same_space(other);
  // Lexicographic over membership of states 0, 1, ... (state 0 most
  // significant), giving a deterministic enumeration order.
  for (std::size_t i = 0; i < space_->size(); ++i) {
    const bool a = contains(i);
    const bool b = other.contains(i);
    if (a != b) return b;
  }
  return false;
}

Algebra::Algebra(SpacePtr space, std::vector<Event> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms)),
      atom_index_(space_->size(), 0) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Event& a, const Event& b) { return a.least() < b.least(); });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t s : atoms_[i].members()) atom_index_[s] = i;
  }
}

Algebra Algebra::from_blocks(const SpacePtr& space,
                             const std::vector<Event>& blocks) {
  Event covered = Event::empty(space);
  for (const auto& block : blocks) {
    require_same_space(space, block.space());
    if (block.is_empty()) {
      throw EmptyBlockError("partition blocks must be nonempty");
    }
    if (covered.intersects(block)) {
      throw OverlapError("blocks overlap at state '" +
                         space->label(covered.intersect(block).least()) + "'");
    }
    covered = covered.unite(block);
  }
  if (!(covered == Event::full(space))) {
    throw CoverageError("blocks do not cover state '" +
                        space->label(covered.complement().least()) + "'");
  }
  return Algebra(space, blocks);
}

Algebra Algebra::generated_by(const SpacePtr& space,
                              const std::vector<Event>& events) {
  for (const auto& e : events) require_same_space(space, e.space());
  // Group states by their membership signature across the generators; the
  // nonempty cells of the common refinement are the atoms.
  std::map<std::vector<bool>, std::vector<std::size_t>> cells;
  for (std::size_t s = 0; s < space->size(); ++s) {
    std::vector<bool> signature;
    signature.reserve(events.size());
    for (const auto& e : events) signature.push_back(e.contains(s));
    cells[signature].push_back(s);
  }
  std::vector<Event> atoms;
  atoms.reserve(cells.size());
  for (const auto& [sig, states] : cells) atoms.emplace_back(space, states);
  return Algebra(space, std::move(atoms));
}

Algebra Algebra::trivial(const SpacePtr& space) {
  return Algebra(space, {Event::full(space)});
}

Algebra Algebra::discrete(const SpacePtr& space) {
  std::vector<Event> atoms;
  for (std::size_t s = 0; s < space->size(); ++s) {
    atoms.push_back(Event(space, std::vector<std::size_t>{s}));
  }
  return Algebra(space, std::move(atoms));
}

bool Algebra::refines(const Algebra& coarse) const {
  require_same_space(space_, coarse.space_);
  for (const auto& atom : atoms_) {
    if (!atom.is_subset_of(coarse.atoms_[coarse.atom_of(atom.least())])) {
      return false;
    }
  }
  return true;
}

Event Algebra::measurable_hull(const Event& event) const {
  require_same_space(space_, event.space());
  Event hull = Event::empty(space_);
  for (const auto& atom : atoms_) {
    if (atom.intersects(event)) hull = hull.unite(atom);
  }
  return hull;
}

bool Algebra::is_measurable(const Event& event) const {
  return measurable_hull(event) == event;
}

bool Algebra::is_completely_nonmeasurable(const Event& event) const {
  require_same_space(space_, event.space());
  if (event.is_empty()) {
    throw EmptyEventError("complete non-measurability is asked of nonempty events");
  }
  for (const auto& atom : atoms_) {
    if (atom.is_subset_of(event)) return false;
  }
  return true;
}

bool Algebra::operator==(const Algebra& other) const {
  if (!(space_ == other.space_ || *space_ == *other.space_)) return false;
  return atoms_ == other.atoms_;
}

}  // namespace extbayes
