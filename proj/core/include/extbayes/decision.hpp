#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extbayes/engine.hpp"

namespace extbayes {

// A finite utility index over prize labels, with a designated worst prize of
// utility exactly 0 and at least one strictly positive utility.
class UtilityIndex {
public:
  UtilityIndex(std::vector<std::string> prizes, std::vector<Rational> utils,
               std::string worst);

  const std::vector<std::string>& prizes() const { return prizes_; }
  const std::string& worst() const { return worst_; }
  const Rational& util(const std::string& prize) const;

private:
  std::vector<std::string> prizes_;
  std::vector<Rational> utils_;
  std::string worst_;
};

// A bet paying `prize` on `event` and the worst prize otherwise.
struct Bet {
  std::string prize;
  Event event;
};

// Subjective expected value of a two-outcome act: u(prize) * m(event).
Rational bet_value(const Measure& measure, const UtilityIndex& u,
                   const Bet& bet);

struct DiscardedCheck {
  bool found = false;
  // The largest posterior-null sub-event of the queried event, when it has
  // positive prior outer measure.
  std::optional<Event> certificate;
};

// Does `f` contain a discarded sub-event: posterior-null but with every
// coarse-measurable superset non-null under the prior?
DiscardedCheck contains_discarded(const UpdatePair& pair, const Event& f);

// Can some pair of prizes make a bet on `f` weakly preferred to a bet on `e`
// ex ante and strictly dispreferred ex post?
bool reversal_possible(const UpdatePair& pair, const Event& e, const Event& f);

struct ConsistencyReport {
  bool consistent = false;
  // First (lexicographic) pair (e, f) with a possible reversal against an
  // f lacking a discarded sub-event.
  std::optional<std::pair<Event, Event>> violation;
  std::string explanation;
};

// Extension consistency over all pairs of coarse-measurable events.
// Throws TooManyAtomsError beyond `max_atoms` coarse atoms.
ConsistencyReport check_extension_consistency(const UpdatePair& pair,
                                              std::size_t max_atoms = 12);

}  // namespace extbayes
