#include "extbayes/decision.hpp"

#include <bit>
#include <utility>

namespace extbayes {

UtilityIndex::UtilityIndex(std::vector<std::string> prizes,
                           std::vector<Rational> utils, std::string worst)
    : prizes_(std::move(prizes)), utils_(std::move(utils)),
      worst_(std::move(worst)) {
  if (prizes_.size() != utils_.size()) {
    throw ScenarioError("one utility per prize required");
  }
  bool worst_found = false;
  bool nontrivial = false;
  for (std::size_t i = 0; i < prizes_.size(); ++i) {
    if (utils_[i] < 0) throw ScenarioError("utilities must be nonnegative");
    if (utils_[i] > 0) nontrivial = true;
    if (prizes_[i] == worst_) {
      worst_found = true;
      if (utils_[i] != 0) {
        throw ScenarioError("the worst prize must have utility 0");
      }
    }
  }
  if (!worst_found) throw UnknownPrizeError("worst prize '" + worst_ + "' unknown");
  if (!nontrivial) throw ScenarioError("utility index is trivial (all zero)");
}

const Rational& UtilityIndex::util(const std::string& prize) const {
  for (std::size_t i = 0; i < prizes_.size(); ++i) {
    if (prizes_[i] == prize) return utils_[i];
  }
  throw UnknownPrizeError("unknown prize '" + prize + "'");
}

Rational bet_value(const Measure& measure, const UtilityIndex& u,
                   const Bet& bet) {
  return u.util(bet.prize) * measure.mass(bet.event);
}

DiscardedCheck contains_discarded(const UpdatePair& pair, const Event& f) {
  const Algebra& fine = pair.posterior().algebra();
  if (!fine.is_measurable(f)) {
    throw NotMeasurableError("queried event is not measurable in the fine algebra");
  }
  // Largest posterior-null sub-event of f. Any discarded sub-event is
  // posterior-null, hence inside this one; outer-measure monotonicity makes
  // it a maximal certificate.
  Event null_part = Event::empty(f.space());
  for (std::size_t j = 0; j < fine.atom_count(); ++j) {
    if (fine.atoms()[j].is_subset_of(f) && pair.posterior().atom_mass(j) == 0) {
      null_part = null_part.unite(fine.atoms()[j]);
    }
  }
  if (!null_part.is_empty() && pair.prior().outer_measure(null_part) > 0) {
    return DiscardedCheck{true, null_part};
  }
  return DiscardedCheck{false, std::nullopt};
}

bool reversal_possible(const UpdatePair& pair, const Event& e, const Event& f) {
  const Rational p0e = pair.prior().mass(e);
  const Rational p0f = pair.prior().mass(f);
  const Rational p1e = pair.posterior().mass(e);
  const Rational p1f = pair.posterior().mass(f);
  // Some stake ratio lambda >= 0 satisfies lambda*p0(F) >= p0(E) and
  // p1(E) > lambda*p1(F) iff:
  if (p1e * p0f > p0e * p1f) return true;
  return p0f == 0 && p0e == 0 && p1e > 0;
}

ConsistencyReport check_extension_consistency(const UpdatePair& pair,
                                              std::size_t max_atoms) {
  const Algebra& coarse = pair.prior().algebra();
  const std::size_t k = coarse.atom_count();
  if (k > max_atoms) {
    throw TooManyAtomsError("coarse algebra has " + std::to_string(k) +
                            " atoms; event enumeration capped at " +
                            std::to_string(max_atoms));
  }

  // Masses of every coarse-measurable event, indexed by atom bitmask.
  const std::size_t total = std::size_t{1} << k;
  std::vector<Rational> p0(total, Rational(0)), p1(total, Rational(0));
  std::vector<Rational> atom_p1(k);
  for (std::size_t i = 0; i < k; ++i) {
    atom_p1[i] = pair.posterior().mass(coarse.atoms()[i]);
  }
  for (std::size_t s = 1; s < total; ++s) {
    const std::size_t low = std::countr_zero(s);
    const std::size_t rest = s & (s - 1);
    p0[s] = p0[rest] + pair.prior().atom_mass(low);
    p1[s] = p1[rest] + atom_p1[low];
  }

  const auto event_of = [&](std::size_t mask) {
    Event out = Event::empty(coarse.space());
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) out = out.unite(coarse.atoms()[i]);
    }
    return out;
  };

  // Deterministic first violation: lexicographic over (e, f) bitmasks.
  for (std::size_t e = 0; e < total; ++e) {
    for (std::size_t f = 0; f < total; ++f) {
      const bool reversal = p1[e] * p0[f] > p0[e] * p1[f] ||
                            (p0[f] == 0 && p0[e] == 0 && p1[e] > 0);
      if (!reversal) continue;
      const Event fe = event_of(f);
      if (!contains_discarded(pair, fe).found) {
        const Event ee = event_of(e);
        return ConsistencyReport{
            false, std::make_pair(ee, fe),
            "a reversal against F is possible yet F contains no discarded "
            "sub-event"};
      }
    }
  }
  return ConsistencyReport{true, std::nullopt, ""};
}

}  // namespace extbayes
