#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extbayes/measure.hpp"

namespace extbayes {

// A prior on a coarse algebra together with a posterior on a finer algebra
// over the same state space.
class UpdatePair {
public:
  UpdatePair(Measure prior, Measure posterior);

  const Measure& prior() const { return prior_; }
  const Measure& posterior() const { return posterior_; }
  // Support of the posterior: the learned event S1.
  const Event& evidence() const { return evidence_; }

private:
  Measure prior_;
  Measure posterior_;
  Event evidence_;
};

// Interim measure certifying extended Bayesianism, with beta = interim(S1).
struct Witness {
  Measure interim;
  Rational beta;
};

enum class UpdateStatus { Bayesian, EbPositive, EbTrivial, Fails };

std::string to_string(UpdateStatus status);

// Names the commensurability condition an update pair failed.
struct Violation {
  enum class Kind { C1, C2, GebOmegaNull };
  Kind kind;
  // C1: the null prior event that gained mass. C2: the pair (E, F) with
  // E inside the evidence. GebOmegaNull: the original state space, as an
  // event in the expanded space, carrying zero posterior mass.
  Event f;
  std::optional<Event> e;
  std::string detail;
};

struct CommensurabilityResult {
  bool commensurate = false;
  std::optional<Violation> violation;
  // Achieved infimum of prior(F)/posterior(F) over coarse atoms with
  // positive posterior mass. On a finite space this is the bounded
  // commensurability ratio; it is always attained.
  Rational inf_ratio;
};

// Atom-level check of c1 and c2; sufficiency of atoms follows from
// additivity (and is property-tested against full event enumeration).
CommensurabilityResult check_commensurate(const UpdatePair& pair);

// Deterministic witness construction. beta is the forced ratio
// prior(E)/posterior(E) when some coarse event E sits inside the evidence,
// otherwise the infimum ratio; each coarse atom's residual mass is spread
// uniformly over its fine sub-atoms outside the evidence.
// Throws NotCommensurateError, TriviallyConditionedError.
Witness construct_witness(const UpdatePair& pair);

struct WitnessCheck {
  bool ok = false;
  // Human-readable description of the first failed condition (eb1/eb2).
  std::optional<std::string> violation;
};

// Checks eb1 (candidate extends the prior) and eb2 (conditioning the
// candidate on the evidence yields the posterior, when the evidence has
// positive outer measure).
WitnessCheck verify_witness(const UpdatePair& pair, const Measure& candidate);

struct UpdateReport {
  UpdateStatus status = UpdateStatus::Fails;
  std::optional<Witness> witness;
  std::optional<Violation> violation;
  bool completely_nonmeasurable = false;
  bool reverse_bayesian = false;
  // Absent when the pair is trivially conditioned (commensurability never
  // evaluated).
  std::optional<Rational> inf_ratio;
  // Only set by check_geb.
  std::optional<bool> generalized_reverse_bayesian;
};

UpdateReport classify_update(const UpdatePair& pair);

// Generalized EB for state-space expansion: the prior lives on a space that
// embeds (by label) into the posterior's space as a measurable event.
// Throws EmbeddingError, NotARefinementError.
UpdateReport check_geb(const Measure& prior, const Measure& posterior);

// Measures over increasingly fine algebras on a shared state space.
class Chain {
public:
  explicit Chain(std::vector<Measure> stages);

  const std::vector<Measure>& stages() const { return stages_; }
  std::size_t length() const { return stages_.size(); }

private:
  std::vector<Measure> stages_;
};

struct PairReport {
  std::size_t from = 0;
  std::size_t to = 0;
  UpdateReport report;
};

// classify_update on every pair (n, m) with n < m, computed directly.
std::vector<PairReport> chain_reports(const Chain& chain);

struct ChainWitness {
  std::vector<PairReport> reports;
  // Single measure on the finest algebra whose conditional on each stage's
  // evidence restricts to that stage's measure.
  Measure common;
};

// Iterated witness construction along the chain. Throws TrivialLinkError
// when some consecutive evidence has zero outer measure, and propagates
// NotCommensurateError when a consecutive link fails commensurability.
ChainWitness chain_common_witness(const Chain& chain);

// Inner and outer conditional probability of `target` given `given`:
// (min, max) of m(target & given)/m(given) over the extreme extensions of
// the prior to `fine` with positive denominator. Extrema of the
// linear-fractional objective are attained at such vertices.
// Throws TriviallyConditionedError, ExplosionError, NotMeasurableError.
std::pair<Rational, Rational> conditional_bounds(
    const Measure& prior, const Algebra& fine, const Event& given,
    const Event& target, std::uint64_t cap = kDefaultVertexCap);

}  // namespace extbayes
