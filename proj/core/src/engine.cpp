#include "extbayes/engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace extbayes {

namespace {

std::string event_label(const Event& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : e.member_labels()) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(UpdateStatus status) {
  switch (status) {
    case UpdateStatus::Bayesian: return "BAYESIAN";
    case UpdateStatus::EbPositive: return "EB_POSITIVE";
    case UpdateStatus::EbTrivial: return "EB_TRIVIAL";
    case UpdateStatus::Fails: return "FAILS";
  }
  return "UNKNOWN";
}

UpdatePair::UpdatePair(Measure prior, Measure posterior)
    : prior_(std::move(prior)), posterior_(std::move(posterior)),
      evidence_(posterior_.support()) {
  require_same_space(prior_.space(), posterior_.space());
  if (!posterior_.algebra().refines(prior_.algebra())) {
    throw NotARefinementError(
        "posterior algebra must refine the prior algebra");
  }
}

CommensurabilityResult check_commensurate(const UpdatePair& pair) {
  const Measure& prior = pair.prior();
  const Measure& posterior = pair.posterior();
  const Event& evidence = pair.evidence();
  const auto& coarse_atoms = prior.algebra().atoms();

  // Atom-level masses under both measures; every coarse atom is measurable
  // in the fine algebra by refinement.
  std::vector<Rational> p0(coarse_atoms.size());
  std::vector<Rational> p1(coarse_atoms.size());
  for (std::size_t i = 0; i < coarse_atoms.size(); ++i) {
    p0[i] = prior.atom_mass(i);
    p1[i] = posterior.mass(coarse_atoms[i]);
  }

  CommensurabilityResult result;
  result.commensurate = true;

  // Achieved infimum of p0(F)/p1(F) over atoms with positive posterior mass;
  // nonempty since the posterior masses sum to 1.
  bool have_ratio = false;
  for (std::size_t i = 0; i < coarse_atoms.size(); ++i) {
    if (p1[i] > 0) {
      const Rational ratio = p0[i] / p1[i];
      if (!have_ratio || ratio < result.inf_ratio) {
        result.inf_ratio = ratio;
        have_ratio = true;
      }
    }
  }

  // c1: absolute continuity on coarse events.
  for (std::size_t i = 0; i < coarse_atoms.size(); ++i) {
    if (p0[i] == 0 && p1[i] > 0) {
      result.commensurate = false;
      result.violation = Violation{
          Violation::Kind::C1, coarse_atoms[i], std::nullopt,
          "prior mass 0 but posterior mass " + rational_to_string(p1[i]) +
              " on " + event_label(coarse_atoms[i])};
      return result;
    }
  }

  // c2: for coarse E inside the evidence and any coarse F,
  // p0(E) p1(F) <= p1(E) p0(F). Atom pairs suffice by additivity.
  for (std::size_t e = 0; e < coarse_atoms.size(); ++e) {
    if (!coarse_atoms[e].is_subset_of(evidence)) continue;
    for (std::size_t f = 0; f < coarse_atoms.size(); ++f) {
      if (p0[e] * p1[f] > p1[e] * p0[f]) {
        result.commensurate = false;
        result.violation = Violation{
            Violation::Kind::C2, coarse_atoms[f], coarse_atoms[e],
            "ratio inequality fails at E=" + event_label(coarse_atoms[e]) +
                ", F=" + event_label(coarse_atoms[f]) + ": " +
                rational_to_string(p0[e]) + "*" + rational_to_string(p1[f]) +
                " > " + rational_to_string(p1[e]) + "*" +
                rational_to_string(p0[f])};
        return result;
      }
    }
  }

  return result;
}

Witness construct_witness(const UpdatePair& pair) {
  const Measure& prior = pair.prior();
  const Measure& posterior = pair.posterior();
  const Event& evidence = pair.evidence();
  // Trivial conditioning first: commensurability is beside the point when
  // any measure supported inside the evidence would do.
  if (prior.outer_measure(evidence) == 0) {
    throw TriviallyConditionedError(
        "evidence has outer measure 0; any measure supported inside it is "
        "an admissible posterior");
  }
  const CommensurabilityResult check = check_commensurate(pair);
  if (!check.commensurate) {
    throw NotCommensurateError("pair is not commensurate: " +
                               check.violation->detail);
  }

  const Algebra& coarse = prior.algebra();
  const Algebra& fine = posterior.algebra();

  // beta: forced to prior(E)/posterior(E) when a coarse event E sits inside
  // the evidence (the choice is irrelevant); otherwise the largest
  // admissible value, the infimum ratio.
  Rational beta = check.inf_ratio;
  for (std::size_t i = 0; i < coarse.atom_count(); ++i) {
    if (coarse.atoms()[i].is_subset_of(evidence)) {
      beta = prior.atom_mass(i) / posterior.mass(coarse.atoms()[i]);
      break;
    }
  }

  std::vector<Rational> masses(fine.atom_count(), Rational(0));
  for (std::size_t j = 0; j < fine.atom_count(); ++j) {
    if (fine.atoms()[j].is_subset_of(evidence)) {
      masses[j] = beta * posterior.atom_mass(j);
    }
  }
  // Spread each coarse atom's residual uniformly over its fine sub-atoms
  // outside the evidence.
  for (std::size_t i = 0; i < coarse.atom_count(); ++i) {
    Rational inside = 0;
    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < fine.atom_count(); ++j) {
      if (!fine.atoms()[j].is_subset_of(coarse.atoms()[i])) continue;
      if (fine.atoms()[j].is_subset_of(evidence)) {
        inside += masses[j];
      } else {
        outside.push_back(j);
      }
    }
    const Rational residual = prior.atom_mass(i) - inside;
    if (!outside.empty()) {
      const Rational share = residual / Rational(outside.size());
      for (std::size_t j : outside) masses[j] = share;
    }
    // When the coarse atom lies inside the evidence the residual is 0 by
    // the forced choice of beta.
  }

  return Witness{Measure(fine, std::move(masses)), beta};
}

WitnessCheck verify_witness(const UpdatePair& pair, const Measure& candidate) {
  const Measure& prior = pair.prior();
  const Measure& posterior = pair.posterior();
  const Event& evidence = pair.evidence();
  if (!(candidate.algebra() == posterior.algebra())) {
    throw NotARefinementError("witness candidate must live on the posterior's algebra");
  }

  // eb1: the candidate extends the prior.
  const Measure restricted = candidate.restrict(prior.algebra());
  for (std::size_t i = 0; i < prior.algebra().atom_count(); ++i) {
    if (restricted.atom_mass(i) != prior.atom_mass(i)) {
      return WitnessCheck{
          false, "eb1 violation at atom " +
                     event_label(prior.algebra().atoms()[i]) + ": " +
                     rational_to_string(restricted.atom_mass(i)) + " != " +
                     rational_to_string(prior.atom_mass(i))};
    }
  }

  // eb2: binding only when the evidence is not impossible under the prior.
  if (prior.outer_measure(evidence) > 0) {
    const Rational denom = candidate.mass(evidence);
    if (denom == 0) {
      return WitnessCheck{false,
                          "eb2 violation: witness assigns mass 0 to the "
                          "evidence " + event_label(evidence)};
    }
    const Measure conditioned = candidate.conditional(evidence);
    for (std::size_t j = 0; j < posterior.algebra().atom_count(); ++j) {
      if (conditioned.atom_mass(j) != posterior.atom_mass(j)) {
        return WitnessCheck{
            false, "eb2 violation at atom " +
                       event_label(posterior.algebra().atoms()[j]) + ": " +
                       rational_to_string(conditioned.atom_mass(j)) + " != " +
                       rational_to_string(posterior.atom_mass(j))};
      }
    }
  }
  return WitnessCheck{true, std::nullopt};
}

UpdateReport classify_update(const UpdatePair& pair) {
  const Measure& prior = pair.prior();
  const Measure& posterior = pair.posterior();
  const Event& evidence = pair.evidence();

  UpdateReport report;
  report.completely_nonmeasurable =
      prior.algebra().is_completely_nonmeasurable(evidence);
  report.reverse_bayesian =
      posterior.restrict(prior.algebra()) == prior;

  if (prior.outer_measure(evidence) == 0) {
    report.status = UpdateStatus::EbTrivial;
    return report;
  }

  const CommensurabilityResult check = check_commensurate(pair);
  report.inf_ratio = check.inf_ratio;
  if (!check.commensurate) {
    report.status = UpdateStatus::Fails;
    report.violation = check.violation;
    return report;
  }

  report.witness = construct_witness(pair);
  if (prior.algebra() == posterior.algebra() &&
      prior.mass(evidence) > 0 &&
      prior.conditional(evidence) == posterior) {
    report.status = UpdateStatus::Bayesian;
  } else {
    report.status = UpdateStatus::EbPositive;
  }
  return report;
}

UpdateReport check_geb(const Measure& prior, const Measure& posterior) {
  const SpacePtr& small = prior.space();
  const SpacePtr& big = posterior.space();

  // Embed the original space into the expanded one by label.
  std::vector<std::size_t> big_index(small->size());
  std::vector<std::size_t> omega_members;
  for (std::size_t s = 0; s < small->size(); ++s) {
    const auto idx = big->index_of(small->label(s));
    if (!idx) {
      throw EmbeddingError("state '" + small->label(s) +
                           "' missing from the expanded space");
    }
    big_index[s] = *idx;
    omega_members.push_back(*idx);
  }
  const Event omega(big, omega_members);
  if (!posterior.algebra().is_measurable(omega)) {
    throw EmbeddingError(
        "the original state space is not measurable in the expanded algebra");
  }

  // Trace of the fine algebra on the original space.
  std::vector<Event> trace_blocks;
  for (const auto& atom : posterior.algebra().atoms()) {
    if (!atom.is_subset_of(omega)) continue;
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < small->size(); ++s) {
      if (atom.contains(big_index[s])) members.push_back(s);
    }
    trace_blocks.emplace_back(small, members);
  }
  const Algebra trace = Algebra::from_blocks(small, trace_blocks);
  if (!trace.refines(prior.algebra())) {
    throw NotARefinementError(
        "the expanded algebra's trace does not refine the prior algebra");
  }
  const bool trace_equals_coarse = trace == prior.algebra();

  if (posterior.mass(omega) == 0) {
    UpdateReport report;
    report.status = UpdateStatus::Fails;
    report.violation =
        Violation{Violation::Kind::GebOmegaNull, omega, std::nullopt,
                  "posterior assigns mass 0 to the original state space"};
    report.generalized_reverse_bayesian = false;
    return report;
  }

  // Condition on the original space and pull back to it.
  const Measure conditioned = posterior.conditional(omega);
  std::vector<Rational> trace_masses(trace.atom_count());
  for (std::size_t i = 0; i < trace.atom_count(); ++i) {
    std::vector<std::size_t> big_members;
    for (std::size_t s : trace.atoms()[i].members()) {
      big_members.push_back(big_index[s]);
    }
    trace_masses[i] = conditioned.mass(Event(big, big_members));
  }
  UpdateReport report =
      classify_update(UpdatePair(prior, Measure(trace, std::move(trace_masses))));
  report.generalized_reverse_bayesian =
      trace_equals_coarse && report.status != UpdateStatus::Fails;
  return report;
}

Chain::Chain(std::vector<Measure> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) {
    throw ScenarioError("a chain needs at least one stage");
  }
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i) {
    require_same_space(stages_[i].space(), stages_[i + 1].space());
    if (!stages_[i + 1].algebra().refines(stages_[i].algebra())) {
      throw NotARefinementError("stage " + std::to_string(i + 1) +
                                " does not refine stage " + std::to_string(i));
    }
  }
}

std::vector<PairReport> chain_reports(const Chain& chain) {
  std::vector<PairReport> reports;
  for (std::size_t n = 0; n < chain.length(); ++n) {
    for (std::size_t m = n + 1; m < chain.length(); ++m) {
      reports.push_back(PairReport{
          n, m,
          classify_update(UpdatePair(chain.stages()[n], chain.stages()[m]))});
    }
  }
  return reports;
}

ChainWitness chain_common_witness(const Chain& chain) {
  const auto& stages = chain.stages();
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    if (stages[i].outer_measure(stages[i + 1].support()) == 0) {
      throw TrivialLinkError("stage " + std::to_string(i + 1) +
                             "'s evidence has outer measure 0 under stage " +
                             std::to_string(i));
    }
  }
  ChainWitness out{chain_reports(chain), stages.front()};
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    out.common = construct_witness(UpdatePair(out.common, stages[i + 1])).interim;
  }
  return out;
}

std::pair<Rational, Rational> conditional_bounds(const Measure& prior,
                                                 const Algebra& fine,
                                                 const Event& given,
                                                 const Event& target,
                                                 std::uint64_t cap) {
  if (!fine.is_measurable(given) || !fine.is_measurable(target)) {
    throw NotMeasurableError("given and target must be measurable in the fine algebra");
  }
  if (prior.outer_measure(given) == 0) {
    throw TriviallyConditionedError("conditioning event has outer measure 0");
  }
  const Event meet = target.intersect(given);
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (const auto& vertex : extension_vertices(prior, fine, cap)) {
    const Rational denom = vertex.measure.mass(given);
    if (denom == 0) continue;
    const Rational ratio = vertex.measure.mass(meet) / denom;
    if (!lo || ratio < *lo) lo = ratio;
    if (!hi || ratio > *hi) hi = ratio;
  }
  return {*lo, *hi};
}

}  // namespace extbayes
