#include "extbayes/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace extbayes {

namespace {

using Json = nlohmann::ordered_json;

Event event_from_labels(const SpacePtr& space, const Json& labels,
                        const std::string& where) {
  if (!labels.is_array()) {
    throw ScenarioError(where + ": expected an array of state names");
  }
  std::vector<std::size_t> members;
  for (const auto& item : labels) {
    if (!item.is_string()) {
      throw ScenarioError(where + ": state names must be strings");
    }
    const auto idx = space->index_of(item.get<std::string>());
    if (!idx) {
      throw ScenarioError(where + ": unknown state '" +
                          item.get<std::string>() + "'");
    }
    members.push_back(*idx);
  }
  return Event(space, members);
}

Measure measure_from_entries(const Algebra& algebra, const Json& entries,
                             const std::vector<std::string>* props,
                             const std::string& where) {
  if (!entries.is_array()) {
    throw ScenarioError(where + ": 'measure' must be an array");
  }
  std::vector<Rational> masses(algebra.atom_count(), Rational(0));
  std::vector<bool> covered(algebra.atom_count(), false);
  for (const auto& entry : entries) {
    if (!entry.is_object() || !entry.contains("mass")) {
      throw ScenarioError(where + ": measure entries need a 'mass'");
    }
    const Rational mass = parse_rational(entry.at("mass").get<std::string>());
    Event set = Event::empty(algebra.space());
    if (entry.contains("event")) {
      set = event_from_labels(algebra.space(), entry.at("event"), where);
    } else if (entry.contains("formula")) {
      if (props == nullptr) {
        throw ScenarioError(where +
                            ": 'formula' entries need a propositional scenario");
      }
      set = truth_set(parse_formula(entry.at("formula").get<std::string>()),
                      *props, algebra.space());
    } else {
      throw ScenarioError(where + ": measure entries need 'event' or 'formula'");
    }
    bool matched = false;
    for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
      if (algebra.atoms()[i] == set) {
        if (covered[i]) {
          throw ScenarioError(where + ": atom assigned mass twice");
        }
        covered[i] = true;
        masses[i] = mass;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ScenarioError(where +
                          ": measure entry does not denote an atom of the "
                          "period's algebra");
    }
  }
  return Measure(algebra, std::move(masses));
}

Algebra algebra_from_blocks(const SpacePtr& space, const Json& blocks,
                            const std::string& where) {
  if (!blocks.is_array() || blocks.empty()) {
    throw ScenarioError(where + ": 'algebra' must be a nonempty array of blocks");
  }
  std::vector<Event> events;
  for (const auto& block : blocks) {
    events.push_back(event_from_labels(space, block, where));
  }
  return Algebra::from_blocks(space, events);
}

std::vector<std::string> string_list(const Json& value, const std::string& where) {
  if (!value.is_array()) {
    throw ScenarioError(where + ": expected an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw ScenarioError(where + ": expected strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::optional<UtilityIndex> utility_from_json(const Json& doc) {
  if (!doc.contains("utility")) return std::nullopt;
  const Json& u = doc.at("utility");
  if (!u.is_object() || !u.contains("prizes") || !u.contains("worst")) {
    throw ScenarioError("'utility' needs 'prizes' and 'worst'");
  }
  std::vector<std::string> prizes;
  std::vector<Rational> utils;
  for (const auto& [name, value] : u.at("prizes").items()) {
    prizes.push_back(name);
    utils.push_back(parse_rational(value.get<std::string>()));
  }
  return UtilityIndex(std::move(prizes), std::move(utils),
                      u.at("worst").get<std::string>());
}

// ---------------------------------------------------------------------------
// Report rendering

Json event_json(const Event& e) { return Json(e.member_labels()); }

Json measure_json(const Measure& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.algebra().atom_count(); ++i) {
    Json entry;
    entry["event"] = event_json(m.algebra().atoms()[i]);
    entry["mass"] = rational_to_string(m.atom_mass(i));
    out.push_back(std::move(entry));
  }
  return out;
}

Json violation_json(const Violation& v) {
  Json out;
  switch (v.kind) {
    case Violation::Kind::C1: out["condition"] = "c1"; break;
    case Violation::Kind::C2: out["condition"] = "c2"; break;
    case Violation::Kind::GebOmegaNull: out["condition"] = "geb_omega_null"; break;
  }
  if (v.e) out["e"] = event_json(*v.e);
  out["f"] = event_json(v.f);
  out["detail"] = v.detail;
  return out;
}

Json witness_json(const Witness& w) {
  Json out;
  out["beta"] = rational_to_string(w.beta);
  out["interim"] = measure_json(w.interim);
  return out;
}

Json report_json(const UpdateReport& report) {
  Json out;
  out["status"] = to_string(report.status);
  Json flags;
  flags["completely_nonmeasurable"] = report.completely_nonmeasurable;
  flags["reverse_bayesian"] = report.reverse_bayesian;
  if (report.generalized_reverse_bayesian) {
    flags["generalized_reverse_bayesian"] = *report.generalized_reverse_bayesian;
  }
  out["flags"] = std::move(flags);
  out["inf_ratio"] =
      report.inf_ratio ? Json(rational_to_string(*report.inf_ratio)) : Json();
  out["witness"] = report.witness ? witness_json(*report.witness) : Json();
  out["violation"] = report.violation ? violation_json(*report.violation) : Json();
  return out;
}

std::string label_set(const Event& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : e.member_labels()) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

void render_measure_text(const Measure& m, std::ostringstream& out,
                         const std::string& indent) {
  for (std::size_t i = 0; i < m.algebra().atom_count(); ++i) {
    out << indent << label_set(m.algebra().atoms()[i]) << " = "
        << rational_to_string(m.atom_mass(i)) << "\n";
  }
}

void render_report_text(const UpdateReport& report, std::ostringstream& out) {
  out << "status: " << to_string(report.status) << "\n";
  out << "completely_nonmeasurable: "
      << (report.completely_nonmeasurable ? "true" : "false") << "\n";
  out << "reverse_bayesian: " << (report.reverse_bayesian ? "true" : "false")
      << "\n";
  if (report.generalized_reverse_bayesian) {
    out << "generalized_reverse_bayesian: "
        << (*report.generalized_reverse_bayesian ? "true" : "false") << "\n";
  }
  if (report.inf_ratio) {
    out << "inf_ratio: " << rational_to_string(*report.inf_ratio) << "\n";
  }
  if (report.witness) {
    out << "beta: " << rational_to_string(report.witness->beta) << "\n";
    out << "interim:\n";
    render_measure_text(report.witness->interim, out, "  ");
  }
  if (report.violation) {
    out << "violation: " << report.violation->detail << "\n";
  }
}

bool report_ok(const UpdateReport& report) {
  return report.status != UpdateStatus::Fails;
}

Json scenario_json_from_chain(const Chain& chain) {
  Json out;
  out["states"] = chain.stages().front().space()->labels();
  Json periods = Json::array();
  for (const auto& stage : chain.stages()) {
    Json period;
    Json blocks = Json::array();
    for (const auto& atom : stage.algebra().atoms()) {
      blocks.push_back(event_json(atom));
    }
    period["algebra"] = std::move(blocks);
    Json measure = Json::array();
    for (std::size_t i = 0; i < stage.algebra().atom_count(); ++i) {
      Json entry;
      entry["event"] = event_json(stage.algebra().atoms()[i]);
      entry["mass"] = rational_to_string(stage.atom_mass(i));
      measure.push_back(std::move(entry));
    }
    period["measure"] = std::move(measure);
    periods.push_back(std::move(period));
  }
  out["periods"] = std::move(periods);
  return out;
}

UpdatePair first_pair(const LoadedScenario& scenario) {
  if (!scenario.chain || scenario.chain->length() < 2) {
    throw ScenarioError("this command needs at least two periods");
  }
  return UpdatePair(scenario.chain->stages()[0], scenario.chain->stages()[1]);
}

std::string finish(const Json& json_report, const std::string& text_report,
                   const CommandOptions& options) {
  if (options.format == "json") {
    return json_report.dump(2) + "\n";
  }
  return text_report;
}

}  // namespace

LoadedScenario load_scenario(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& err) {
    throw ScenarioError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("periods")) {
    throw ScenarioError("scenario needs a 'periods' array");
  }
  const Json& periods = doc.at("periods");
  if (!periods.is_array() || periods.empty()) {
    throw ScenarioError("'periods' must be a nonempty array");
  }

  LoadedScenario out;
  out.utility = utility_from_json(doc);

  if (doc.contains("propositions")) {
    out.propositional = true;
    out.props = string_list(doc.at("propositions"), "propositions");
    SyntacticScenario syn;
    syn.props = out.props;
    for (std::size_t t = 0; t < periods.size(); ++t) {
      const std::string where = "period " + std::to_string(t);
      const Json& period = periods[t];
      if (!period.contains("aware")) {
        throw ScenarioError(where + ": propositional periods need 'aware'");
      }
      SyntacticPeriod sp;
      sp.aware = string_list(period.at("aware"), where);
      if (period.contains("measure")) {
        for (const auto& entry : period.at("measure")) {
          if (!entry.is_object() || !entry.contains("formula") ||
              !entry.contains("mass")) {
            throw ScenarioError(where +
                                ": propositional measure entries need "
                                "'formula' and 'mass'");
          }
          sp.masses.emplace_back(
              parse_formula(entry.at("formula").get<std::string>()),
              parse_rational(entry.at("mass").get<std::string>()));
        }
      }
      syn.periods.push_back(std::move(sp));
    }
    out.chain = compile_scenario(syn);
    return out;
  }

  if (!doc.contains("states")) {
    throw ScenarioError("scenario needs 'states' or 'propositions'");
  }
  const std::vector<std::string> base_states =
      string_list(doc.at("states"), "states");

  if (doc.contains("expansion_states")) {
    if (periods.size() != 2) {
      throw ScenarioError("expansion scenarios need exactly two periods");
    }
    std::vector<std::string> expanded = base_states;
    for (auto& s : string_list(doc.at("expansion_states"), "expansion_states")) {
      expanded.push_back(std::move(s));
    }
    const SpacePtr small = make_space(base_states);
    const SpacePtr big = make_space(std::move(expanded));
    const Json& p0 = periods[0];
    const Json& p1 = periods[1];
    if (!p0.contains("algebra") || !p1.contains("algebra")) {
      throw ScenarioError("expansion periods need explicit 'algebra' blocks");
    }
    const Algebra a0 = algebra_from_blocks(small, p0.at("algebra"), "period 0");
    const Algebra a1 = algebra_from_blocks(big, p1.at("algebra"), "period 1");
    Measure prior = measure_from_entries(a0, p0.value("measure", Json::array()),
                                         nullptr, "period 0");
    Measure posterior = measure_from_entries(
        a1, p1.value("measure", Json::array()), nullptr, "period 1");
    out.geb = std::make_pair(std::move(prior), std::move(posterior));
    return out;
  }

  const SpacePtr space = make_space(base_states);
  std::vector<Measure> stages;
  for (std::size_t t = 0; t < periods.size(); ++t) {
    const std::string where = "period " + std::to_string(t);
    const Json& period = periods[t];
    if (!period.contains("algebra")) {
      throw ScenarioError(where + ": state-based periods need 'algebra'");
    }
    const Algebra algebra =
        algebra_from_blocks(space, period.at("algebra"), where);
    stages.push_back(measure_from_entries(
        algebra, period.value("measure", Json::array()), nullptr, where));
  }
  out.chain = Chain(std::move(stages));
  return out;
}

Event parse_event_spec(const LoadedScenario& scenario, const std::string& text) {
  SpacePtr space;
  if (scenario.chain) {
    space = scenario.chain->stages().back().space();
  } else if (scenario.geb) {
    space = scenario.geb->second.space();
  } else {
    throw ScenarioError("scenario holds no measures");
  }
  if (scenario.propositional) {
    return truth_set(parse_formula(text), scenario.props, space);
  }
  std::vector<std::size_t> members;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    // Trim surrounding whitespace.
    const auto begin = token.find_first_not_of(" \t");
    const auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) continue;
    token = token.substr(begin, end - begin + 1);
    const auto idx = space->index_of(token);
    if (!idx) throw ScenarioError("unknown state '" + token + "'");
    members.push_back(*idx);
  }
  return Event(space, members);
}

CommandResult run_command(const std::string& command,
                          const std::string& scenario_text,
                          const CommandOptions& options) {
  try {
    const LoadedScenario scenario = load_scenario(scenario_text);
    std::ostringstream text;
    Json json;
    json["command"] = command;
    int exit_code = 0;

    if (command == "check") {
      UpdateReport report;
      if (scenario.geb) {
        report = check_geb(scenario.geb->first, scenario.geb->second);
      } else {
        report = classify_update(first_pair(scenario));
      }
      json.update(report_json(report));
      render_report_text(report, text);
      exit_code = report_ok(report) ? 0 : 1;
    } else if (command == "witness") {
      const UpdatePair pair = first_pair(scenario);
      const Witness witness = construct_witness(pair);
      const WitnessCheck verified = verify_witness(pair, witness.interim);
      json["beta"] = rational_to_string(witness.beta);
      json["interim"] = measure_json(witness.interim);
      json["verified"] = verified.ok;
      text << "beta: " << rational_to_string(witness.beta) << "\n";
      text << "interim:\n";
      render_measure_text(witness.interim, text, "  ");
      text << "verified: " << (verified.ok ? "true" : "false") << "\n";
      exit_code = verified.ok ? 0 : 1;
    } else if (command == "chain") {
      if (!scenario.chain) {
        throw ScenarioError("'chain' needs a chain scenario");
      }
      const std::vector<PairReport> reports = chain_reports(*scenario.chain);
      Json pairs = Json::array();
      bool all_ok = true;
      for (const auto& pr : reports) {
        Json entry;
        entry["from"] = pr.from;
        entry["to"] = pr.to;
        entry.update(report_json(pr.report));
        pairs.push_back(std::move(entry));
        if (pr.report.status != UpdateStatus::EbPositive &&
            pr.report.status != UpdateStatus::Bayesian) {
          all_ok = false;
        }
        text << "pair (" << pr.from << "," << pr.to
             << "): " << to_string(pr.report.status);
        if (pr.report.violation) {
          text << " [" << pr.report.violation->detail << "]";
        }
        text << "\n";
      }
      json["pairs"] = std::move(pairs);
      json["common_witness"] = Json();
      json["trivial_link"] = Json();
      if (all_ok) {
        try {
          const ChainWitness cw = chain_common_witness(*scenario.chain);
          json["common_witness"] = measure_json(cw.common);
          text << "common witness:\n";
          render_measure_text(cw.common, text, "  ");
        } catch (const TrivialLinkError& err) {
          json["trivial_link"] = std::string(err.what());
          text << "trivial link: " << err.what() << "\n";
          all_ok = false;
        }
      } else {
        text << "no common witness: some pair is not EB_POSITIVE/BAYESIAN\n";
      }
      exit_code = all_ok ? 0 : 1;
    } else if (command == "bounds") {
      if (!options.given || !options.target) {
        return CommandResult{2, "", "bounds needs --given and --target\n"};
      }
      if (!scenario.chain || scenario.chain->length() < 2) {
        throw ScenarioError("'bounds' needs a chain scenario with two periods");
      }
      const Measure& prior = scenario.chain->stages()[0];
      const Algebra& fine = scenario.chain->stages()[1].algebra();
      const Event given = parse_event_spec(scenario, *options.given);
      const Event target = parse_event_spec(scenario, *options.target);
      const auto [inner, outer] =
          conditional_bounds(prior, fine, given, target, options.vertex_cap);
      json["given"] = event_json(given);
      json["target"] = event_json(target);
      json["inner"] = rational_to_string(inner);
      json["outer"] = rational_to_string(outer);
      text << "given: " << label_set(given) << "\n";
      text << "target: " << label_set(target) << "\n";
      text << "inner: " << rational_to_string(inner) << "\n";
      text << "outer: " << rational_to_string(outer) << "\n";
    } else if (command == "prefs") {
      const UpdatePair pair = first_pair(scenario);
      const ConsistencyReport report = check_extension_consistency(pair);
      json["consistent"] = report.consistent;
      if (report.violation) {
        Json v;
        v["e"] = event_json(report.violation->first);
        v["f"] = event_json(report.violation->second);
        v["explanation"] = report.explanation;
        json["violation"] = std::move(v);
      } else {
        json["violation"] = Json();
      }
      text << "consistent: " << (report.consistent ? "true" : "false") << "\n";
      if (report.violation) {
        text << "violation: E=" << label_set(report.violation->first)
             << " F=" << label_set(report.violation->second) << " ("
             << report.explanation << ")\n";
      }
      exit_code = report.consistent ? 0 : 1;
    } else if (command == "compile") {
      if (!scenario.chain) {
        throw ScenarioError("'compile' needs a chain scenario");
      }
      const Json compiled = scenario_json_from_chain(*scenario.chain);
      return CommandResult{0, compiled.dump(2) + "\n", ""};
    } else {
      return CommandResult{2, "", "unknown command '" + command + "'\n"};
    }

    return CommandResult{exit_code, finish(json, text.str(), options), ""};
  } catch (const ExplosionError& err) {
    return CommandResult{3, "", std::string(err.what()) + "\n"};
  } catch (const TooManyAtomsError& err) {
    return CommandResult{3, "", std::string(err.what()) + "\n"};
  } catch (const NotCommensurateError& err) {
    return CommandResult{1, "", std::string(err.what()) + "\n"};
  } catch (const TriviallyConditionedError& err) {
    return CommandResult{1, "", std::string(err.what()) + "\n"};
  } catch (const TrivialLinkError& err) {
    return CommandResult{1, "", std::string(err.what()) + "\n"};
  } catch (const EngineError& err) {
    return CommandResult{2, "", std::string(err.what()) + "\n"};
  }
}

}  // namespace extbayes
