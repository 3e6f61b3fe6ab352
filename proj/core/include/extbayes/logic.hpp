#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extbayes/engine.hpp"

namespace extbayes {

// Propositional formula over named propositions. Core connectives are
// negation and conjunction; `|` and `->` are parse-time sugar and never
// appear in the tree.
class Formula {
public:
  enum class Kind { True, False, Prop, Not, And };

  static Formula truth();
  static Formula falsity();
  static Formula prop(std::string name);
  static Formula negate(Formula child);
  static Formula conj(Formula left, Formula right);

  Kind kind() const { return node_->kind; }
  const std::string& prop_name() const;  // Kind::Prop only
  Formula child() const;                 // Kind::Not only
  Formula left() const;                  // Kind::And only
  Formula right() const;                 // Kind::And only

  bool operator==(const Formula& other) const;  // structural

private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar: identifiers [A-Za-z_][A-Za-z0-9_]* excluding the keywords T and F;
// `!` > `&` > `|` > `->`; `->` right-associative, `&` and `|`
// left-associative; whitespace insignificant.
// Sugar: a|b parses as !(!a & !b), a->b as !(a & !b).
// Throws SyntaxError with the offending position.
Formula parse_formula(std::string_view text);

// Emits core-connective syntax that parses back to a structurally equal tree.
std::string format_formula(const Formula& formula);

// The canonical valuation space over an ordered proposition list: one state
// per bit pattern, proposition i true in state s iff bit i of s is set.
SpacePtr valuation_space(const std::vector<std::string>& props);

// Event of valuations satisfying the formula, over valuation_space(props)
// (or an identically labelled space). Throws UnknownPropositionError.
Event truth_set(const Formula& formula, const std::vector<std::string>& props,
                const SpacePtr& space);

// Semantic entailment: truth-set inclusion.
bool entails(const Formula& phi, const Formula& psi,
             const std::vector<std::string>& props);

struct SyntacticPeriod {
  // Propositions the agent is aware of in this period.
  std::vector<std::string> aware;
  // Masses over formula-described events; each formula must denote an atom
  // of the awareness-generated algebra. Uncovered atoms default to mass 0.
  std::vector<std::pair<Formula, Rational>> masses;
};

struct SyntacticScenario {
  std::vector<std::string> props;
  std::vector<SyntacticPeriod> periods;
};

// Builds the measure-theoretic chain on the common valuation space: period t
// carries the algebra generated by the truth sets of its aware propositions.
// Throws AwarenessShrinkError, MassAlgebraMismatchError,
// UnknownPropositionError.
Chain compile_scenario(const SyntacticScenario& scenario);

}  // namespace extbayes
