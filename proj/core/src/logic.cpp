#include "extbayes/logic.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <utility>

namespace extbayes {

Formula Formula::truth() {
  return Formula(std::make_shared<Node>(Node{Kind::True, "", nullptr, nullptr}));
}

Formula Formula::falsity() {
  return Formula(std::make_shared<Node>(Node{Kind::False, "", nullptr, nullptr}));
}

Formula Formula::prop(std::string name) {
  return Formula(
      std::make_shared<Node>(Node{Kind::Prop, std::move(name), nullptr, nullptr}));
}

Formula Formula::negate(Formula child) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Not, "", std::move(child.node_), nullptr}));
}

Formula Formula::conj(Formula left, Formula right) {
  return Formula(std::make_shared<Node>(
      Node{Kind::And, "", std::move(left.node_), std::move(right.node_)}));
}

const std::string& Formula::prop_name() const { return node_->name; }

Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }

bool Formula::operator==(const Formula& other) const {
  const auto eq = [](const auto& self, const Node& x, const Node& y) -> bool {
    if (x.kind != y.kind || x.name != y.name) return false;
    if (x.a && !self(self, *x.a, *y.a)) return false;
    if (x.b && !self(self, *x.b, *y.b)) return false;
    return true;
  };
  return eq(eq, *node_, *other.node_);
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  bool consume_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw SyntaxError(msg, pos);
  }

  // implies := or ('->' implies)?    right associative
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (consume_arrow()) {
      Formula rhs = parse_implies();
      // a -> b  desugars to  !(a & !b)
      return Formula::negate(
          Formula::conj(std::move(lhs), Formula::negate(std::move(rhs))));
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (true) {
      // '|' but not part of nothing else; guard against "->" handled above.
      skip_ws();
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        Formula rhs = parse_and();
        // a | b  desugars to  !(!a & !b)
        acc = Formula::negate(Formula::conj(Formula::negate(std::move(acc)),
                                            Formula::negate(std::move(rhs))));
        continue;
      }
      return acc;
    }
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (consume('&')) {
      acc = Formula::conj(std::move(acc), parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    if (consume('!')) return Formula::negate(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (consume('(')) {
      Formula inner = parse_implies();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (pos >= text.size()) fail("unexpected end of input");
    const char c = text[pos];
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      fail(std::string("unexpected character '") + c + "'");
    }
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    const std::string_view ident = text.substr(start, pos - start);
    if (ident == "T") return Formula::truth();
    if (ident == "F") return Formula::falsity();
    return Formula::prop(std::string(ident));
  }
};

void format_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "T";
      return;
    case Formula::Kind::False:
      out += "F";
      return;
    case Formula::Kind::Prop:
      out += f.prop_name();
      return;
    case Formula::Kind::Not: {
      out += "!";
      const Formula c = f.child();
      if (c.kind() == Formula::Kind::And) {
        out += "(";
        format_into(c, out);
        out += ")";
      } else {
        format_into(c, out);
      }
      return;
    }
    case Formula::Kind::And: {
      format_into(f.left(), out);
      out += " & ";
      const Formula r = f.right();
      // '&' parses left-associatively; an And right child needs parentheses.
      if (r.kind() == Formula::Kind::And) {
        out += "(";
        format_into(r, out);
        out += ")";
      } else {
        format_into(r, out);
      }
      return;
    }
  }
}

bool eval(const Formula& f, const std::vector<std::string>& props,
          std::size_t valuation) {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Prop: {
      const auto it = std::find(props.begin(), props.end(), f.prop_name());
      if (it == props.end()) {
        throw UnknownPropositionError("unknown proposition '" + f.prop_name() +
                                      "'");
      }
      const std::size_t bit = static_cast<std::size_t>(it - props.begin());
      return (valuation >> bit) & 1;
    }
    case Formula::Kind::Not:
      return !eval(f.child(), props, valuation);
    case Formula::Kind::And:
      return eval(f.left(), props, valuation) &&
             eval(f.right(), props, valuation);
  }
  return false;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser parser{text};
  Formula result = parser.parse_implies();
  parser.skip_ws();
  if (parser.pos != text.size()) {
    parser.fail("trailing input");
  }
  return result;
}

std::string format_formula(const Formula& formula) {
  std::string out;
  format_into(formula, out);
  return out;
}

SpacePtr valuation_space(const std::vector<std::string>& props) {
  std::unordered_set<std::string> seen;
  for (const auto& p : props) {
    if (p == "T" || p == "F") {
      throw ScenarioError("'" + p + "' is a reserved keyword, not a proposition");
    }
    if (!seen.insert(p).second) {
      throw ScenarioError("duplicate proposition '" + p + "'");
    }
  }
  if (props.size() >= 8 * sizeof(std::size_t) - 1) {
    throw ScenarioError("too many propositions for a valuation space");
  }
  std::vector<std::string> labels;
  const std::size_t n = std::size_t{1} << props.size();
  labels.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string label;
    for (std::size_t i = 0; i < props.size(); ++i) {
      if (i > 0) label += "&";
      if (!((s >> i) & 1)) label += "!";
      label += props[i];
    }
    if (props.empty()) label = "T";
    labels.push_back(std::move(label));
  }
  return make_space(std::move(labels));
}

Event truth_set(const Formula& formula, const std::vector<std::string>& props,
                const SpacePtr& space) {
  const std::size_t n = std::size_t{1} << props.size();
  if (space->size() != n) {
    throw SpaceMismatchError("space is not the valuation space of the "
                             "proposition list");
  }
  std::vector<std::size_t> members;
  for (std::size_t s = 0; s < n; ++s) {
    if (eval(formula, props, s)) members.push_back(s);
  }
  return Event(space, members);
}

bool entails(const Formula& phi, const Formula& psi,
             const std::vector<std::string>& props) {
  const SpacePtr space = valuation_space(props);
  return truth_set(phi, props, space).is_subset_of(truth_set(psi, props, space));
}

Chain compile_scenario(const SyntacticScenario& scenario) {
  const SpacePtr space = valuation_space(scenario.props);

  std::vector<Measure> stages;
  std::vector<std::string> previous;
  for (std::size_t t = 0; t < scenario.periods.size(); ++t) {
    const auto& period = scenario.periods[t];
    for (const auto& p : period.aware) {
      if (std::find(scenario.props.begin(), scenario.props.end(), p) ==
          scenario.props.end()) {
        throw UnknownPropositionError("aware of unknown proposition '" + p +
                                      "'");
      }
    }
    for (const auto& p : previous) {
      if (std::find(period.aware.begin(), period.aware.end(), p) ==
          period.aware.end()) {
        throw AwarenessShrinkError("period " + std::to_string(t) +
                                   " lost awareness of '" + p + "'");
      }
    }
    previous = period.aware;

    std::vector<Event> generators;
    for (const auto& p : period.aware) {
      generators.push_back(truth_set(Formula::prop(p), scenario.props, space));
    }
    const Algebra algebra = Algebra::generated_by(space, generators);

    std::vector<Rational> masses(algebra.atom_count(), Rational(0));
    std::vector<bool> covered(algebra.atom_count(), false);
    for (const auto& [formula, mass] : period.masses) {
      const Event set = truth_set(formula, scenario.props, space);
      bool matched = false;
      for (std::size_t i = 0; i < algebra.atom_count(); ++i) {
        if (algebra.atoms()[i] == set) {
          if (covered[i]) {
            throw MassAlgebraMismatchError(
                "atom assigned mass twice in period " + std::to_string(t));
          }
          covered[i] = true;
          masses[i] = mass;
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw MassAlgebraMismatchError(
            "formula '" + format_formula(formula) +
            "' does not denote an atom of period " + std::to_string(t) +
            "'s awareness algebra");
      }
    }
    try {
      stages.emplace_back(algebra, std::move(masses));
    } catch (const InvalidMeasureError& err) {
      throw MassAlgebraMismatchError("period " + std::to_string(t) + ": " +
                                     err.what());
    }
  }
  return Chain(std::move(stages));
}

}  // namespace extbayes
