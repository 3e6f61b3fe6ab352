#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extbayes {

// Base class for every error raised by the engine. Input validation,
// precondition failures and resource caps all derive from this so callers
// can catch one type at the boundary.
class EngineError : public std::runtime_error {
public:
  explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

// -- algebra ----------------------------------------------------------------

class OverlapError : public EngineError {
public:
  using EngineError::EngineError;
};

class CoverageError : public EngineError {
public:
  using EngineError::EngineError;
};

class EmptyBlockError : public EngineError {
public:
  using EngineError::EngineError;
};

class SpaceMismatchError : public EngineError {
public:
  using EngineError::EngineError;
};

class EmptyEventError : public EngineError {
public:
  using EngineError::EngineError;
};

// -- measures ---------------------------------------------------------------

class NotMeasurableError : public EngineError {
public:
  using EngineError::EngineError;
};

class ZeroMassConditioningError : public EngineError {
public:
  using EngineError::EngineError;
};

class NotARefinementError : public EngineError {
public:
  using EngineError::EngineError;
};

class ExplosionError : public EngineError {
public:
  using EngineError::EngineError;
};

class InvalidMeasureError : public EngineError {
public:
  using EngineError::EngineError;
};

// -- update engine ----------------------------------------------------------

class NotCommensurateError : public EngineError {
public:
  using EngineError::EngineError;
};

class TriviallyConditionedError : public EngineError {
public:
  using EngineError::EngineError;
};

class TrivialLinkError : public EngineError {
public:
  using EngineError::EngineError;
};

class EmbeddingError : public EngineError {
public:
  using EngineError::EngineError;
};

// -- decision ---------------------------------------------------------------

class UnknownPrizeError : public EngineError {
public:
  using EngineError::EngineError;
};

class TooManyAtomsError : public EngineError {
public:
  using EngineError::EngineError;
};

// -- logic frontend ---------------------------------------------------------

class SyntaxError : public EngineError {
public:
  SyntaxError(const std::string& msg, std::size_t position)
      : EngineError(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class UnknownPropositionError : public EngineError {
public:
  using EngineError::EngineError;
};

class AwarenessShrinkError : public EngineError {
public:
  using EngineError::EngineError;
};

class MassAlgebraMismatchError : public EngineError {
public:
  using EngineError::EngineError;
};

// -- scenario files ----------------------------------------------------------

class ScenarioError : public EngineError {
public:
  using EngineError::EngineError;
};

}  // namespace extbayes
