#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace jlog {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string &what)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class DialectError : public Error {
public:
  using Error::Error;
};

/// forgetful() was handed a formula with a `λ:F` subformula.
class ProofOfPresent : public Error {
public:
  using Error::Error;
};

class BadPath : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  using Error::Error;
};

/// A derivation step failed to validate.
class DerivationError : public Error {
public:
  enum class Kind { BadAxiom, BadAN, BadMP, IndexOrder, BadHypothesis };

  DerivationError(Kind kind, std::size_t step, const std::string &what)
      : Error("step " + std::to_string(step) + ": " + what), kind_(kind),
        step_(step) {}
  Kind kind() const { return kind_; }
  std::size_t step() const { return step_; }

private:
  Kind kind_;
  std::size_t step_;
};

class NotDerivable : public Error {
public:
  using Error::Error;
};

class HasHypotheses : public Error {
public:
  using Error::Error;
};

class NotAppropriate : public Error {
public:
  NotAppropriate(std::set<std::string> missing, const std::string &what)
      : Error(what), missing_(std::move(missing)) {}
  const std::set<std::string> &missing() const { return missing_; }

private:
  std::set<std::string> missing_;
};

class SequentProofError : public Error {
public:
  enum class Kind { BadRule, BadCorrespondence, WrongCalculus, UncheckedProof };

  SequentProofError(Kind kind, std::size_t node, const std::string &what)
      : Error("node " + std::to_string(node) + ": " + what), kind_(kind),
        node_(node) {}
  Kind kind() const { return kind_; }
  std::size_t node() const { return node_; }

private:
  Kind kind_;
  std::size_t node_;
};

class RealizationError : public Error {
public:
  enum class Kind {
    RoundtripMismatch,
    DerivationFails,
    ProvisionalLeak,
    NotNormal,
    Unsupported,
  };

  RealizationError(Kind kind, const std::string &what)
      : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class UnknownWorld : public Error {
public:
  using Error::Error;
};

class NotBasicModel : public Error {
public:
  using Error::Error;
};

} // namespace jlog
