#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance binary. Nothing here calls the library code it is used to
// check: evaluation, erasure and shape matching are reimplemented.

#include "jlog/countermodel.hpp"
#include "jlog/derivation.hpp"
#include "jlog/sequent_proof.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace support {

using namespace jlog;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin() { return pick(2) == 0; }
  std::mt19937_64 &rng() { return rng_; }

  /// Random formula of the dialect with at most `depth` nested
  /// connectives; terms have depth ≤ 3.
  Formula formula(Dialect d, unsigned depth);
  Formula modal(unsigned depth, const std::vector<std::string> &atoms);
  Formula prop(unsigned depth, const std::vector<std::string> &atoms);
  Term proof_term(Dialect d, unsigned depth);
  Term just_term(Dialect d, unsigned depth);

private:
  std::mt19937_64 rng_;
};

/// Classical truth-table check; boxes and justification formulas are
/// treated as opaque atoms.
bool tautology(const Formula &f);

/// ([t]F)° computed directly.
Formula erase(const Formula &f);

/// Plain-loop evaluation in a neighborhood model.
bool nbhd_truth(const NeighborhoodModel &m, std::size_t w, const Formula &f);

/// Every modal formula over the atoms with connectives → and □ of depth
/// at most `depth`.
std::vector<Formula> all_imp_box(unsigned depth,
                                 const std::vector<std::string> &atoms);

/// Pattern metavariables name holes. Names starting with a lowercase
/// letter or with X must bind to variables, pairwise distinct; all others
/// must bind to variable-free proof terms. Equal names bind equal terms.
struct ShapeMatch {
  bool ok = false;
  std::map<std::string, Term> holes;
  std::string why;
};
ShapeMatch match_shape(const Formula &pattern, const Formula &f);

/// Sequent proofs built bottom-up by random forward rule application.
class ForwardGen {
public:
  ForwardGen(Calculus c, std::uint64_t seed) : c_(c), gen_(seed) {}

  /// A proof with `depth` random rule applications along its spine.
  SequentProof proof(unsigned depth);
  /// A proof of `=> A` for some A.
  SequentProof theorem(unsigned depth);
  /// F => F built by decomposing F.
  SequentProof identity(const Formula &f);

private:
  SequentProof axiom();
  SequentProof pack(SequentProof p);
  SequentProof close(SequentProof p);
  Formula small();

  Calculus c_;
  Gen gen_;
};

/// Hilbert derivations of theorems (no hypotheses) over cs_total, built by
/// forward combination of axioms, AN and MP.
Derivation random_theorem(Dialect d, std::uint64_t seed, unsigned steps);

} // namespace support
