#pragma once

// JSON file formats, see docs/formats.md. Readers throw FormatError (or
// SyntaxError for a bad formula inside a well-formed file).

#include "jlog/countermodel.hpp"
#include "jlog/realization.hpp"

#include <optional>
#include <string>

namespace jlog {

std::string write_derivation(const Derivation &d);
Derivation read_derivation(const std::string &text);
/// One line per step: index, formula, justification.
std::string print_derivation(const Derivation &d);

struct ProofFile {
  SequentProof proof;
  Calculus calculus = Calculus::GE;
};

std::string write_sequent_proof(const SequentProof &p, Calculus calculus);
/// Nodes without "links" get the correspondence make_node computes.
ProofFile read_sequent_proof(const std::string &text);

std::string write_quasi_model(const QuasiModel &m, Dialect dialect);
QuasiModel read_quasi_model(const std::string &text, Dialect *dialect = nullptr);

std::string write_neighborhood_model(const NeighborhoodModel &m);
NeighborhoodModel read_neighborhood_model(const std::string &text);

std::string write_realization(const RealizationResult &r,
                              const Formula &source);

/// Reads a whole file. Throws FormatError when it cannot be opened.
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

} // namespace jlog
