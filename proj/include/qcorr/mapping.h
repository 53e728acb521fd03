#pragma once
// Observable-to-readout mapping registries: each Pauli product observable is
// assigned a short gate sequence after which a single-qubit sigma_z readout
// reproduces the observable's expectation value, up to a per-row sign fixed
// when the registry is built.

#include <cstddef>
#include <string>
#include <vector>

#include "qcorr/complex_matrix.h"

namespace qcorr {

struct MappingEntry {
  std::string label;                  // O1..O15 / B1..B63
  std::vector<int> word;              // Pauli axis per qubit: 0=I,1=x,2=y,3=z
  std::size_t readout;                // 0-based qubit carrying the z readout
  std::vector<std::string> sequence;  // gate tokens, leftmost applied last
  int sign;                           // U^dag Z_readout U = sign * PauliWord
  bool corrected;                     // source row was amended to match its word
  CMatrix unitary;                    // composed sequence
};

class MappingRegistry {
public:
  static const MappingRegistry& two_qubit();
  static const MappingRegistry& three_qubit();

  std::size_t n_qubits() const { return n_; }
  const std::vector<MappingEntry>& entries() const { return entries_; }
  // throws std::out_of_range for unregistered words (identity included)
  const MappingEntry& entry(const std::vector<int>& word) const;

private:
  MappingRegistry(std::size_t n, std::vector<MappingEntry> entries);
  std::size_t n_;
  std::vector<MappingEntry> entries_;
};

// token like "X2", "Ybar1", "CNOT23" -> full-register unitary
CMatrix mapping_gate(const std::string& token, std::size_t n);

// sign * <sigma_z(readout)> after the entry's sequence; equals Tr(rho P)
double expectation_via_mapping(const CMatrix& rho, const std::vector<int>& word);

// one JSON object per row: label, word, sequence, readout, sign, corrected
std::string registry_json(const MappingRegistry& reg);

}  // namespace qcorr
