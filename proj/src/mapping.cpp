#include "qcorr/mapping.h"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "qcorr/gates.h"
#include "qcorr/tensor.h"

namespace qcorr {

namespace {

const char kAxisChar[4] = {'I', 'x', 'y', 'z'};

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (const int a : word) s.push_back(kAxisChar[a]);
  return s;
}

CMatrix compose(const std::vector<std::string>& seq, std::size_t n) {
  CMatrix u = CMatrix::identity(std::size_t{1} << n);
  for (const auto& tok : seq) u = u * mapping_gate(tok, n);
  return u;
}

// validated sign s with U^dag Z_readout U = s * P, or throw
int validated_sign(const MappingEntry& e, std::size_t n) {
  const CMatrix z = embed_qubit_op(pauli(3), e.readout, n);
  const CMatrix pulled = e.unitary.dagger() * z * e.unitary;
  const CMatrix p = pauli_word(e.word);
  if (max_abs_diff(pulled, p) < 1e-12) return 1;
  CMatrix neg = p;
  neg *= cplx(-1.0);
  if (max_abs_diff(pulled, neg) < 1e-12) return -1;
  throw std::logic_error("mapping row does not reduce to its Pauli word: " + e.label);
}

MappingEntry make_entry(std::string label, std::vector<int> word, std::size_t readout,
                        std::vector<std::string> seq, bool corrected, std::size_t n) {
  MappingEntry e{std::move(label), std::move(word), readout, std::move(seq),
                 0,               corrected,        compose({}, n)};
  e.unitary = compose(e.sequence, n);
  e.sign = validated_sign(e, n);
  return e;
}

std::vector<MappingEntry> build_two_qubit() {
  struct Row {
    std::vector<int> word;
    std::size_t readout;
    std::vector<std::string> seq;
  };
  const Row rows[15] = {
      {{1, 1}, 1, {"CNOT12", "Y2", "Y1"}},
      {{2, 2}, 1, {"CNOT12", "Xbar2", "Xbar1"}},
      {{3, 3}, 1, {"CNOT12"}},
      {{1, 2}, 1, {"CNOT12", "Xbar2", "Y1"}},
      {{1, 3}, 1, {"CNOT12", "Y1"}},  // measures the negative of its word
      {{2, 1}, 1, {"CNOT12", "Ybar2", "X1"}},
      {{2, 3}, 1, {"CNOT12", "X1"}},
      {{3, 1}, 1, {"CNOT12", "Ybar2"}},
      {{3, 2}, 1, {"CNOT12", "X2"}},
      {{1, 0}, 0, {"Ybar1"}},
      {{2, 0}, 0, {"X1"}},
      {{3, 0}, 0, {}},
      {{0, 1}, 1, {"Ybar2"}},
      {{0, 2}, 1, {"X2"}},
      {{0, 3}, 1, {}},
  };
  std::vector<MappingEntry> out;
  for (int i = 0; i < 15; ++i)
    out.push_back(make_entry("O" + std::to_string(i + 1), rows[i].word,
                             rows[i].readout, rows[i].seq, false, 2));
  return out;
}

// canonical sequence for a word: per active qubit a z-to-axis local rotation
// (x -> Ybar, y -> X), then a CNOT chain linking consecutive active qubits;
// readout on the last active qubit. Tokens are listed leftmost-applied-last.
std::vector<std::string> chain_sequence(const std::vector<int>& word,
                                        std::size_t* readout) {
  std::vector<std::size_t> active;
  for (std::size_t q = 0; q < word.size(); ++q)
    if (word[q] != 0) active.push_back(q);
  std::vector<std::string> applied;
  for (std::size_t i = 0; i < active.size(); ++i) {
    const std::size_t q = active[i];
    if (word[q] == 1) applied.push_back("Ybar" + std::to_string(q + 1));
    if (word[q] == 2) applied.push_back("X" + std::to_string(q + 1));
    if (i > 0)
      applied.push_back("CNOT" + std::to_string(active[i - 1] + 1) +
                        std::to_string(q + 1));
  }
  *readout = active.back();
  return {applied.rbegin(), applied.rend()};
}

std::vector<MappingEntry> build_three_qubit() {
  std::vector<MappingEntry> out;
  for (int k = 1; k < 64; ++k) {
    const std::vector<int> word{k / 16, (k / 4) % 4, k % 4};
    std::size_t readout = 0;
    auto seq = chain_sequence(word, &readout);
    // three source rows are misprints whose sequences measure a different
    // word; they are replaced by the canonical chain and flagged
    const std::string w = word_string(word);
    const bool corrected = (w == "IzI" || w == "xII" || w == "xzz");
    out.push_back(make_entry("B" + std::to_string(k), word, readout,
                             std::move(seq), corrected, 3));
  }
  return out;
}

const MappingRegistry& registry_for(std::size_t n) {
  return n == 2 ? MappingRegistry::two_qubit() : MappingRegistry::three_qubit();
}

}  // namespace

CMatrix mapping_gate(const std::string& token, std::size_t n) {
  const double half = M_PI / 2.0;
  if (token.rfind("CNOT", 0) == 0 && token.size() == 6) {
    const std::size_t c = token[4] - '1';
    const std::size_t t = token[5] - '1';
    return cnot(c, t, n).unitary;
  }
  const bool bar = token.find("bar") != std::string::npos;
  const char axis = token[0];
  const std::size_t q = token.back() - '1';
  const double angle = bar ? -half : half;
  if (axis == 'X') return rx(angle, q, n).unitary;
  if (axis == 'Y') return ry(angle, q, n).unitary;
  throw std::invalid_argument("unknown gate token: " + token);
}

MappingRegistry::MappingRegistry(std::size_t n, std::vector<MappingEntry> entries)
    : n_(n), entries_(std::move(entries)) {}

const MappingRegistry& MappingRegistry::two_qubit() {
  static const MappingRegistry reg(2, build_two_qubit());
  return reg;
}

const MappingRegistry& MappingRegistry::three_qubit() {
  static const MappingRegistry reg(3, build_three_qubit());
  return reg;
}

const MappingEntry& MappingRegistry::entry(const std::vector<int>& word) const {
  for (const auto& e : entries_)
    if (e.word == word) return e;
  throw std::out_of_range("no mapping row for word " + word_string(word));
}

double expectation_via_mapping(const CMatrix& rho, const std::vector<int>& word) {
  const auto& reg = registry_for(word.size());
  const auto& e = reg.entry(word);
  const CMatrix after = conjugate_by(e.unitary, rho);
  const CMatrix z = embed_qubit_op(pauli(3), e.readout, word.size());
  return e.sign * expectation(after, z);
}

std::string registry_json(const MappingRegistry& reg) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : reg.entries()) {
    rows.push_back({{"label", e.label},
                    {"word", word_string(e.word)},
                    {"sequence", e.sequence},
                    {"readout", e.readout},
                    {"sign", e.sign},
                    {"corrected", e.corrected}});
  }
  return nlohmann::json{{"qubits", reg.n_qubits()}, {"rows", rows}}.dump(2);
}

}  // namespace qcorr
