#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/complex_matrix.h"
#include "qcorr/sdp.h"
#include "qcorr/states.h"

namespace qcorr {

// A product of dichotomic generators (two per party), canonical under
// within-party commutation and X^2 = I: each party keeps a 2-bit mask, bit g
// set iff generator g survives. The packed key is sum_p mask_p << 2p.
struct Word {
  std::vector<unsigned> masks;  // one mask per party, values 0..3
};

unsigned word_key(const Word& w);
Word word_from_key(unsigned key, std::size_t n_parties);
// Product under the commutation relaxation: per-party XOR of masks.
Word word_product(const Word& a, const Word& b);
// A word is an observable moment iff at most one generator survives per party.
bool word_observable(const Word& w);
// "A0A1B0" style label; "I" for the identity.
std::string word_label(const Word& w);

// Canonical form of an explicit generator sequence [(party, generator), ...].
struct CanonicalWord {
  unsigned key = 0;
  bool observable = false;
};
CanonicalWord canonicalize(const std::vector<std::pair<std::size_t, unsigned>>& factors,
                           std::size_t n_parties);

// Second-level word list: identity, the 2N single generators, then all
// two-generator products in lexicographic generator order.
std::vector<Word> level2_words(std::size_t n_parties);

// Structure of the level-2 moment matrix: entry (i, j) carries the key of
// word_i^dag word_j. Observable keys are fixed by measurement; the
// non-observable keys that appear get one shared real variable each.
struct MomentMatrix {
  std::vector<Word> words;
  std::vector<std::vector<unsigned>> entry_key;
  std::map<unsigned, std::size_t> free_index;  // appearing non-observable keys
};
MomentMatrix moment_matrix(std::size_t n_parties);

// Size audit of the level-2 construction.
struct NpaAudit {
  std::size_t n_words = 0;
  std::size_t n_observable_moments = 0;  // distinct observable keys in the matrix, identity excluded
  std::size_t n_free_total = 0;          // all non-observable canonical keys: 4^N - 3^N
  std::size_t n_free_in_matrix = 0;      // those that actually appear as entries
};
NpaAudit npa_audit(std::size_t n_parties);

// Per-party pair of dichotomic (Hermitian, square = identity) observables.
struct PartySettings {
  CMatrix m0, m1;
};

// All observable level-2 moments of rho under the given settings, keyed by
// canonical word key; includes the identity key 0 -> 1.
std::map<unsigned, double> measured_moments(const DensityMatrix& rho,
                                            const std::vector<PartySettings>& settings);

// Feasibility of a positive-semidefinite completion of the level-2 moment
// matrix with the observable entries pinned to `moments`.
struct LocalityVerdict {
  bool local_feasible = false;
  double t_star = 0.0;
  FeasVerdict verdict = FeasVerdict::inconclusive;
};
LocalityVerdict test_locality(const std::map<unsigned, double>& moments, std::size_t n_parties);

}  // namespace qcorr
