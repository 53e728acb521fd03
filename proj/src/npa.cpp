#include "qcorr/npa.h"

#include <set>
#include <stdexcept>

#include "qcorr/tensor.h"

namespace qcorr {

namespace {

void require_party_count(std::size_t n) {
  if (n != 2 && n != 3) throw std::invalid_argument("npa: 2 or 3 parties supported");
}

}  // namespace

unsigned word_key(const Word& w) {
  unsigned key = 0;
  for (std::size_t p = 0; p < w.masks.size(); ++p) key |= (w.masks[p] & 3u) << (2 * p);
  return key;
}

Word word_from_key(unsigned key, std::size_t n_parties) {
  Word w;
  w.masks.resize(n_parties);
  for (std::size_t p = 0; p < n_parties; ++p) w.masks[p] = (key >> (2 * p)) & 3u;
  return w;
}

Word word_product(const Word& a, const Word& b) {
  if (a.masks.size() != b.masks.size()) throw std::invalid_argument("word_product: party count");
  Word w;
  w.masks.resize(a.masks.size());
  for (std::size_t p = 0; p < a.masks.size(); ++p) w.masks[p] = a.masks[p] ^ b.masks[p];
  return w;
}

bool word_observable(const Word& w) {
  for (unsigned m : w.masks)
    if (m == 3u) return false;
  return true;
}

std::string word_label(const Word& w) {
  std::string label;
  for (std::size_t p = 0; p < w.masks.size(); ++p) {
    const char party = static_cast<char>('A' + p);
    for (unsigned g = 0; g < 2; ++g)
      if (w.masks[p] >> g & 1u) {
        label += party;
        label += static_cast<char>('0' + g);
      }
  }
  return label.empty() ? "I" : label;
}

CanonicalWord canonicalize(const std::vector<std::pair<std::size_t, unsigned>>& factors,
                           std::size_t n_parties) {
  Word w;
  w.masks.assign(n_parties, 0u);
  for (const auto& [party, gen] : factors) {
    if (party >= n_parties) throw std::invalid_argument("canonicalize: party out of range");
    if (gen > 1) throw std::invalid_argument("canonicalize: generator must be 0 or 1");
    w.masks[party] ^= 1u << gen;
  }
  return {word_key(w), word_observable(w)};
}

std::vector<Word> level2_words(std::size_t n_parties) {
  require_party_count(n_parties);
  const std::size_t n_gen = 2 * n_parties;
  auto gen_word = [n_parties](std::size_t g) {
    Word w;
    w.masks.assign(n_parties, 0u);
    w.masks[g / 2] = 1u << (g % 2);
    return w;
  };
  std::vector<Word> words;
  Word id;
  id.masks.assign(n_parties, 0u);
  words.push_back(id);
  for (std::size_t g = 0; g < n_gen; ++g) words.push_back(gen_word(g));
  for (std::size_t g = 0; g < n_gen; ++g)
    for (std::size_t h = g + 1; h < n_gen; ++h)
      words.push_back(word_product(gen_word(g), gen_word(h)));
  return words;
}

MomentMatrix moment_matrix(std::size_t n_parties) {
  require_party_count(n_parties);
  MomentMatrix mm;
  mm.words = level2_words(n_parties);
  const std::size_t n = mm.words.size();
  mm.entry_key.assign(n, std::vector<unsigned>(n, 0u));
  std::set<unsigned> free_keys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Word prod = word_product(mm.words[i], mm.words[j]);
      mm.entry_key[i][j] = word_key(prod);
      if (!word_observable(prod)) free_keys.insert(mm.entry_key[i][j]);
    }
  std::size_t idx = 0;
  for (unsigned key : free_keys) mm.free_index[key] = idx++;
  return mm;
}

NpaAudit npa_audit(std::size_t n_parties) {
  require_party_count(n_parties);
  const MomentMatrix mm = moment_matrix(n_parties);
  NpaAudit audit;
  audit.n_words = mm.words.size();
  std::set<unsigned> observable;
  for (const auto& row : mm.entry_key)
    for (unsigned key : row)
      if (key != 0 && word_observable(word_from_key(key, n_parties))) observable.insert(key);
  audit.n_observable_moments = observable.size();
  std::size_t total = 1, obs = 1;
  for (std::size_t p = 0; p < n_parties; ++p) {
    total *= 4;
    obs *= 3;
  }
  audit.n_free_total = total - obs;
  audit.n_free_in_matrix = mm.free_index.size();
  return audit;
}

std::map<unsigned, double> measured_moments(const DensityMatrix& rho,
                                            const std::vector<PartySettings>& settings) {
  validate(rho);
  const std::size_t n = settings.size();
  require_party_count(n);
  if (rho.dims.size() != n)
    throw std::invalid_argument("measured_moments: one setting pair per subsystem");
  for (std::size_t p = 0; p < n; ++p) {
    for (const CMatrix* m : {&settings[p].m0, &settings[p].m1}) {
      if (m->rows() != rho.dims[p] || m->cols() != rho.dims[p])
        throw std::invalid_argument("measured_moments: setting dimension mismatch");
      if (!m->is_hermitian(1e-10))
        throw std::invalid_argument("measured_moments: setting not Hermitian");
      if (max_abs_diff(*m * *m, CMatrix::identity(m->rows())) > 1e-10)
        throw std::invalid_argument("measured_moments: setting not dichotomic");
    }
  }

  std::map<unsigned, double> out;
  const unsigned total_keys = 1u << (2 * n);
  for (unsigned key = 0; key < total_keys; ++key) {
    const Word w = word_from_key(key, n);
    if (!word_observable(w)) continue;
    CMatrix op = CMatrix::identity(1);
    for (std::size_t p = 0; p < n; ++p) {
      const CMatrix& factor = (w.masks[p] == 0) ? CMatrix::identity(rho.dims[p])
                              : (w.masks[p] == 1) ? settings[p].m0
                                                  : settings[p].m1;
      op = kron(op, factor);
    }
    out[key] = expectation(rho.mat, op);
  }
  return out;
}

LocalityVerdict test_locality(const std::map<unsigned, double>& moments, std::size_t n_parties) {
  require_party_count(n_parties);
  const MomentMatrix mm = moment_matrix(n_parties);
  const std::size_t n = mm.words.size();

  LMIProblem prob(mm.free_index.size());
  CMatrix f0(n, n);
  std::vector<CMatrix> indicators(mm.free_index.size(), CMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned key = mm.entry_key[i][j];
      if (key == 0) {
        f0(i, j) = 1.0;
      } else if (word_observable(word_from_key(key, n_parties))) {
        const auto it = moments.find(key);
        if (it == moments.end())
          throw std::invalid_argument("test_locality: missing observable moment " +
                                      word_label(word_from_key(key, n_parties)));
        f0(i, j) = it->second;
      } else {
        indicators[mm.free_index.at(key)](i, j) = 1.0;
      }
    }
  std::vector<CMatrix> block;
  block.reserve(1 + indicators.size());
  block.push_back(std::move(f0));
  for (CMatrix& ind : indicators) block.push_back(std::move(ind));
  prob.add_block(block);

  const FeasibilityResult feas = sdp_feasibility(prob);
  LocalityVerdict verdict;
  verdict.local_feasible = feas.verdict == FeasVerdict::feasible;
  verdict.t_star = feas.t_star;
  verdict.verdict = feas.verdict;
  return verdict;
}

}  // namespace qcorr
