#pragma once
// Small dense semidefinite programming: log-det barrier path following with
// damped Newton steps. Problems are stated as linear matrix inequalities
// min c.x  s.t.  F0_b + sum_k x_k Fk_b >= 0  over one or more Hermitian
// blocks. Equality constraints are eliminated by the callers at construction
// time; the constant part of an eliminated objective lives in the offset.

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.h"

namespace qcorr {

class LMIProblem {
public:
  explicit LMIProblem(std::size_t n_vars) : n_(n_vars), c_(n_vars, 0.0) {}

  std::size_t n_vars() const { return n_; }

  void set_objective(std::vector<double> c, double offset = 0.0);

  // mats = {F0, F1, ..., Fn}; every matrix Hermitian and of equal size.
  void add_block(std::vector<CMatrix> mats);

  const std::vector<double>& objective() const { return c_; }
  double objective_offset() const { return offset_; }
  const std::vector<std::vector<CMatrix>>& blocks() const { return blocks_; }

private:
  std::size_t n_;
  std::vector<double> c_;
  double offset_ = 0.0;
  std::vector<std::vector<CMatrix>> blocks_;
};

enum class SDPStatus { optimal, infeasible_certified, iteration_limit };

struct SDPSolution {
  SDPStatus status = SDPStatus::iteration_limit;
  std::vector<double> x;
  double objective = 0.0;      // c.x + offset
  double min_block_eig = 0.0;  // smallest eigenvalue across all blocks at x
  double gap = 0.0;            // final barrier duality gap sum(dim_b)/tau
  double kkt_residual = 0.0;   // max_k |c_k - sum_b Tr(Z_b Fk_b)| at the center
  std::size_t iterations = 0;  // accepted Newton steps across both phases
};

// Set QCORR_SDP_TRACE=1 to stream one JSON line per outer iteration
// ({"iteration","mu","objective","min_eig"}) to stderr.
SDPSolution sdp_solve(const LMIProblem& prob);

enum class FeasVerdict { feasible, infeasible, inconclusive };

struct FeasibilityResult {
  bool feasible = false;
  double t_star = 0.0;
  FeasVerdict verdict = FeasVerdict::inconclusive;
};

// Strict-feasibility probe for the constraint system of `prob` (its objective
// is ignored): minimize the uniform slack t in F_b(x) + t I >= 0 with the
// always-present bound block [1 + t] >= 0. Verdict thresholds: feasible iff
// t* <= 1e-6, infeasible iff t* > 1e-4, inconclusive in between.
FeasibilityResult sdp_feasibility(const LMIProblem& prob);

}  // namespace qcorr
