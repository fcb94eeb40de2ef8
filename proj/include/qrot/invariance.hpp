#pragma once

#include <string>
#include <vector>

#include "qrot/cumulants.hpp"
#include "qrot/haar.hpp"
#include "qrot/models.hpp"

namespace qrot {

struct InvarianceFailure {
  std::vector<int> cols;
  Decoration decoration;
  Rational lhs;
  Rational rhs;
};

struct InvarianceReport {
  std::string model;
  Flavor flavor = Flavor::Orthogonal;
  long n = 0;
  int max_degree = 0;
  long checked = 0;
  std::vector<InvarianceFailure> failures;

  bool pass() const { return failures.empty(); }
};

// Checks, for every column word j of length <= max_degree (deduplicated by
// ker(j)), that sum_i oracle(i) psi_n(u_{i_1 j_1} ... u_{i_m j_m}) equals
// oracle(j) exactly. For the unitary flavor every decoration pattern is
// checked as well.
InvarianceReport averaged_invariance_check(const MomentOracle& oracle,
                                           Flavor flavor, long n,
                                           int max_degree);

// Symbolic evaluation of sum_{rows: pi <= ker(rows)} u_{i_1 j_1}...u_{i_2k j_2k}
// by repeated contraction of interval pair blocks with the orthogonality
// relation. Returns true iff the reduction terminates at 1, which happens
// exactly when pi <= ker(cols).
bool interval_reduction_check(const Partition& pi, const std::vector<int>& cols,
                              long n);

// The Haar-state sum the reduction certifies; used to cross-check the two
// routes against each other.
Rational haar_row_sum(const Partition& pi, const std::vector<int>& cols, long n,
                      Flavor flavor = Flavor::Orthogonal,
                      const Decoration& d = {});

struct BoundSample {
  long n = 0;
  Rational delta;
  Rational n_times_delta;
};

struct BoundScan {
  Flavor flavor = Flavor::Orthogonal;
  WeingartenKey key;
  std::vector<BoundSample> samples;
  Rational d_estimate;  // max of n*delta over samples; a lower bound for sup_n
  long argmax_n = 0;
};

BoundScan bound_scan(const WeingartenKey& key, long n_min, long n_max);

struct CounterexampleReport {
  long n = 0;
  Rational psi_x1_sq;          // psi_n(x_1^2), must equal 1/n
  Rational sum_psi_sq_sq;      // sum_{i,j} psi_n(x_i^2 x_j^2), must equal 1
  Rational psi_x1_4;           // psi_n(x_1^4) = 2/(n(n+1))
  Rational free_prediction;    // 1/n^2, forced by freeness
  bool not_free = false;       // psi_x1_4 != free_prediction
  InvarianceReport rotatable;  // averaged check on the row oracle
};

CounterexampleReport counterexample_report(long n, int max_degree = 4);

}  // namespace qrot
