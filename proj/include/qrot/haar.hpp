#pragma once

#include <string>
#include <vector>

#include "qrot/weingarten.hpp"

namespace qrot {

// Word of generator entries u_{i,j} (orthogonal) or v_{i,j}^{d} (unitary).
struct Monomial {
  Flavor flavor = Flavor::Orthogonal;
  long n = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  Decoration d;  // all-plain for orthogonal

  std::size_t length() const { return rows.size(); }
  void validate() const;
};

// CLI text encoding: whitespace-separated "i,j" factors, "i,j*" for starred
// unitary generators, e.g. "1,1 1,2* 2,1".
std::string to_string(const Monomial& m);
Monomial parse_monomial(Flavor flavor, long n, const std::string& word);

// Haar state via the Weingarten sum: 0 for odd length, otherwise
// sum over admissible pairings pi <= ker(rows), sigma <= ker(cols)
// of wg(pi, sigma).
Rational haar_moment(const Monomial& m, int cap = caps::weingarten_k);

// Verifies sum_{i=1..n} psi(u_{ij} u_{ij'} M) = delta_{jj'} psi(M) for every
// orthogonal monomial M of degree <= degree_budget.
bool orthogonality_check(long n, int j, int jp, int degree_budget);

}  // namespace qrot
