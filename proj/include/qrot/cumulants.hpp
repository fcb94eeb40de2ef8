#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrot/partition.hpp"
#include "qrot/rational.hpp"

namespace qrot {

struct Letter {
  int label = 0;
  bool star = false;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word plain_word(const std::vector<int>& labels);
std::vector<int> labels_of(const Word& w);
Decoration decoration_of(const Word& w);

// Abstract joint distribution: a unital state evaluated on decorated index
// words. eval must be deterministic and eval({}) = 1.
class MomentOracle {
 public:
  virtual ~MomentOracle() = default;
  virtual int degree_cap() const { return caps::cumulant_degree; }
  virtual Rational eval(const Word& word) const = 0;
  virtual std::string descriptor() const = 0;
};

// E^{(pi)} by interval extraction: pick an interval block, replace its
// subword by the oracle moment, recurse on the rest.
Rational nested_moment(const MomentOracle& oracle, const Word& word,
                       const Partition& pi);

// kappa^{(pi)} = sum_{sigma <= pi} mu(sigma, pi) E^{(sigma)}.
Rational free_cumulant(const MomentOracle& oracle, const Word& word,
                       const Partition& pi);

// kappa^{(pi)} by recursively solving the moment-cumulant formula; an
// independent route kept for cross-checking against the Mobius sum.
Rational free_cumulant_recursive(const MomentOracle& oracle, const Word& word,
                                 const Partition& pi);

struct CumulantTable {
  Word word;
  std::vector<Partition> index;   // NC(len) in canonical order
  std::vector<Rational> values;   // kappa^{(pi)} per index entry

  Rational moment_sum() const;    // sum of all entries
};

CumulantTable cumulants_from_moments(const MomentOracle& oracle,
                                     const Word& word);

}  // namespace qrot
