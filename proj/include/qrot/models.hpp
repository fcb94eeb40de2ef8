#pragma once

#include <memory>
#include <string>

#include "qrot/cumulants.hpp"
#include "qrot/weingarten.hpp"

namespace qrot {

// Free centered semicircular family with common scalar variance c:
// moments count ker-admissible non-crossing pairings, c per pair.
class SemicircularFamilyOracle : public MomentOracle {
 public:
  explicit SemicircularFamilyOracle(Rational variance,
                                    int degree_cap = caps::cumulant_degree);

  Rational eval(const Word& word) const override;
  int degree_cap() const override { return degree_cap_; }
  std::string descriptor() const override;

  const Rational& variance() const { return variance_; }

 private:
  Rational variance_;
  int degree_cap_;
};

// Free centered circular family. Per-block weight for a pair {s < t}:
// theta when position s is plain (pattern c ... c*), eta when position s is
// starred (pattern c* ... c).
class CircularFamilyOracle : public MomentOracle {
 public:
  CircularFamilyOracle(Rational eta, Rational theta,
                       int degree_cap = caps::cumulant_degree);

  Rational eval(const Word& word) const override;
  int degree_cap() const override { return degree_cap_; }
  std::string descriptor() const override;

 private:
  Rational eta_, theta_;
  int degree_cap_;
};

// First row of the generator matrix of A_o(n) / A_u(n) under the Haar state:
// eval(j_1..j_m) = haar moment of u_{1 j_1} ... u_{1 j_m}.
class GeneratorRowOracle : public MomentOracle {
 public:
  GeneratorRowOracle(Flavor flavor, long n,
                     int degree_cap = caps::cumulant_degree);

  Rational eval(const Word& word) const override;
  int degree_cap() const override { return degree_cap_; }
  std::string descriptor() const override;

  Flavor flavor() const { return flavor_; }
  long n() const { return n_; }

 private:
  Flavor flavor_;
  long n_;
  int degree_cap_;
};

Rational semicircular_moment(const Rational& c, const std::vector<int>& word);
Rational circular_moment(const Rational& eta, const Rational& theta,
                         const Word& word);
Rational generator_row_moment(Flavor flavor, long n, const Word& word);

// Model selection strings: "semicircle:c=<p/q>",
// "circular:eta=<p/q>,theta=<p/q>", "row-orthogonal:n=<n>",
// "row-unitary:n=<n>".
std::unique_ptr<MomentOracle> parse_model(const std::string& s);

}  // namespace qrot
