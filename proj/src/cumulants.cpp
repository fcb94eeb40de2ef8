#include "qrot/cumulants.hpp"

#include <algorithm>

#include "qrot/nclattice.hpp"

namespace qrot {

Word plain_word(const std::vector<int>& labels) {
  Word w;
  w.reserve(labels.size());
  for (int l : labels) w.push_back({l, false});
  return w;
}

std::vector<int> labels_of(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(l.label);
  return out;
}

Decoration decoration_of(const Word& w) {
  Decoration d;
  d.reserve(w.size());
  for (const auto& l : w) d.push_back(l.star);
  return d;
}

namespace {

void check_inputs(const MomentOracle& oracle, const Word& word,
                  const Partition& pi) {
  if (static_cast<int>(word.size()) > oracle.degree_cap())
    throw DegreeExceeded("word length " + std::to_string(word.size()) +
                         " exceeds oracle degree cap " +
                         std::to_string(oracle.degree_cap()));
  if (pi.k() != static_cast<int>(word.size()))
    throw GroundSetMismatch("partition ground set does not match word length");
  if (!is_noncrossing(pi))
    throw NotNonCrossing("moment functionals are indexed by NC partitions");
}

// First block of pi that is an interval of positions.
std::size_t find_interval_block(const Partition& pi) {
  const auto& blocks = pi.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].back() - blocks[b].front() ==
        static_cast<int>(blocks[b].size()) - 1)
      return b;
  throw NotNonCrossing("no interval block; partition is crossing");
}

Rational nested_moment_rec(const MomentOracle& oracle, const Word& word,
                           const Partition& pi) {
  if (pi.num_blocks() == 1) return oracle.eval(word);
  std::size_t b = find_interval_block(pi);
  const auto& blk = pi.blocks()[b];
  Word inner(word.begin() + (blk.front() - 1), word.begin() + blk.back());
  // the inner moment is a scalar and factors out by bilinearity
  Rational scalar = oracle.eval(inner);
  Word rest;
  std::vector<int> rest_labels;
  for (int t = 1; t <= pi.k(); ++t) {
    if (t >= blk.front() && t <= blk.back()) continue;
    rest.push_back(word[t - 1]);
    rest_labels.push_back(pi.block_of(t));
  }
  return scalar *
         nested_moment_rec(oracle, rest, Partition::from_labels(rest_labels));
}

}  // namespace

Rational nested_moment(const MomentOracle& oracle, const Word& word,
                       const Partition& pi) {
  check_inputs(oracle, word, pi);
  return nested_moment_rec(oracle, word, pi);
}

Rational free_cumulant(const MomentOracle& oracle, const Word& word,
                       const Partition& pi) {
  check_inputs(oracle, word, pi);
  Rational sum = 0;
  for (const auto& sigma : interval(Partition::singletons(pi.k()), pi))
    sum += mobius(sigma, pi) * nested_moment_rec(oracle, word, sigma);
  return sum;
}

namespace {

Rational top_cumulant_rec(const MomentOracle& oracle, const Word& word);

// Multiplicative extension: product of top cumulants over the blocks.
Rational block_product_cumulant(const MomentOracle& oracle, const Word& word,
                                const Partition& pi) {
  Rational prod = 1;
  for (const auto& blk : pi.blocks()) {
    Word sub;
    for (int e : blk) sub.push_back(word[e - 1]);
    prod *= top_cumulant_rec(oracle, sub);
    if (prod == 0) return prod;
  }
  return prod;
}

// Solve E[word] = sum_{pi in NC} kappa^{(pi)} for the top cumulant.
Rational top_cumulant_rec(const MomentOracle& oracle, const Word& word) {
  int k = static_cast<int>(word.size());
  Rational value = oracle.eval(word);
  Partition top = Partition::top(k);
  for (const auto& pi : enumerate_nc(k)) {
    if (pi == top) continue;
    value -= block_product_cumulant(oracle, word, pi);
  }
  return value;
}

}  // namespace

Rational free_cumulant_recursive(const MomentOracle& oracle, const Word& word,
                                 const Partition& pi) {
  check_inputs(oracle, word, pi);
  return block_product_cumulant(oracle, word, pi);
}

CumulantTable cumulants_from_moments(const MomentOracle& oracle,
                                     const Word& word) {
  if (static_cast<int>(word.size()) > oracle.degree_cap())
    throw DegreeExceeded("word length " + std::to_string(word.size()) +
                         " exceeds oracle degree cap " +
                         std::to_string(oracle.degree_cap()));
  CumulantTable table;
  table.word = word;
  table.index = enumerate_nc(static_cast<int>(word.size()));
  table.values.reserve(table.index.size());
  for (const auto& pi : table.index)
    table.values.push_back(free_cumulant(oracle, word, pi));
  return table;
}

Rational CumulantTable::moment_sum() const {
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  return sum;
}

}  // namespace qrot
