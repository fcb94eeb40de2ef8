#include "qrot/invariance.hpp"

#include <algorithm>

namespace qrot {

namespace {

// Canonical column-word representatives, one per ker class: partitions of
// {1..m} with at most n blocks, block indices as labels.
std::vector<std::vector<int>> column_representatives(int m, long n) {
  std::vector<std::vector<int>> out;
  for (const auto& p : enumerate_all_partitions(m)) {
    if (p.num_blocks() > n) continue;
    std::vector<int> word(m);
    for (int t = 1; t <= m; ++t) word[t - 1] = p.block_of(t) + 1;
    out.push_back(std::move(word));
  }
  return out;
}

Word make_word(const std::vector<int>& labels, const Decoration& d) {
  Word w(labels.size());
  for (std::size_t t = 0; t < labels.size(); ++t) w[t] = {labels[t], d[t]};
  return w;
}

// All index words in {1..n}^m, lexicographic.
bool next_tuple(std::vector<int>& idx, long n) {
  for (std::size_t t = idx.size(); t-- > 0;) {
    if (idx[t] < n) {
      ++idx[t];
      std::fill(idx.begin() + static_cast<std::ptrdiff_t>(t) + 1, idx.end(), 1);
      return true;
    }
  }
  return false;
}

}  // namespace

InvarianceReport averaged_invariance_check(const MomentOracle& oracle,
                                           Flavor flavor, long n,
                                           int max_degree) {
  if (n < 2) throw DimensionTooSmall("invariance check requires n >= 2");
  InvarianceReport report;
  report.model = oracle.descriptor();
  report.flavor = flavor;
  report.n = n;
  report.max_degree = max_degree;

  for (int m = 1; m <= max_degree; ++m) {
    std::vector<Decoration> decorations;
    if (flavor == Flavor::Orthogonal) {
      decorations.push_back(Decoration(m, false));
    } else {
      for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
        Decoration d(m);
        for (int t = 0; t < m; ++t) d[t] = (bits >> t) & 1;
        decorations.push_back(std::move(d));
      }
    }
    auto cols = column_representatives(m, n);

    for (const auto& d : decorations) {
      std::vector<Partition> pairings;
      std::shared_ptr<const WeingartenTable> table;
      std::vector<Rational> averaged;  // A[pi] = sum_{i: pi <= ker i} oracle(i)
      if (m % 2 == 0) {
        pairings = flavor == Flavor::Orthogonal
                       ? enumerate_nc2(m)
                       : enumerate_nc2_decorated(d);
        if (!pairings.empty()) {
          WeingartenKey key = flavor == Flavor::Orthogonal
                                  ? WeingartenKey::orthogonal(m / 2)
                                  : WeingartenKey::unitary(d);
          table = weingarten_table(key, n);
          averaged.assign(pairings.size(), 0);
          std::vector<int> i(m, 1);
          do {
            Rational v = oracle.eval(make_word(i, d));
            if (v == 0) continue;
            Partition ki = ker(i);
            for (std::size_t p = 0; p < pairings.size(); ++p)
              if (leq(pairings[p], ki)) averaged[p] += v;
          } while (next_tuple(i, n));
        }
      }

      for (const auto& j : cols) {
        Rational rhs = oracle.eval(make_word(j, d));
        Rational lhs = 0;
        if (!pairings.empty()) {
          Partition kj = ker(j);
          for (std::size_t s = 0; s < pairings.size(); ++s) {
            if (!leq(pairings[s], kj)) continue;
            for (std::size_t p = 0; p < pairings.size(); ++p)
              lhs += table->wg(p, s) * averaged[p];
          }
        }
        ++report.checked;
        if (lhs != rhs) report.failures.push_back({j, d, lhs, rhs});
      }
    }
  }
  return report;
}

bool interval_reduction_check(const Partition& pi, const std::vector<int>& cols,
                              long n) {
  if (n < 2) throw DimensionTooSmall("reduction check requires n >= 2");
  if (pi.k() != static_cast<int>(cols.size()))
    throw GroundSetMismatch("pairing and column word differ in length");
  if (!pi.is_pair_partition() || !is_noncrossing(pi))
    throw NotNonCrossing("reduction is defined for non-crossing pairings");

  // Contract interval pair blocks with sum_i u_{i j} u_{i j'} = delta_{jj'} 1.
  std::vector<int> partner(pi.k() + 1);
  for (const auto& blk : pi.blocks()) {
    partner[blk[0]] = blk[1];
    partner[blk[1]] = blk[0];
  }
  std::vector<int> active(pi.k());
  for (int t = 0; t < pi.k(); ++t) active[t] = t + 1;
  while (!active.empty()) {
    bool contracted = false;
    for (std::size_t t = 0; t + 1 < active.size(); ++t) {
      if (partner[active[t]] != active[t + 1]) continue;
      if (cols[active[t] - 1] != cols[active[t + 1] - 1]) return false;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(t),
                   active.begin() + static_cast<std::ptrdiff_t>(t) + 2);
      contracted = true;
      break;
    }
    if (!contracted)
      throw NotNonCrossing("no interval pair block; pairing is crossing");
  }
  return true;
}

Rational haar_row_sum(const Partition& pi, const std::vector<int>& cols, long n,
                      Flavor flavor, const Decoration& d) {
  if (!pi.is_pair_partition() || !is_noncrossing(pi))
    throw NotNonCrossing("row sums are indexed by non-crossing pairings");
  if (pi.k() != static_cast<int>(cols.size()))
    throw GroundSetMismatch("pairing and column word differ in length");

  // Rows with pi <= ker(rows): one free label per block of pi.
  int nb = pi.num_blocks();
  std::vector<int> labels(nb, 1);
  Rational sum = 0;
  do {
    Monomial m;
    m.flavor = flavor;
    m.n = n;
    m.rows.resize(pi.k());
    for (int t = 1; t <= pi.k(); ++t) m.rows[t - 1] = labels[pi.block_of(t)];
    m.cols = cols;
    m.d = flavor == Flavor::Unitary ? d : Decoration(pi.k(), false);
    sum += haar_moment(m);
  } while (next_tuple(labels, n));
  return sum;
}

BoundScan bound_scan(const WeingartenKey& key, long n_min, long n_max) {
  if (n_min < 2) throw DimensionTooSmall("bound scan requires n_min >= 2");
  if (n_max < n_min) throw ParseError("n_max must be at least n_min");
  BoundScan scan;
  scan.flavor = key.flavor;
  scan.key = key;
  scan.d_estimate = 0;
  for (long n = n_min; n <= n_max; ++n) {
    Rational delta = asymptotic_deviation(key, n);
    Rational nd = Rational(n) * delta;
    if (scan.samples.empty() || nd > scan.d_estimate) {
      scan.d_estimate = nd;
      scan.argmax_n = n;
    }
    scan.samples.push_back({n, std::move(delta), std::move(nd)});
  }
  return scan;
}

CounterexampleReport counterexample_report(long n, int max_degree) {
  if (n < 2) throw DimensionTooSmall("counterexample requires n >= 2");
  CounterexampleReport r;
  r.n = n;
  r.psi_x1_sq = generator_row_moment(Flavor::Orthogonal, n, plain_word({1, 1}));
  r.sum_psi_sq_sq = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      r.sum_psi_sq_sq +=
          generator_row_moment(Flavor::Orthogonal, n, plain_word({i, i, j, j}));
  r.psi_x1_4 =
      generator_row_moment(Flavor::Orthogonal, n, plain_word({1, 1, 1, 1}));
  r.free_prediction = Rational(Integer(1), Integer(n) * n);
  r.not_free = r.psi_x1_4 != r.free_prediction;
  GeneratorRowOracle oracle(Flavor::Orthogonal, n);
  r.rotatable =
      averaged_invariance_check(oracle, Flavor::Orthogonal, n, max_degree);
  return r;
}

}  // namespace qrot
