#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qrot/partition.hpp"
#include "qrot/rational.hpp"

namespace qrot {

// All sigma in NC(k) with lower <= sigma <= upper, canonical order.
std::vector<Partition> interval(const Partition& lower, const Partition& upper);

// Memoized Mobius function of the NC(k) poset, computed by the defining
// recursion mu(p,p) = 1, sum_{p <= t <= q} mu(p,t) = 0.
class MobiusCache {
 public:
  Rational mobius(const Partition& lower, const Partition& upper);

  std::size_t size() const;

 private:
  Rational mobius_unchecked(const Partition& lower, const Partition& upper);

  mutable std::mutex mu_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> entries_;
};

// Process-wide cache shared by the cumulant machinery.
MobiusCache& global_mobius_cache();

Rational mobius(const Partition& lower, const Partition& upper);

}  // namespace qrot
