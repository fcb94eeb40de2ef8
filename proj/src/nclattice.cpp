#include "qrot/nclattice.hpp"

namespace qrot {

std::vector<Partition> interval(const Partition& lower,
                                const Partition& upper) {
  if (lower.k() != upper.k())
    throw GroundSetMismatch("interval endpoints on different ground sets");
  if (!is_noncrossing(lower) || !is_noncrossing(upper))
    throw NotNonCrossing("interval endpoints must be non-crossing");
  if (!leq(lower, upper))
    throw NotComparable("interval endpoints are not comparable");
  std::vector<Partition> out;
  for (const auto& sigma : enumerate_nc(lower.k()))
    if (leq(lower, sigma) && leq(sigma, upper)) out.push_back(sigma);
  return out;
}

Rational MobiusCache::mobius(const Partition& lower, const Partition& upper) {
  if (lower.k() != upper.k())
    throw GroundSetMismatch("mobius endpoints on different ground sets");
  if (!is_noncrossing(lower) || !is_noncrossing(upper))
    throw NotNonCrossing("mobius endpoints must be non-crossing");
  if (!leq(lower, upper))
    throw NotComparable("mobius endpoints are not comparable");
  return mobius_unchecked(lower, upper);
}

Rational MobiusCache::mobius_unchecked(const Partition& lower,
                                       const Partition& upper) {
  if (lower == upper) return 1;
  auto key = std::make_pair(lower.rgs(), upper.rgs());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  // mu(lower, upper) = -sum_{lower <= t < upper} mu(lower, t)
  Rational sum = 0;
  for (const auto& t : interval(lower, upper)) {
    if (t == upper) continue;
    sum += mobius_unchecked(lower, t);
  }
  Rational value = -sum;
  std::lock_guard<std::mutex> lock(mu_);
  entries_.emplace(std::move(key), value);
  return value;
}

std::size_t MobiusCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

MobiusCache& global_mobius_cache() {
  static MobiusCache cache;
  return cache;
}

Rational mobius(const Partition& lower, const Partition& upper) {
  return global_mobius_cache().mobius(lower, upper);
}

}  // namespace qrot
