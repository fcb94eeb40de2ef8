#include <doctest.h>

#include "qrot/nclattice.hpp"

using namespace qrot;

namespace {

long catalan(int m) {
  std::vector<long> c(m + 1, 0);
  c[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) c[i + 1] += c[j] * c[i - j];
  return c[m];
}

}  // namespace

TEST_CASE("interval") {
  Partition p = parse_partition("{1,2}{3,4}");
  CHECK(interval(p, p) == std::vector<Partition>{p});
  CHECK(interval(Partition::singletons(2), Partition::top(2)) ==
        std::vector<Partition>{Partition::top(2), Partition::singletons(2)});
  CHECK(interval(Partition::singletons(4), Partition::top(4)).size() == 14);

  CHECK_THROWS_AS(interval(Partition::top(2), Partition::singletons(2)),
                  NotComparable);
  CHECK_THROWS_AS(
      interval(parse_partition("{1,3}{2,4}"), Partition::top(4)),
      NotNonCrossing);
}

TEST_CASE("mobius basic values") {
  Partition p = parse_partition("{1,2}{3}");
  CHECK(mobius(p, p) == 1);
  CHECK(mobius(Partition::singletons(2), Partition::top(2)) == -1);
  CHECK(mobius(Partition::singletons(4), Partition::top(4)) == -5);
}

TEST_CASE("mobius of the full interval matches the Catalan closed form") {
  // mu(0_n, 1_n) = (-1)^{n-1} Catalan(n-1), Catalan from the recurrence
  for (int n = 1; n <= 7; ++n) {
    Rational expected = Rational(catalan(n - 1)) * (n % 2 == 1 ? 1 : -1);
    CHECK(mobius(Partition::singletons(n), Partition::top(n)) == expected);
  }
}

TEST_CASE("defining recursion holds on every NC(4) interval") {
  auto nc = enumerate_nc(4);
  for (const auto& p : nc)
    for (const auto& q : nc) {
      if (!leq(p, q)) continue;
      Rational sum = 0;
      for (const auto& t : interval(p, q)) sum += mobius(p, t);
      CHECK(sum == (p == q ? 1 : 0));
    }
}

TEST_CASE("Mobius inversion round trip on NC(n), n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto nc = enumerate_nc(n);
    // f(pi) = some injective integer assignment; g = zeta * f
    std::vector<Rational> f(nc.size()), g(nc.size(), 0);
    for (std::size_t i = 0; i < nc.size(); ++i)
      f[i] = Rational(static_cast<long>(3 * i + 1), 7);
    for (std::size_t i = 0; i < nc.size(); ++i)
      for (std::size_t j = 0; j < nc.size(); ++j)
        if (leq(nc[j], nc[i])) g[i] += f[j];
    for (std::size_t i = 0; i < nc.size(); ++i) {
      Rational back = 0;
      for (std::size_t j = 0; j < nc.size(); ++j)
        if (leq(nc[j], nc[i])) back += mobius(nc[j], nc[i]) * g[j];
      CHECK(back == f[i]);
    }
  }
}

TEST_CASE("cache-on and cache-off agree") {
  MobiusCache fresh;
  auto nc = enumerate_nc(5);
  for (std::size_t i = 0; i < nc.size(); i += 7)
    for (std::size_t j = 0; j < nc.size(); ++j) {
      if (!leq(nc[i], nc[j])) continue;
      MobiusCache once;  // recomputes from scratch
      CHECK(once.mobius(nc[i], nc[j]) == fresh.mobius(nc[i], nc[j]));
      CHECK(once.mobius(nc[i], nc[j]) == mobius(nc[i], nc[j]));
    }
  CHECK(fresh.size() > 0);
}

TEST_CASE("mobius validates its endpoints") {
  CHECK_THROWS_AS(mobius(Partition::top(2), Partition::singletons(2)),
                  NotComparable);
  CHECK_THROWS_AS(mobius(parse_partition("{1,3}{2,4}"), Partition::top(4)),
                  NotNonCrossing);
  CHECK_THROWS_AS(mobius(Partition::top(2), Partition::top(3)),
                  GroundSetMismatch);
}
