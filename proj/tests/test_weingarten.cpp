#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qrot/weingarten.hpp"

using namespace qrot;

namespace {

RationalMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("invert basics") {
  CHECK(invert(RationalMatrix::identity(3)) == RationalMatrix::identity(3));

  RationalMatrix a = from_longs({{4, 2}, {2, 4}});
  RationalMatrix inv = invert(a);
  CHECK(inv(0, 0) == Rational(1, 3));
  CHECK(inv(0, 1) == Rational(-1, 6));
  CHECK(inv(1, 0) == Rational(-1, 6));
  CHECK(inv(1, 1) == Rational(1, 3));
  CHECK(a * inv == RationalMatrix::identity(2));

  CHECK_THROWS_AS(invert(from_longs({{1, 1}, {1, 1}})), SingularMatrix);
  try {
    invert(from_longs({{1, 1}, {1, 1}}));
  } catch (const SingularMatrix& e) {
    CHECK(e.row == 1);
  }
}

TEST_CASE("invert handles rational entries and zero pivots") {
  RationalMatrix a(3, 3);
  a(0, 1) = Rational(1, 2);
  a(1, 0) = 3;
  a(2, 2) = Rational(-2, 7);
  RationalMatrix inv = invert(a);
  CHECK(a * inv == RationalMatrix::identity(3));
  CHECK(inv * a == RationalMatrix::identity(3));
}

TEST_CASE("gram matrix values") {
  for (long n : {1L, 2L, 5L}) {
    auto g = gram_matrix(WeingartenKey::orthogonal(1), n);
    CHECK(g.rows() == 1);
    CHECK(g(0, 0) == n);
  }
  auto g = gram_matrix(WeingartenKey::orthogonal(2), 3);
  CHECK(g(0, 0) == 9);
  CHECK(g(0, 1) == 3);
  CHECK(g(1, 0) == 3);
  CHECK(g(1, 1) == 9);

  auto gu = gram_matrix(WeingartenKey::unitary(parse_decoration("1*1*")), 3);
  CHECK(gu == g);
}

TEST_CASE("gram matrix is the join power, entrywise") {
  for (int k = 1; k <= 3; ++k) {
    WeingartenKey key = WeingartenKey::orthogonal(k);
    auto index = pairing_index(key);
    for (long n : {2L, 4L}) {
      auto g = gram_matrix(key, n);
      for (std::size_t i = 0; i < index.size(); ++i)
        for (std::size_t j = 0; j < index.size(); ++j) {
          Integer expected = pow(Integer(n), join(index[i], index[j]).num_blocks());
          CHECK(g(i, j) == expected);
          CHECK(g(i, j) == g(j, i));
        }
    }
  }
}

TEST_CASE("weingarten tables") {
  auto t1 = weingarten_table(WeingartenKey::orthogonal(1), 5);
  CHECK(t1->wg(0, 0) == Rational(1, 5));

  auto t2 = weingarten_table(WeingartenKey::orthogonal(2), 2);
  CHECK(t2->wg(0, 0) == Rational(1, 3));
  CHECK(t2->wg(0, 1) == Rational(-1, 6));
  CHECK(t2->wg(1, 1) == Rational(1, 3));

  auto t3 = weingarten_table(WeingartenKey::orthogonal(2), 3);
  CHECK(t3->wg(0, 0) == Rational(1, 8));
  CHECK(t3->wg(0, 1) == Rational(-1, 24));

  CHECK_THROWS_AS(weingarten_table(WeingartenKey::orthogonal(2), 1),
                  DimensionTooSmall);
  CHECK_THROWS_AS(weingarten_table(WeingartenKey::orthogonal(9), 2),
                  CapExceeded);
}

TEST_CASE("gram * wg = identity, k <= 4, n in {2,3,5,10}") {
  for (int k = 1; k <= 4; ++k)
    for (long n : {2L, 3L, 5L, 10L}) {
      auto t = weingarten_table(WeingartenKey::orthogonal(k), n);
      CHECK(t->gram * t->wg ==
            RationalMatrix::identity(t->index.size()));
      // symmetry of the Weingarten matrix
      for (std::size_t i = 0; i < t->index.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(t->wg(i, j) == t->wg(j, i));

      Decoration d;
      for (int s = 0; s < 2 * k; ++s) d.push_back(s % 2 == 1);
      auto tu = weingarten_table(WeingartenKey::unitary(d), n);
      CHECK(tu->gram * tu->wg ==
            RationalMatrix::identity(tu->index.size()));
    }
}

TEST_CASE("alternating-decoration unitary table equals the orthogonal one") {
  // the alternating decoration admits all of NC_2(2k), so the Gram data match
  for (int k = 1; k <= 3; ++k) {
    Decoration d;
    for (int s = 0; s < 2 * k; ++s) d.push_back(s % 2 == 1);
    CHECK(pairing_index(WeingartenKey::unitary(d)) ==
          pairing_index(WeingartenKey::orthogonal(k)));
    auto to = weingarten_table(WeingartenKey::orthogonal(k), 3);
    auto tu = weingarten_table(WeingartenKey::unitary(d), 3);
    CHECK(to->gram == tu->gram);
    CHECK(to->wg == tu->wg);
  }
}

TEST_CASE("asymptotic deviation") {
  for (long n = 2; n <= 10; ++n)
    CHECK(asymptotic_deviation(WeingartenKey::orthogonal(1), n) == 0);
  CHECK(asymptotic_deviation(WeingartenKey::orthogonal(2), 3) == 1);
  CHECK(asymptotic_deviation(WeingartenKey::orthogonal(2), 11) ==
        Rational(1, 5));
  for (long n = 2; n <= 50; ++n)
    CHECK(asymptotic_deviation(WeingartenKey::orthogonal(2), n) ==
          Rational(2, n - 1));
}

TEST_CASE("n * deviation stays bounded for k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    Rational bound = 0;
    for (long n : {2L, 5L, 10L, 25L, 50L}) {
      Rational nd =
          Rational(n) * asymptotic_deviation(WeingartenKey::orthogonal(k), n);
      if (nd > bound) bound = nd;
    }
    // the max over the sampled range is attained at n = 2
    CHECK(bound ==
          Rational(2) * asymptotic_deviation(WeingartenKey::orthogonal(k), 2));
  }
}

TEST_CASE("on-disk cache round trip and validation") {
  auto dir = std::filesystem::temp_directory_path() / "qrot_wgt_test";
  std::filesystem::remove_all(dir);

  auto t = weingarten_table_cached(WeingartenKey::orthogonal(2), 3, dir);
  auto file = dir / cache_file_name(WeingartenKey::orthogonal(2), 3);
  REQUIRE(std::filesystem::exists(file));

  WeingartenTable loaded = load_table(file);
  CHECK(loaded.wg == t->wg);
  CHECK(loaded.index == t->index);

  // header must carry the key
  {
    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(header == "weingarten v1 orthogonal 2 3");
  }

  // corrupt one matrix entry: load must fail the identity validation
  {
    std::ifstream in(file);
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    auto pos = contents.rfind("1/8");
    REQUIRE(pos != std::string::npos);
    contents.replace(pos, 3, "1/9");
    std::ofstream out(file);
    out << contents;
  }
  CHECK_THROWS_AS(load_table(file), CacheCorrupt);

  std::filesystem::remove_all(dir);
}

TEST_CASE("unitary cache file round trip") {
  auto dir = std::filesystem::temp_directory_path() / "qrot_wgt_test_u";
  std::filesystem::remove_all(dir);
  WeingartenKey key = WeingartenKey::unitary(parse_decoration("1*1*"));
  auto t = weingarten_table(key, 2);
  save_table(*t, dir);
  WeingartenTable loaded = load_table(dir / cache_file_name(key, 2));
  CHECK(loaded.key == key);
  CHECK(loaded.wg == t->wg);
  std::filesystem::remove_all(dir);
}
