#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "qrot/matrix.hpp"
#include "qrot/partition.hpp"

namespace qrot {

enum class Flavor { Orthogonal, Unitary };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

// Orthogonal tables are indexed by the pairing half-degree k; unitary tables
// by a decoration of even length.
struct WeingartenKey {
  Flavor flavor = Flavor::Orthogonal;
  int k = 0;          // half-degree; for unitary this is d.size()/2
  Decoration d;       // empty for orthogonal

  static WeingartenKey orthogonal(int k) { return {Flavor::Orthogonal, k, {}}; }
  static WeingartenKey unitary(Decoration d);

  bool operator==(const WeingartenKey&) const = default;
  bool operator<(const WeingartenKey&) const;
  std::string describe() const;  // "k" as text, or the decoration string
};

struct WeingartenTable {
  WeingartenKey key;
  long n = 0;
  std::vector<Partition> index;  // admissible pairings, canonical order
  RationalMatrix gram;
  RationalMatrix wg;
};

// Square matrix n^{|pi v sigma|} over the admissible pairings. Accepts n >= 1
// (invertibility is only guaranteed for n >= 2).
RationalMatrix gram_matrix(const WeingartenKey& key, long n,
                           int cap = caps::weingarten_k);

std::vector<Partition> pairing_index(const WeingartenKey& key,
                                     int cap = caps::weingarten_k);

// Assembled and validated table, cached in-process by (key, n).
// Requires n >= 2. Singular elimination for n >= 2 would contradict the
// invertibility guarantee and is reported as a fatal consistency error.
std::shared_ptr<const WeingartenTable> weingarten_table(
    const WeingartenKey& key, long n, int cap = caps::weingarten_k);

// Delta(n) = sum_{pi,sigma} |n^k wg(pi,sigma) - delta_{pi,sigma}|.
Rational asymptotic_deviation(const WeingartenKey& key, long n,
                              int cap = caps::weingarten_k);

// On-disk cache, one file per (key, n). Format (version "v1"):
//   weingarten v1 <flavor> <k-or-decoration> <n>
//   <pairing encoding, one per line>
//   <wg entries row-major, whitespace-separated "p/q" tokens>
std::filesystem::path cache_file_name(const WeingartenKey& key, long n);
void save_table(const WeingartenTable& table, const std::filesystem::path& dir);

// Reads a table back bit-exactly; recomputes the Gram matrix and throws
// CacheCorrupt unless gram * wg = identity.
WeingartenTable load_table(const std::filesystem::path& file);

// Cached lookup that consults the on-disk directory before computing, and
// writes newly computed tables back (atomically).
std::shared_ptr<const WeingartenTable> weingarten_table_cached(
    const WeingartenKey& key, long n, const std::filesystem::path& dir,
    int cap = caps::weingarten_k);

}  // namespace qrot
