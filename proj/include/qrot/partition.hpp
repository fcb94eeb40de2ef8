#pragma once

#include <string>
#include <vector>

#include "qrot/errors.hpp"

namespace qrot {

namespace caps {
inline constexpr int full_partitions = 16;
inline constexpr int pairings = 20;
inline constexpr int weingarten_k = 8;
inline constexpr int cumulant_degree = 12;
}  // namespace caps

// Set partition of {1..k} in canonical block form: each block strictly
// increasing, blocks sorted by their minimum element.
class Partition {
 public:
  Partition() = default;

  // Blocks must be disjoint, nonempty, and cover {1..k} exactly; they are
  // brought into canonical form on construction.
  Partition(int k, std::vector<std::vector<int>> blocks);

  // Partition of {1..k} from a block label per position (labels arbitrary).
  static Partition from_labels(const std::vector<int>& labels);

  static Partition singletons(int k);
  static Partition top(int k);

  int k() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  // Restricted growth string: rgs()[t] is the index (0-based, by order of
  // first occurrence) of the block containing position t+1.
  const std::vector<int>& rgs() const { return rgs_; }

  // Index of the block containing position p (1-based position).
  int block_of(int p) const { return rgs_[p - 1]; }

  bool is_pair_partition() const;

  bool operator==(const Partition& o) const { return rgs_ == o.rgs_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  // Canonical order: lexicographic by restricted-growth string.
  bool operator<(const Partition& o) const;

 private:
  int k_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> rgs_;
};

// Decoration of positions: false = plain ("1"), true = star ("*").
using Decoration = std::vector<bool>;

// Text encodings used bit-exactly by the CLI and file formats,
// e.g. "{1,4}{2,3}" and "1*1*".
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& s);
std::string decoration_to_string(const Decoration& d);
Decoration parse_decoration(const std::string& s);

std::vector<Partition> enumerate_all_partitions(int k,
                                                int cap = caps::full_partitions);
std::vector<Partition> enumerate_nc(int k, int cap = caps::full_partitions);
std::vector<Partition> enumerate_nc2(int k, int cap = caps::pairings);
std::vector<Partition> enumerate_nc2_decorated(const Decoration& d,
                                               int cap = caps::pairings);

// Join in the full partition lattice P(k).
Partition join(const Partition& p, const Partition& q);

// Refinement order: every block of p contained in a block of q.
bool leq(const Partition& p, const Partition& q);

// Partition of positions grouping equal labels.
Partition ker(const std::vector<int>& word);

// Interleaving test of blocks.
bool is_noncrossing(const Partition& p);

// Recursive interval-removal characterization; agrees with is_noncrossing.
bool is_noncrossing_recursive(const Partition& p);

// Every block pairs a plain position with a starred one.
bool respects_decoration(const Partition& p, const Decoration& d);

}  // namespace qrot
