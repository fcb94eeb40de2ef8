#include "qrot/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qrot {

namespace {

// Union-find over 0..n-1, path halving + union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

std::vector<int> normalize_rgs(const std::vector<int>& labels) {
  std::vector<int> rgs(labels.size());
  std::vector<int> seen;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    auto it = std::find(seen.begin(), seen.end(), labels[t]);
    if (it == seen.end()) {
      rgs[t] = static_cast<int>(seen.size());
      seen.push_back(labels[t]);
    } else {
      rgs[t] = static_cast<int>(it - seen.begin());
    }
  }
  return rgs;
}

std::vector<std::vector<int>> blocks_from_rgs(const std::vector<int>& rgs) {
  int nb = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
  std::vector<std::vector<int>> blocks(nb);
  for (std::size_t t = 0; t < rgs.size(); ++t)
    blocks[rgs[t]].push_back(static_cast<int>(t) + 1);
  return blocks;
}

// Crossing test on an rgs-labelled prefix: blocks V != W with
// s1 < t1 < s2 < t2, s1,s2 in V, t1,t2 in W.
bool rgs_has_crossing(const std::vector<int>& rgs) {
  int n = static_cast<int>(rgs.size());
  for (int t1 = 0; t1 < n; ++t1)
    for (int s2 = t1 + 1; s2 < n; ++s2) {
      if (rgs[s2] == rgs[t1]) continue;
      // need s1 < t1 in block of s2, and t2 > s2 in block of t1
      bool s1_found = false;
      for (int s1 = 0; s1 < t1 && !s1_found; ++s1)
        s1_found = rgs[s1] == rgs[s2];
      if (!s1_found) continue;
      for (int t2 = s2 + 1; t2 < n; ++t2)
        if (rgs[t2] == rgs[t1]) return true;
    }
  return false;
}

// Adding position `pos` (0-based) to block b creates a crossing iff some
// earlier position t1 in b has another block with elements on both sides.
bool extension_crosses(const std::vector<int>& rgs, int pos, int b) {
  for (int t1 = 0; t1 < pos; ++t1) {
    if (rgs[t1] != b) continue;
    int nb = *std::max_element(rgs.begin(), rgs.begin() + pos) + 1;
    for (int v = 0; v < nb; ++v) {
      if (v == b) continue;
      bool below = false, above = false;
      for (int s = 0; s < t1; ++s) below |= rgs[s] == v;
      for (int s = t1 + 1; s < pos; ++s) above |= rgs[s] == v;
      if (below && above) return true;
    }
  }
  return false;
}

}  // namespace

Partition::Partition(int k, std::vector<std::vector<int>> blocks) : k_(k) {
  if (k <= 0) throw ParseError("ground-set size must be positive");
  std::vector<int> labels(k, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& blk = blocks[b];
    if (blk.empty()) throw ParseError("empty block");
    std::sort(blk.begin(), blk.end());
    for (int e : blk) {
      if (e < 1 || e > k) throw ParseError("element out of range");
      if (labels[e - 1] != -1) throw ParseError("element repeated across blocks");
      labels[e - 1] = static_cast<int>(b);
    }
  }
  for (int t = 0; t < k; ++t)
    if (labels[t] == -1) throw ParseError("blocks do not cover the ground set");
  rgs_ = normalize_rgs(labels);
  blocks_ = blocks_from_rgs(rgs_);
}

Partition Partition::from_labels(const std::vector<int>& labels) {
  if (labels.empty()) throw EmptyWord("empty word");
  Partition p;
  p.k_ = static_cast<int>(labels.size());
  p.rgs_ = normalize_rgs(labels);
  p.blocks_ = blocks_from_rgs(p.rgs_);
  return p;
}

Partition Partition::singletons(int k) {
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Partition Partition::top(int k) { return from_labels(std::vector<int>(k, 0)); }

bool Partition::is_pair_partition() const {
  return k_ % 2 == 0 &&
         std::all_of(blocks_.begin(), blocks_.end(),
                     [](const auto& b) { return b.size() == 2; });
}

bool Partition::operator<(const Partition& o) const {
  if (k_ != o.k_) return k_ < o.k_;
  return rgs_ < o.rgs_;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  for (const auto& block : p.blocks()) {
    os << '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) os << ',';
      os << block[i];
    }
    os << '}';
  }
  return os.str();
}

Partition parse_partition(const std::string& s) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  int max_elem = 0;
  while (i < s.size()) {
    if (s[i] != '{') throw ParseError("expected '{' in partition '" + s + "'");
    ++i;
    std::vector<int> block;
    while (i < s.size() && s[i] != '}') {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw ParseError("expected integer in partition '" + s + "'");
      block.push_back(std::stoi(s.substr(i, j - i)));
      max_elem = std::max(max_elem, block.back());
      i = j;
      if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) throw ParseError("unterminated block in '" + s + "'");
    ++i;  // '}'
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) throw ParseError("empty partition encoding");
  return Partition(max_elem, std::move(blocks));
}

std::string decoration_to_string(const Decoration& d) {
  std::string s;
  for (bool star : d) s += star ? '*' : '1';
  return s;
}

Decoration parse_decoration(const std::string& s) {
  Decoration d;
  for (char c : s) {
    if (c == '1')
      d.push_back(false);
    else if (c == '*')
      d.push_back(true);
    else
      throw ParseError(std::string("bad decoration character '") + c + "'");
  }
  return d;
}

namespace {

// Shared lex-order RGS generator. `pair_mode` restricts block sizes to two
// and requires all blocks closed at the end; `nc_only` prunes crossings.
void generate(int k, bool nc_only, bool pair_mode, const Decoration* d,
              std::vector<Partition>& out) {
  std::vector<int> rgs(k);
  std::vector<int> block_size(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int next_block) {
    if (pos == k) {
      out.push_back(Partition::from_labels(rgs));
      return;
    }
    for (int b = 0; b <= next_block; ++b) {
      bool is_new = b == next_block;
      if (pair_mode) {
        if (!is_new && block_size[b] >= 2) continue;
        // every open block still needs exactly one partner
        int open = 0;
        for (int v = 0; v < next_block; ++v)
          if (block_size[v] == 1) ++open;
        int open_after = open + (is_new ? 1 : -1);
        if (open_after > k - pos - 1 || (k - pos - 1 - open_after) % 2 != 0)
          continue;
        if (d && !is_new) {
          // the partner position: decoration must differ
          int partner = -1;
          for (int s = 0; s < pos; ++s)
            if (rgs[s] == b) partner = s;
          if ((*d)[partner] == (*d)[pos]) continue;
        }
      }
      if (nc_only && !is_new && extension_crosses(rgs, pos, b)) continue;
      rgs[pos] = b;
      ++block_size[b];
      rec(pos + 1, next_block + (is_new ? 1 : 0));
      --block_size[b];
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<Partition> enumerate_all_partitions(int k, int cap) {
  if (k < 1) throw ParseError("k must be positive");
  if (k > cap)
    throw CapExceeded("k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Partition> out;
  generate(k, /*nc_only=*/false, /*pair_mode=*/false, nullptr, out);
  return out;
}

std::vector<Partition> enumerate_nc(int k, int cap) {
  if (k < 1) throw ParseError("k must be positive");
  if (k > cap)
    throw CapExceeded("k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Partition> out;
  generate(k, /*nc_only=*/true, /*pair_mode=*/false, nullptr, out);
  return out;
}

std::vector<Partition> enumerate_nc2(int k, int cap) {
  if (k < 1) throw ParseError("k must be positive");
  if (k % 2 != 0)
    throw OddGroundSet("pairings are undefined on an odd ground set, k = " +
                       std::to_string(k));
  if (k > cap)
    throw CapExceeded("k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Partition> out;
  generate(k, /*nc_only=*/true, /*pair_mode=*/true, nullptr, out);
  return out;
}

std::vector<Partition> enumerate_nc2_decorated(const Decoration& d, int cap) {
  int k = static_cast<int>(d.size());
  if (k < 1) throw ParseError("decoration must be nonempty");
  if (k % 2 != 0)
    throw OddGroundSet("pairings are undefined on an odd ground set, k = " +
                       std::to_string(k));
  if (k > cap)
    throw CapExceeded("k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Partition> out;
  generate(k, /*nc_only=*/true, /*pair_mode=*/true, &d, out);
  return out;
}

Partition join(const Partition& p, const Partition& q) {
  if (p.k() != q.k())
    throw GroundSetMismatch("join of partitions of different ground sets");
  UnionFind uf(p.k());
  for (const auto& part : {std::cref(p), std::cref(q)})
    for (const auto& block : part.get().blocks())
      for (std::size_t i = 1; i < block.size(); ++i)
        uf.merge(block[0] - 1, block[i] - 1);
  std::vector<int> labels(p.k());
  for (int t = 0; t < p.k(); ++t) labels[t] = uf.find(t);
  return Partition::from_labels(labels);
}

bool leq(const Partition& p, const Partition& q) {
  if (p.k() != q.k())
    throw GroundSetMismatch("comparing partitions of different ground sets");
  for (const auto& block : p.blocks()) {
    int target = q.block_of(block[0]);
    for (int e : block)
      if (q.block_of(e) != target) return false;
  }
  return true;
}

Partition ker(const std::vector<int>& word) {
  if (word.empty()) throw EmptyWord("ker of empty word");
  return Partition::from_labels(word);
}

bool is_noncrossing(const Partition& p) { return !rgs_has_crossing(p.rgs()); }

bool is_noncrossing_recursive(const Partition& p) {
  std::vector<std::vector<int>> blocks = p.blocks();
  std::vector<bool> removed(p.k() + 1, false);
  while (!blocks.empty()) {
    // find a block that is an interval of the remaining positions
    bool found = false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& blk = blocks[b];
      bool interval = true;
      for (std::size_t i = 0; i + 1 < blk.size() && interval; ++i)
        for (int e = blk[i] + 1; e < blk[i + 1] && interval; ++e)
          interval = removed[e];
      if (interval) {
        for (int e : blk) removed[e] = true;
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool respects_decoration(const Partition& p, const Decoration& d) {
  if (static_cast<int>(d.size()) != p.k())
    throw GroundSetMismatch("decoration length does not match ground set");
  for (const auto& block : p.blocks()) {
    if (block.size() != 2) return false;
    if (d[block[0] - 1] == d[block[1] - 1]) return false;
  }
  return true;
}

}  // namespace qrot
