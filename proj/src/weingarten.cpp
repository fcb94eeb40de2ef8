#include "qrot/weingarten.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace qrot {

std::string to_string(Flavor f) {
  return f == Flavor::Orthogonal ? "orthogonal" : "unitary";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "orthogonal") return Flavor::Orthogonal;
  if (s == "unitary") return Flavor::Unitary;
  throw ParseError("unknown flavor '" + s + "'");
}

WeingartenKey WeingartenKey::unitary(Decoration d) {
  if (d.size() % 2 != 0)
    throw OddGroundSet("unitary decoration must have even length");
  WeingartenKey key;
  key.flavor = Flavor::Unitary;
  key.k = static_cast<int>(d.size()) / 2;
  key.d = std::move(d);
  return key;
}

bool WeingartenKey::operator<(const WeingartenKey& o) const {
  return std::tie(flavor, k, d) < std::tie(o.flavor, o.k, o.d);
}

std::string WeingartenKey::describe() const {
  return flavor == Flavor::Orthogonal ? std::to_string(k)
                                      : decoration_to_string(d);
}

std::vector<Partition> pairing_index(const WeingartenKey& key, int cap) {
  if (key.k < 1) throw ParseError("pairing half-degree must be positive");
  if (key.k > cap)
    throw CapExceeded("k = " + std::to_string(key.k) +
                      " exceeds Weingarten table cap " + std::to_string(cap));
  if (key.flavor == Flavor::Orthogonal) return enumerate_nc2(2 * key.k);
  return enumerate_nc2_decorated(key.d);
}

RationalMatrix gram_matrix(const WeingartenKey& key, long n, int cap) {
  if (n < 1) throw DimensionTooSmall("Gram matrix needs n >= 1");
  auto index = pairing_index(key, cap);
  const std::size_t m = index.size();
  RationalMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Integer e = pow(Integer(n), join(index[i], index[j]).num_blocks());
      g(i, j) = e;
      g(j, i) = e;
    }
  return g;
}

namespace {

WeingartenTable build_table(const WeingartenKey& key, long n, int cap) {
  if (n < 2)
    throw DimensionTooSmall("Weingarten matrix requires n >= 2, got n = " +
                            std::to_string(n));
  WeingartenTable t;
  t.key = key;
  t.n = n;
  t.index = pairing_index(key, cap);
  t.gram = gram_matrix(key, n, cap);
  try {
    t.wg = invert(t.gram);
  } catch (const SingularMatrix& e) {
    // the Gram matrix is invertible for every n >= 2
    throw std::logic_error("Gram matrix unexpectedly singular at row " +
                           std::to_string(e.row) + " (flavor " +
                           to_string(key.flavor) + ", k " + key.describe() +
                           ", n " + std::to_string(n) + ")");
  }
  return t;
}

std::map<std::pair<WeingartenKey, long>, std::shared_ptr<const WeingartenTable>>&
table_cache() {
  static std::map<std::pair<WeingartenKey, long>,
                  std::shared_ptr<const WeingartenTable>>
      cache;
  return cache;
}

std::mutex& table_cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::shared_ptr<const WeingartenTable> weingarten_table(
    const WeingartenKey& key, long n, int cap) {
  auto cache_key = std::make_pair(key, n);
  {
    std::lock_guard<std::mutex> lock(table_cache_mutex());
    auto it = table_cache().find(cache_key);
    if (it != table_cache().end()) return it->second;
  }
  auto table = std::make_shared<const WeingartenTable>(build_table(key, n, cap));
  std::lock_guard<std::mutex> lock(table_cache_mutex());
  return table_cache().emplace(std::move(cache_key), std::move(table))
      .first->second;
}

Rational asymptotic_deviation(const WeingartenKey& key, long n, int cap) {
  auto table = weingarten_table(key, n, cap);
  Integer nk = pow(Integer(n), key.k);
  Rational sum = 0;
  for (std::size_t i = 0; i < table->index.size(); ++i)
    for (std::size_t j = 0; j < table->index.size(); ++j) {
      Rational v = Rational(nk) * table->wg(i, j) - (i == j ? 1 : 0);
      sum += v < 0 ? -v : v;
    }
  return sum;
}

std::filesystem::path cache_file_name(const WeingartenKey& key, long n) {
  std::string name = to_string(key.flavor) + "_";
  if (key.flavor == Flavor::Orthogonal) {
    name += "k" + std::to_string(key.k);
  } else {
    name += "d";
    for (bool star : key.d) name += star ? 's' : '1';
  }
  name += "_n" + std::to_string(n) + ".wgt";
  return name;
}

void save_table(const WeingartenTable& table,
                const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto path = dir / cache_file_name(table.key, table.n);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << "weingarten v1 " << to_string(table.key.flavor) << ' '
        << table.key.describe() << ' ' << table.n << '\n';
    for (const auto& p : table.index) out << to_string(p) << '\n';
    for (std::size_t i = 0; i < table.index.size(); ++i) {
      for (std::size_t j = 0; j < table.index.size(); ++j) {
        if (j) out << ' ';
        out << to_fraction_string(table.wg(i, j));
      }
      out << '\n';
    }
    if (!out) throw CacheCorrupt("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

WeingartenTable load_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw CacheCorrupt("cannot open cache file " + file.string());
  std::string line;
  if (!std::getline(in, line))
    throw CacheCorrupt("empty cache file " + file.string());
  std::istringstream header(line);
  std::string magic, version, flavor_s, kd;
  long n = 0;
  header >> magic >> version >> flavor_s >> kd >> n;
  if (magic != "weingarten" || version != "v1" || !header)
    throw CacheCorrupt("bad header in " + file.string());

  WeingartenTable t;
  try {
    if (flavor_s == "orthogonal")
      t.key = WeingartenKey::orthogonal(std::stoi(kd));
    else if (flavor_s == "unitary")
      t.key = WeingartenKey::unitary(parse_decoration(kd));
    else
      throw ParseError("unknown flavor");
  } catch (const std::exception& e) {
    throw CacheCorrupt("bad header in " + file.string() + ": " + e.what());
  }
  t.n = n;

  std::vector<Partition> expected_index = pairing_index(t.key);
  for (const auto& expected : expected_index) {
    if (!std::getline(in, line))
      throw CacheCorrupt("truncated index in " + file.string());
    Partition p = [&] {
      try {
        return parse_partition(line);
      } catch (const ParseError& e) {
        throw CacheCorrupt("bad pairing line in " + file.string() + ": " +
                           e.what());
      }
    }();
    if (p != expected)
      throw CacheCorrupt("pairing index mismatch in " + file.string());
  }
  t.index = std::move(expected_index);

  const std::size_t m = t.index.size();
  t.wg = RationalMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw CacheCorrupt("truncated matrix in " + file.string());
      try {
        t.wg(i, j) = parse_rational(tok);
      } catch (const ParseError& e) {
        throw CacheCorrupt("bad entry in " + file.string() + ": " + e.what());
      }
    }

  t.gram = gram_matrix(t.key, t.n);
  if (t.gram * t.wg != RationalMatrix::identity(m))
    throw CacheCorrupt("identity validation failed for " + file.string());
  return t;
}

std::shared_ptr<const WeingartenTable> weingarten_table_cached(
    const WeingartenKey& key, long n, const std::filesystem::path& dir,
    int cap) {
  if (n < 2)
    throw DimensionTooSmall("Weingarten matrix requires n >= 2, got n = " +
                            std::to_string(n));
  auto cache_key = std::make_pair(key, n);
  auto path = dir / cache_file_name(key, n);
  {
    std::lock_guard<std::mutex> lock(table_cache_mutex());
    auto it = table_cache().find(cache_key);
    if (it != table_cache().end()) {
      if (!std::filesystem::exists(path)) save_table(*it->second, dir);
      return it->second;
    }
  }
  std::shared_ptr<const WeingartenTable> table;
  if (std::filesystem::exists(path)) {
    table = std::make_shared<const WeingartenTable>(load_table(path));
  } else {
    table = std::make_shared<const WeingartenTable>(build_table(key, n, cap));
    save_table(*table, dir);
  }
  std::lock_guard<std::mutex> lock(table_cache_mutex());
  return table_cache().emplace(std::move(cache_key), std::move(table))
      .first->second;
}

}  // namespace qrot
