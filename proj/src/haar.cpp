#include "qrot/haar.hpp"

#include <sstream>

namespace qrot {

void Monomial::validate() const {
  if (n < 2) throw DimensionTooSmall("monomials require n >= 2");
  if (rows.size() != cols.size())
    throw GroundSetMismatch("row and column index words differ in length");
  if (flavor == Flavor::Unitary && d.size() != rows.size())
    throw GroundSetMismatch("decoration length does not match monomial length");
  for (std::size_t t = 0; t < rows.size(); ++t)
    if (rows[t] < 1 || rows[t] > n || cols[t] < 1 || cols[t] > n)
      throw ParseError("generator index out of range 1.." + std::to_string(n));
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  for (std::size_t t = 0; t < m.rows.size(); ++t) {
    if (t) os << ' ';
    os << m.rows[t] << ',' << m.cols[t];
    if (m.flavor == Flavor::Unitary && m.d[t]) os << '*';
  }
  return os.str();
}

Monomial parse_monomial(Flavor flavor, long n, const std::string& word) {
  Monomial m;
  m.flavor = flavor;
  m.n = n;
  std::istringstream is(word);
  std::string tok;
  while (is >> tok) {
    bool star = false;
    if (tok.ends_with('*')) {
      star = true;
      tok.pop_back();
    }
    if (star && flavor == Flavor::Orthogonal)
      throw ParseError("starred generators only exist for the unitary flavor");
    auto comma = tok.find(',');
    if (comma == std::string::npos)
      throw ParseError("expected 'i,j' factor, got '" + tok + "'");
    try {
      m.rows.push_back(std::stoi(tok.substr(0, comma)));
      m.cols.push_back(std::stoi(tok.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ParseError("malformed factor '" + tok + "'");
    }
    m.d.push_back(star);
  }
  if (flavor == Flavor::Orthogonal) m.d.assign(m.rows.size(), false);
  m.validate();
  return m;
}

Rational haar_moment(const Monomial& m, int cap) {
  m.validate();
  const std::size_t len = m.length();
  if (len == 0) return 1;
  if (len % 2 != 0) return 0;
  if (static_cast<int>(len) > 2 * cap)
    throw CapExceeded("monomial degree " + std::to_string(len) +
                      " exceeds table cap 2k = " + std::to_string(2 * cap));

  WeingartenKey key = m.flavor == Flavor::Orthogonal
                          ? WeingartenKey::orthogonal(static_cast<int>(len) / 2)
                          : WeingartenKey::unitary(m.d);
  auto index = pairing_index(key, cap);
  if (index.empty()) return 0;  // no admissible pairing for this decoration
  auto table = weingarten_table(key, m.n, cap);

  Partition kr = ker(m.rows);
  Partition kc = ker(m.cols);
  std::vector<std::size_t> row_adm, col_adm;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (leq(index[i], kr)) row_adm.push_back(i);
    if (leq(index[i], kc)) col_adm.push_back(i);
  }
  Rational sum = 0;
  for (std::size_t i : row_adm)
    for (std::size_t j : col_adm) sum += table->wg(i, j);
  return sum;
}

bool orthogonality_check(long n, int j, int jp, int degree_budget) {
  if (n < 2) throw DimensionTooSmall("orthogonality check requires n >= 2");
  for (int m = 0; m <= degree_budget; ++m) {
    // all monomials M of degree m
    std::vector<int> idx(2 * m, 1);
    bool done = false;
    while (!done) {
      Monomial inner;
      inner.flavor = Flavor::Orthogonal;
      inner.n = n;
      for (int t = 0; t < m; ++t) {
        inner.rows.push_back(idx[t]);
        inner.cols.push_back(idx[m + t]);
      }
      inner.d.assign(m, false);

      Rational lhs = 0;
      for (int i = 1; i <= n; ++i) {
        Monomial full = inner;
        full.rows.insert(full.rows.begin(), {i, i});
        full.cols.insert(full.cols.begin(), {j, jp});
        full.d.assign(m + 2, false);
        lhs += haar_moment(full);
      }
      Rational rhs = (j == jp) ? haar_moment(inner) : Rational(0);
      if (lhs != rhs) return false;

      // next index tuple
      done = true;
      for (std::size_t t = idx.size(); t-- > 0;) {
        if (idx[t] < n) {
          ++idx[t];
          std::fill(idx.begin() + static_cast<std::ptrdiff_t>(t) + 1, idx.end(),
                    1);
          done = false;
          break;
        }
      }
      if (m == 0) break;
    }
  }
  return true;
}

}  // namespace qrot
