#include "qrot/models.hpp"

#include "qrot/haar.hpp"

namespace qrot {

namespace {

void check_degree(std::size_t len, int cap) {
  if (static_cast<int>(len) > cap)
    throw CapExceeded("word length " + std::to_string(len) +
                      " exceeds degree cap " + std::to_string(cap));
}

}  // namespace

Rational semicircular_moment(const Rational& c, const std::vector<int>& word) {
  if (word.empty()) return 1;
  if (word.size() % 2 != 0) return 0;
  Partition kw = ker(word);
  Rational ck = 1;
  for (std::size_t i = 0; i < word.size() / 2; ++i) ck *= c;
  Rational sum = 0;
  for (const auto& pi : enumerate_nc2(static_cast<int>(word.size())))
    if (leq(pi, kw)) sum += ck;
  return sum;
}

Rational circular_moment(const Rational& eta, const Rational& theta,
                         const Word& word) {
  if (word.empty()) return 1;
  if (word.size() % 2 != 0) return 0;
  Partition kw = ker(labels_of(word));
  Decoration d = decoration_of(word);
  Rational sum = 0;
  for (const auto& pi : enumerate_nc2_decorated(d)) {
    if (!leq(pi, kw)) continue;
    Rational weight = 1;
    for (const auto& blk : pi.blocks())
      weight *= word[blk[0] - 1].star ? eta : theta;
    sum += weight;
  }
  return sum;
}

Rational generator_row_moment(Flavor flavor, long n, const Word& word) {
  Monomial m;
  m.flavor = flavor;
  m.n = n;
  m.rows.assign(word.size(), 1);
  m.cols = labels_of(word);
  m.d = flavor == Flavor::Unitary ? decoration_of(word)
                                  : Decoration(word.size(), false);
  return haar_moment(m);
}

SemicircularFamilyOracle::SemicircularFamilyOracle(Rational variance,
                                                   int degree_cap)
    : variance_(std::move(variance)), degree_cap_(degree_cap) {
  if (variance_ <= 0) throw ParseError("semicircular variance must be positive");
}

Rational SemicircularFamilyOracle::eval(const Word& word) const {
  check_degree(word.size(), degree_cap_);
  // self-adjoint variables: decorations are immaterial
  return semicircular_moment(variance_, labels_of(word));
}

std::string SemicircularFamilyOracle::descriptor() const {
  return "semicircle:c=" + to_plain_string(variance_);
}

CircularFamilyOracle::CircularFamilyOracle(Rational eta, Rational theta,
                                           int degree_cap)
    : eta_(std::move(eta)), theta_(std::move(theta)), degree_cap_(degree_cap) {
  if (eta_ < 0 || theta_ < 0)
    throw ParseError("circular variances must be nonnegative");
}

Rational CircularFamilyOracle::eval(const Word& word) const {
  check_degree(word.size(), degree_cap_);
  return circular_moment(eta_, theta_, word);
}

std::string CircularFamilyOracle::descriptor() const {
  return "circular:eta=" + to_plain_string(eta_) +
         ",theta=" + to_plain_string(theta_);
}

GeneratorRowOracle::GeneratorRowOracle(Flavor flavor, long n, int degree_cap)
    : flavor_(flavor), n_(n), degree_cap_(degree_cap) {
  if (n < 2) throw DimensionTooSmall("generator row oracle requires n >= 2");
}

Rational GeneratorRowOracle::eval(const Word& word) const {
  check_degree(word.size(), degree_cap_);
  for (const auto& l : word)
    if (l.label < 1 || l.label > n_)
      throw ParseError("generator row label out of range 1.." +
                       std::to_string(n_));
  return generator_row_moment(flavor_, n_, word);
}

std::string GeneratorRowOracle::descriptor() const {
  return (flavor_ == Flavor::Orthogonal ? std::string("row-orthogonal:n=")
                                        : std::string("row-unitary:n=")) +
         std::to_string(n_);
}

std::unique_ptr<MomentOracle> parse_model(const std::string& s) {
  auto colon = s.find(':');
  std::string name = s.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);

  auto get = [&](const std::string& key) -> std::string {
    auto pos = args.find(key + "=");
    if (pos != 0) {
      pos = args.find("," + key + "=");
      if (pos == std::string::npos)
        throw ParseError("model '" + s + "' is missing parameter '" + key +
                         "'");
      pos += 1;
    }
    auto start = pos + key.size() + 1;
    auto end = args.find(',', start);
    return args.substr(start, end == std::string::npos ? std::string::npos
                                                       : end - start);
  };

  if (name == "semicircle")
    return std::make_unique<SemicircularFamilyOracle>(parse_rational(get("c")));
  if (name == "circular")
    return std::make_unique<CircularFamilyOracle>(parse_rational(get("eta")),
                                                  parse_rational(get("theta")));
  if (name == "row-orthogonal")
    return std::make_unique<GeneratorRowOracle>(Flavor::Orthogonal,
                                                std::stol(get("n")));
  if (name == "row-unitary")
    return std::make_unique<GeneratorRowOracle>(Flavor::Unitary,
                                                std::stol(get("n")));
  throw ParseError("unknown model '" + s + "'");
}

}  // namespace qrot
