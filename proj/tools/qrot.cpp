#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qrot/json_io.hpp"
#include "qrot/nclattice.hpp"

namespace {

using namespace qrot;

enum class Format { Json, Csv, Plain };

struct GlobalOpts {
  Format format = Format::Plain;
  std::optional<std::filesystem::path> cache_dir;
  bool approx = false;
};

std::string format_scalar(const Rational& r, const GlobalOpts& g) {
  std::string s = g.format == Format::Json ? "\"" + to_fraction_string(r) + "\""
                                           : to_plain_string(r);
  if (g.approx && g.format != Format::Json) {
    double v = static_cast<double>(num(r)) / static_cast<double>(den(r));
    s += " ~= " + std::to_string(v);
  }
  return s;
}

std::shared_ptr<const WeingartenTable> get_table(const WeingartenKey& key,
                                                 long n, const GlobalOpts& g) {
  if (g.cache_dir) return weingarten_table_cached(key, n, *g.cache_dir);
  return weingarten_table(key, n);
}

int cmd_partitions(const std::string& cls, int k, const std::string& dec) {
  std::vector<Partition> out;
  if (cls == "nc2d") {
    out = enumerate_nc2_decorated(parse_decoration(dec));
  } else if (cls == "all") {
    out = enumerate_all_partitions(k);
  } else if (cls == "nc") {
    out = enumerate_nc(k);
  } else if (cls == "nc2") {
    out = enumerate_nc2(k);
  } else {
    throw ParseError("unknown partition class '" + cls + "'");
  }
  for (const auto& p : out) std::cout << to_string(p) << '\n';
  return 0;
}

int cmd_mobius(const std::string& lower, const std::string& upper,
               const GlobalOpts& g) {
  Rational mu = mobius(parse_partition(lower), parse_partition(upper));
  std::cout << format_scalar(mu, g) << '\n';
  return 0;
}

WeingartenKey make_key(const std::string& flavor, int k,
                       const std::string& dec) {
  Flavor f = parse_flavor(flavor);
  if (f == Flavor::Orthogonal) {
    if (k < 1) throw ParseError("orthogonal tables need --k >= 1");
    return WeingartenKey::orthogonal(k);
  }
  if (dec.empty()) throw ParseError("unitary tables need --d");
  return WeingartenKey::unitary(parse_decoration(dec));
}

int cmd_weingarten(const std::string& flavor, int k, const std::string& dec,
                   long n, const GlobalOpts& g) {
  auto table = get_table(make_key(flavor, k, dec), n, g);
  const std::size_t m = table->index.size();
  switch (g.format) {
    case Format::Json:
      std::cout << to_json(*table).dump() << '\n';
      break;
    case Format::Csv: {
      for (std::size_t j = 0; j < m; ++j)
        std::cout << (j ? "," : "") << to_string(table->index[j]);
      std::cout << '\n';
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
          std::cout << (j ? "," : "") << to_fraction_string(table->wg(i, j));
        std::cout << '\n';
      }
      break;
    }
    case Format::Plain: {
      for (const auto& p : table->index) std::cout << to_string(p) << '\n';
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
          std::cout << (j ? " " : "") << to_fraction_string(table->wg(i, j));
        std::cout << '\n';
      }
      break;
    }
  }
  return 0;
}

int cmd_haar(const std::string& flavor, long n, const std::string& word,
             const GlobalOpts& g) {
  Monomial m = parse_monomial(parse_flavor(flavor), n, word);
  std::cout << format_scalar(haar_moment(m), g) << '\n';
  return 0;
}

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    Letter l;
    if (tok.ends_with('*')) {
      l.star = true;
      tok.pop_back();
    }
    try {
      l.label = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("malformed word letter '" + tok + "'");
    }
    w.push_back(l);
  }
  if (w.empty()) throw EmptyWord("empty word");
  return w;
}

int cmd_moments(const std::string& model, const std::string& word,
                const GlobalOpts& g) {
  auto oracle = parse_model(model);
  std::cout << format_scalar(oracle->eval(parse_word(word)), g) << '\n';
  return 0;
}

int cmd_cumulants(const std::string& model, const std::string& word,
                  const GlobalOpts& g) {
  auto oracle = parse_model(model);
  CumulantTable table = cumulants_from_moments(*oracle, parse_word(word));
  if (g.format == Format::Csv) {
    std::cout << "partition,value\n";
    for (std::size_t i = 0; i < table.index.size(); ++i)
      std::cout << to_string(table.index[i]) << ','
                << to_fraction_string(table.values[i]) << '\n';
  } else {
    std::cout << to_json(table).dump() << '\n';
  }
  return 0;
}

int cmd_verify_rotatable(const std::string& model, const std::string& flavor,
                         long n, int max_degree) {
  auto oracle = parse_model(model);
  auto report =
      averaged_invariance_check(*oracle, parse_flavor(flavor), n, max_degree);
  std::cout << to_json(report).dump() << '\n';
  return report.pass() ? 0 : 1;
}

int cmd_verify_counterexample(long n, int max_degree) {
  auto report = counterexample_report(n, max_degree);
  std::cout << to_json(report).dump() << '\n';
  return 0;
}

int cmd_verify_bound_scan(const std::string& flavor, int k,
                          const std::string& dec, long n_min, long n_max) {
  auto scan = bound_scan(make_key(flavor, k, dec), n_min, n_max);
  std::cout << to_json(scan).dump() << '\n';
  return 0;
}

int cmd_cache_validate(const GlobalOpts& g) {
  if (!g.cache_dir) throw ParseError("cache validate needs --cache-dir");
  if (!std::filesystem::is_directory(*g.cache_dir)) {
    std::cout << "empty cache\n";
    return 0;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(*g.cache_dir))
    if (entry.path().extension() == ".wgt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    load_table(file);  // throws CacheCorrupt on any validation failure
    std::cout << file.filename().string() << " OK\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weingarten calculus and free-probability toolkit for "
               "the quantum orthogonal and unitary groups"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::string format_s = "plain";
  std::string cache_dir_s;
  app.add_option("--format", format_s, "Output format: json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--cache-dir", cache_dir_s,
                 "Weingarten table cache directory (or QROT_CACHE_DIR)");
  app.add_flag("--approx", g.approx,
               "Append a decimal rendering to exact plain-format values");

  std::string cls = "nc", dec, flavor = "orthogonal", lower, upper, model, word;
  int k = 0, max_degree = 4;
  long n = 2, n_min = 2, n_max = 10;

  auto* partitions = app.add_subcommand("partitions", "Enumerate partitions");
  partitions->add_option("--class", cls, "all, nc, nc2 or nc2d");
  partitions->add_option("--k", k, "Ground-set size");
  partitions->add_option("--d", dec, "Decoration, e.g. 1*1*");

  auto* mob = app.add_subcommand("mobius", "Mobius function on NC(k)");
  mob->add_option("--lower", lower, "Lower partition, e.g. {1}{2}")->required();
  mob->add_option("--upper", upper, "Upper partition, e.g. {1,2}")->required();

  auto* wg = app.add_subcommand("weingarten", "Weingarten table");
  wg->add_option("--flavor", flavor, "orthogonal or unitary");
  wg->add_option("--k", k, "Pairing half-degree (orthogonal)");
  wg->add_option("--d", dec, "Decoration (unitary)");
  wg->add_option("--n", n, "Dimension, n >= 2")->required();

  auto* haar = app.add_subcommand("haar", "Haar state of a generator monomial");
  haar->add_option("--flavor", flavor, "orthogonal or unitary");
  haar->add_option("--n", n, "Dimension, n >= 2")->required();
  haar->add_option("--word", word, "Monomial, e.g. \"1,1 1,2* 2,1\"")
      ->required();

  auto* mom = app.add_subcommand("moments", "Evaluate a model oracle");
  mom->add_option("--model", model, "Model selection string")->required();
  mom->add_option("--word", word, "Decorated index word, e.g. \"1 1* 2\"")
      ->required();

  auto* cum = app.add_subcommand("cumulants", "Free cumulant table over NC");
  cum->add_option("--model", model, "Model selection string")->required();
  cum->add_option("--word", word, "Decorated index word")->required();

  auto* verify = app.add_subcommand("verify", "Verification harnesses");
  verify->require_subcommand(1);
  auto* rot = verify->add_subcommand("rotatable", "Averaged invariance check");
  rot->add_option("--model", model, "Model selection string")->required();
  rot->add_option("--flavor", flavor, "orthogonal or unitary");
  rot->add_option("--n", n, "Dimension")->required();
  rot->add_option("--max-degree", max_degree, "Degree budget");
  auto* cex =
      verify->add_subcommand("counterexample", "Rotatable-but-not-free demo");
  cex->add_option("--n", n, "Dimension")->required();
  cex->add_option("--max-degree", max_degree, "Degree budget");
  auto* scan = verify->add_subcommand("bound-scan", "Deviation factor scan");
  scan->add_option("--flavor", flavor, "orthogonal or unitary");
  scan->add_option("--k", k, "Pairing half-degree (orthogonal)");
  scan->add_option("--d", dec, "Decoration (unitary)");
  scan->add_option("--n-min", n_min, "Smallest dimension");
  scan->add_option("--n-max", n_max, "Largest dimension");

  auto* cache = app.add_subcommand("cache", "Cache management");
  cache->require_subcommand(1);
  auto* validate =
      cache->add_subcommand("validate", "Validate every cached table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  g.format = format_s == "json" ? Format::Json
             : format_s == "csv" ? Format::Csv
                                 : Format::Plain;
  if (!cache_dir_s.empty()) {
    g.cache_dir = cache_dir_s;
  } else if (const char* env = std::getenv("QROT_CACHE_DIR")) {
    if (*env) g.cache_dir = env;
  }

  try {
    if (*partitions) return cmd_partitions(cls, k, dec);
    if (*mob) return cmd_mobius(lower, upper, g);
    if (*wg) return cmd_weingarten(flavor, k, dec, n, g);
    if (*haar) return cmd_haar(flavor, n, word, g);
    if (*mom) return cmd_moments(model, word, g);
    if (*cum) return cmd_cumulants(model, word, g);
    if (*rot) return cmd_verify_rotatable(model, flavor, n, max_degree);
    if (*cex) return cmd_verify_counterexample(n, max_degree);
    if (*scan) return cmd_verify_bound_scan(flavor, k, dec, n_min, n_max);
    if (*validate) return cmd_cache_validate(g);
  } catch (const CacheCorrupt& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
