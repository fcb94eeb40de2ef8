#include "qrot/json_io.hpp"

namespace qrot {

Json to_json(const CumulantTable& table) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < table.index.size(); ++i) {
    arr.push_back({{"partition", to_string(table.index[i])},
                   {"value", to_fraction_string(table.values[i])}});
  }
  return arr;
}

Json to_json(const WeingartenTable& table) {
  Json index = Json::array();
  for (const auto& p : table.index) index.push_back(to_string(p));
  Json wg = Json::array();
  for (std::size_t i = 0; i < table.index.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < table.index.size(); ++j)
      row.push_back(to_fraction_string(table.wg(i, j)));
    wg.push_back(std::move(row));
  }
  Json out;
  out["flavor"] = to_string(table.key.flavor);
  if (table.key.flavor == Flavor::Orthogonal)
    out["k"] = table.key.k;
  else
    out["d"] = decoration_to_string(table.key.d);
  out["n"] = table.n;
  out["index"] = std::move(index);
  out["wg"] = std::move(wg);
  return out;
}

Json to_json(const InvarianceReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json e;
    e["cols"] = f.cols;
    if (report.flavor == Flavor::Unitary)
      e["decoration"] = decoration_to_string(f.decoration);
    e["lhs"] = to_fraction_string(f.lhs);
    e["rhs"] = to_fraction_string(f.rhs);
    failures.push_back(std::move(e));
  }
  Json out;
  out["model"] = report.model;
  out["flavor"] = to_string(report.flavor);
  out["n"] = report.n;
  out["max_degree"] = report.max_degree;
  out["checked"] = report.checked;
  out["failures"] = std::move(failures);
  out["verdict"] = report.pass() ? "PASS" : "FAIL";
  return out;
}

Json to_json(const BoundScan& scan) {
  Json samples = Json::array();
  for (const auto& s : scan.samples) {
    samples.push_back({{"n", s.n},
                       {"delta", to_fraction_string(s.delta)},
                       {"n_delta", to_fraction_string(s.n_times_delta)}});
  }
  Json out;
  out["flavor"] = to_string(scan.flavor);
  if (scan.flavor == Flavor::Orthogonal)
    out["k"] = scan.key.k;
  else
    out["d"] = decoration_to_string(scan.key.d);
  out["samples"] = std::move(samples);
  out["d_estimate"] = to_fraction_string(scan.d_estimate);
  out["argmax_n"] = scan.argmax_n;
  out["is_lower_bound"] = true;
  return out;
}

Json to_json(const CounterexampleReport& report) {
  Json out;
  out["n"] = report.n;
  out["psi_x1_sq"] = to_fraction_string(report.psi_x1_sq);
  out["expected_x1_sq"] = to_fraction_string(Rational(1, report.n));
  out["sum_psi_xi2_xj2"] = to_fraction_string(report.sum_psi_sq_sq);
  out["psi_x1_4"] = to_fraction_string(report.psi_x1_4);
  out["free_prediction"] = to_fraction_string(report.free_prediction);
  out["verdict"] = report.not_free ? "NOT-FREE" : "FREE";
  out["rotatable"] = to_json(report.rotatable);
  return out;
}

}  // namespace qrot
