#include "starlat/json_io.hpp"

#include <limits>
#include <utility>

#include "json.hpp"
#include "starlat/errors.hpp"

namespace starlat {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not a decimal integer: " + v.dump());
    }
  }
  throw ParseError("expected an integer or decimal string, got " + v.dump());
}

json int_to_json_number(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x < lo || x > hi) return x.str();
  return x.convert_to<long long>();
}

json poly_strings(const IntPolynomial& p) {
  json arr = json::array();
  if (p.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (const Int& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

json series_strings(const TruncatedSeries& s) {
  json arr = json::array();
  for (std::size_t k = 0; k <= s.order(); ++k) {
    const Rat& c = s.coeff(k);
    if (!is_integral(c))
      throw NonIntegralCoefficient("series coefficient at t^" + std::to_string(k) +
                                   " is not an integer: " + c.str());
    arr.push_back(numerator(c).str());
  }
  return arr;
}

json lattice_object(const Lattice& l) {
  json j;
  j["labels"] = l.labels();
  json rows = json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < l.rank(); ++k) row.push_back(int_to_json_number(l.gram().at(i, k)));
    rows.push_back(std::move(row));
  }
  j["gram"] = std::move(rows);
  return j;
}

Lattice lattice_from_object(const json& j) {
  if (!j.is_object() || !j.contains("gram")) throw ParseError("lattice object needs a gram key");
  const json& rows = j.at("gram");
  if (!rows.is_array()) throw ParseError("gram must be an array of rows");
  const std::size_t n = rows.size();
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InvalidLattice("gram row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < n; ++k) gram.at(i, k) = int_from_json(rows[i][k]);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const json& v : j.at("labels")) labels.push_back(v.get<std::string>());
    return Lattice(std::move(gram), std::move(labels));
  }
  return Lattice(std::move(gram));
}

}  // namespace

std::string lattice_to_json(const Lattice& l) { return lattice_object(l).dump(); }

Lattice lattice_from_json(const std::string& text) { return lattice_from_object(parse(text)); }

std::string basis_to_json(const AlmostRootBasis& basis) {
  json j = lattice_object(basis.vminus());
  json roots = json::array();
  for (std::size_t i = 0; i + 1 < basis.rank(); ++i) roots.push_back(i);
  j["roots"] = std::move(roots);
  j["e"] = basis.e_index();
  return j.dump();
}

AlmostRootBasis basis_from_json(const std::string& text) {
  json j = parse(text);
  if (j.is_object() && j.contains("vminus")) j = j.at("vminus");
  const Lattice raw = lattice_from_object(j);
  if (!j.contains("roots") || !j.contains("e"))
    throw ParseError("almost-root basis needs roots and e keys");

  const std::size_t n = raw.rank();
  std::vector<std::size_t> order;
  for (const json& v : j.at("roots")) {
    const Int idx = int_from_json(v);
    if (idx < 0 || idx >= Int(n)) throw ParseError("root index out of range: " + idx.str());
    order.push_back(idx.convert_to<std::size_t>());
  }
  const Int e_raw = int_from_json(j.at("e"));
  if (e_raw < 0 || e_raw >= Int(n)) throw ParseError("e index out of range: " + e_raw.str());
  order.push_back(e_raw.convert_to<std::size_t>());

  if (order.size() != n) throw ParseError("roots plus e must cover every basis index once");
  std::vector<bool> seen(n, false);
  for (std::size_t idx : order) {
    if (seen[idx]) throw ParseError("duplicate basis index " + std::to_string(idx));
    seen[idx] = true;
  }

  IntMatrix gram(n, n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = raw.labels()[order[i]];
    for (std::size_t k = 0; k < n; ++k) gram.at(i, k) = raw.gram().at(order[i], order[k]);
  }
  return AlmostRootBasis(Lattice(std::move(gram), std::move(labels)));
}

std::string series_to_json(const TruncatedSeries& s) {
  json j;
  j["order"] = s.order();
  j["coeffs"] = series_strings(s);
  return j.dump();
}

std::string report_to_json(const FuchsianReport& report) {
  json j;
  json input;
  input["g"] = std::to_string(report.input.genus);
  json alphas = json::array();
  for (long long a : report.input.alphas) alphas.push_back(std::to_string(a));
  input["alpha"] = std::move(alphas);
  j["input"] = std::move(input);

  j["valid"] = report.valid;
  j["smoothable_hint"] = report.smoothable_hint;

  json ranks;
  ranks["vminus"] = std::to_string(report.rank_vminus);
  ranks["v0"] = std::to_string(report.rank_v0);
  ranks["vplus"] = std::to_string(report.rank_vplus);
  j["ranks"] = std::move(ranks);

  j["delta0"] = poly_strings(report.delta0);
  j["delta_plus"] = poly_strings(report.delta_plus);

  json psi;
  psi["num"] = poly_strings(report.psi_a.num());
  psi["den"] = poly_strings(report.psi_a.den());
  j["psi_a"] = std::move(psi);

  json series;
  series["order"] = std::to_string(report.order);
  series["theorem"] =
      report.theorem_series.has_value() ? series_strings(*report.theorem_series) : json(nullptr);
  series["orbit"] = series_strings(report.orbit_series);
  series["direct"] =
      report.direct_series.has_value() ? series_strings(*report.direct_series) : json(nullptr);
  j["series"] = std::move(series);

  json checks;
  checks["series_agree"] =
      report.series_agree.has_value() ? json(*report.series_agree) : json(nullptr);
  checks["orbit_pairing"] = report.orbit_pairing;
  checks["radical_is_u"] = report.radical_is_u;
  checks["psi_eq_delta0_g0"] =
      report.psi_eq_delta0.has_value() ? json(*report.psi_eq_delta0) : json(nullptr);
  j["checks"] = std::move(checks);

  return j.dump();
}

}  // namespace starlat
