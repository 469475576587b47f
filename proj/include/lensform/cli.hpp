#pragma once

// Command layer behind tools/lensform.cpp. Every command returns an output
// document (command, inputs, results, version) with a fixed key order, so the
// serialized form is byte-stable.

#include "lensform/counting.hpp"
#include "lensform/harmonic_oracle.hpp"
#include "lensform/isospectral.hpp"
#include "lensform/lattice.hpp"
#include "lensform/lens.hpp"
#include "lensform/spectrum.hpp"
#include "lensform/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lensform::cli {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Input validation failure (bad literal, guard exceeded). Maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Report file could not be written. Maps to exit code 3.
class OutputError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::int64_t max_q = 500;
  std::size_t max_n = 4;
  std::int64_t k_factor = 10;  // k_max <= k_factor * q
  std::size_t max_representatives = 100000;
  bool unsafe = false;

  void check_lens(const LensSpace& lens) const {
    if (unsafe) return;
    if (lens.q() > max_q) throw UsageError("q=" + std::to_string(lens.q()) + " exceeds limit " + std::to_string(max_q));
    if (lens.n() > max_n) throw UsageError("n=" + std::to_string(lens.n()) + " exceeds limit " + std::to_string(max_n));
  }
  void check_k(const LensSpace& lens, std::int64_t k, std::int64_t floor = 0) const {
    if (k < 0) throw UsageError("--max-k must be nonnegative");
    if (unsafe) return;
    const std::int64_t bound = std::max(k_factor * lens.q(), floor);
    if (k > bound) throw UsageError("k=" + std::to_string(k) + " exceeds limit " + std::to_string(bound));
  }
};

inline LensSpace parse_literal(const std::string& text) {
  try {
    return parse_lens(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const Error& e) {
    throw UsageError(std::string(e.what()) + " in '" + text + "'");
  }
}

inline Json lens_json(const LensSpace& lens) {
  Json j;
  j["literal"] = lens.literal();
  j["q"] = lens.q();
  j["p"] = lens.p();
  return j;
}

inline Json rational_vector(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

inline Json integer_vector(const std::vector<Integer>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.convert_to<std::int64_t>());
  return arr;
}

inline Json quasipoly_json(const QuasiPolynomial& qp) {
  Json j;
  j["period"] = qp.period();
  j["degree"] = qp.degree();
  Json rows = Json::array();
  for (const auto& c : qp.coeffs()) rows.push_back(rational_vector(c));
  j["coeffs"] = std::move(rows);
  return j;
}

inline Json document(const std::string& command, Json inputs, Json results) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  doc["version"] = kVersion;
  return doc;
}

inline Json cmd_spectrum(const LensSpace& lens, std::int64_t k_max, const Limits& limits = {}) {
  limits.check_lens(lens);
  limits.check_k(lens, k_max);
  if (!lens.spectral()) throw UsageError("spectrum needs n >= 2");
  const SpectrumTable table = spectrum_table(lens, k_max);
  Json rows = Json::array();
  for (const auto& e : table.entries) rows.push_back(Json::array({e.k, e.lambda, e.mult}));
  Json inputs;
  inputs["lens"] = lens_json(lens);
  inputs["max_k"] = k_max;
  Json results;
  results["columns"] = Json::array({"k", "lambda", "mult"});
  results["rows"] = std::move(rows);
  return document("spectrum", std::move(inputs), std::move(results));
}

inline Json cmd_isospectral(const LensSpace& a, const LensSpace& b, const Limits& limits = {}) {
  limits.check_lens(a);
  limits.check_lens(b);
  const IsospectralityReport rep = isospectral_test(a, b);
  const auto iso = isometric(a, b);

  Json results;
  results["verdict"] = to_string(rep.verdict);
  if (rep.witness_k) {
    Json w;
    w["k"] = *rep.witness_k;
    w["shell_a"] = rep.witness_values.first;
    w["shell_b"] = rep.witness_values.second;
    results["witness"] = std::move(w);
  } else {
    results["witness"] = nullptr;
  }
  results["isometric"] = iso.has_value();
  if (iso) {
    Json w;
    w["t"] = iso->t;
    Json sigma = Json::array();
    for (auto s : iso->sigma) sigma.push_back(s + 1);
    w["sigma"] = std::move(sigma);
    w["eps"] = iso->eps;
    results["isometry"] = std::move(w);
  } else {
    results["isometry"] = nullptr;
  }
  results["stanley_match"] = rep.stanley_match;
  results["stanley_agrees_with_verdict"] = rep.stanley_match == (rep.verdict == Verdict::Isospectral);
  if (rep.certificate) {
    Json cert;
    cert["samples"] = determination_bound(a.q(), a.n());
    cert["a"] = quasipoly_json(rep.certificate->first);
    cert["b"] = quasipoly_json(rep.certificate->second);
    results["certificate"] = std::move(cert);
  } else {
    results["certificate"] = nullptr;
  }
  Json inputs;
  inputs["a"] = lens_json(a);
  inputs["b"] = lens_json(b);
  return document("isospectral", std::move(inputs), std::move(results));
}

inline std::string join(const std::vector<std::int64_t>& v, char sep, std::size_t limit = SIZE_MAX) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

/// FNV-1a over the decimal rendering of the shell vector.
inline std::string shell_hash(const std::vector<std::int64_t>& v) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : join(v, ';')) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

struct SearchResult {
  Json document;
  std::string csv;
};

inline SearchResult cmd_search(std::int64_t q, std::size_t n, const Limits& limits = {}) {
  if (q < 1) throw UsageError("--q must be positive");
  if (n < 2) throw UsageError("--n must be at least 2");
  if (!limits.unsafe && q > limits.max_q) throw UsageError("q exceeds limit " + std::to_string(limits.max_q));
  if (!limits.unsafe && n > limits.max_n) throw UsageError("n exceeds limit " + std::to_string(limits.max_n));
  SearchOptions opts;
  if (!limits.unsafe) opts.max_representatives = limits.max_representatives;
  std::vector<IsospectralClass> classes;
  try {
    classes = search_pairs(q, n, opts);
  } catch (const TooLarge& e) {
    throw UsageError(std::string("search space too large: ") + e.what());
  }

  std::string csv = "bucket_id,q,n,p_canonical,shell_vector_prefix\n";
  Json buckets = Json::array();
  for (std::size_t id = 0; id < classes.size(); ++id) {
    const auto& cls = classes[id];
    const std::string prefix = join(cls.shell_vector, ';', static_cast<std::size_t>(2 * q));
    Json members = Json::array();
    for (const auto& m : cls.members) {
      members.push_back(m.literal());
      csv += std::to_string(id) + "," + std::to_string(q) + "," + std::to_string(n) + "," + join(m.p(), ';') + "," +
             prefix + "\n";
    }
    Json b;
    b["bucket_id"] = id;
    b["members"] = std::move(members);
    b["shell_hash"] = shell_hash(cls.shell_vector);
    b["shell_vector_prefix"] = prefix;
    buckets.push_back(std::move(b));
  }
  Json inputs;
  inputs["q"] = q;
  inputs["n"] = n;
  Json results;
  results["representatives"] = canonical_representatives(q, n).size();
  results["samples"] = determination_bound(q, n);
  results["bucket_count"] = classes.size();
  results["buckets"] = std::move(buckets);
  return {document("search", std::move(inputs), std::move(results)), std::move(csv)};
}

inline std::int64_t default_invariants_k(const LensSpace& lens) {
  return std::max<std::int64_t>(2 * static_cast<std::int64_t>(lens.n()), std::min<std::int64_t>(40, 10 * lens.q()));
}

inline Json cmd_invariants(const LensSpace& lens, std::int64_t k_max, const Limits& limits = {}) {
  limits.check_lens(lens);
  limits.check_k(lens, k_max, 2 * static_cast<std::int64_t>(lens.n()));
  if (k_max < 2 * static_cast<std::int64_t>(lens.n())) throw UsageError("--max-k must be at least 2n");
  const CongruenceLattice lat = build_lattice(lens);
  const StanleyData sd = stanley_data(lat);
  const SeriesReport rep = verify_series(lat, k_max);

  Json basis = Json::array();
  for (std::size_t c = 0; c < lat.n(); ++c) basis.push_back(integer_vector(lat.basis().column(c)));
  Json dual = Json::array();
  for (const auto& u : sd.dual.u) dual.push_back(rational_vector(u));
  Json gammas = Json::array();
  for (const auto& g : sd.gammas) gammas.push_back(integer_vector(g));
  Json points = Json::array();
  for (const auto& pt : sd.points) {
    Json p;
    p["x"] = integer_vector(pt.x);
    p["r"] = pt.height.convert_to<std::int64_t>();
    p["coeffs"] = rational_vector(pt.coeffs);
    points.push_back(std::move(p));
  }
  Json series;
  series["k_max"] = rep.k_max;
  series["series"] = integer_vector(rep.series);
  series["ball"] = rep.ball;
  series["simplex"] = rep.simplex;
  series["first_ball_mismatch"] = rep.first_ball_mismatch ? Json(*rep.first_ball_mismatch) : Json(nullptr);
  series["first_simplex_mismatch"] = rep.first_simplex_mismatch ? Json(*rep.first_simplex_mismatch) : Json(nullptr);

  Json results;
  results["basis_columns"] = std::move(basis);
  results["smith"] = integer_vector(smith_invariants(lat));
  results["dual"] = std::move(dual);
  results["l"] = sd.dual.l;
  results["gammas"] = std::move(gammas);
  results["s"] = sd.s.convert_to<std::int64_t>();
  results["points"] = std::move(points);
  results["verify_series"] = std::move(series);
  Json inputs;
  inputs["lens"] = lens_json(lens);
  inputs["max_k"] = k_max;
  return document("invariants", std::move(inputs), std::move(results));
}

inline Json cmd_toric(const LensSpace& lens, std::int64_t k_max, const Limits& limits = {}) {
  limits.check_lens(lens);
  limits.check_k(lens, k_max);
  if (k_max < 1) throw UsageError("--max-k must be at least 1");
  if (!lens.spectral()) throw UsageError("toric needs n >= 2");
  const LensPolytope poly = lens_polytope(lens);
  Json vertices = Json::array();
  for (const auto& v : poly.vertices) vertices.push_back(integer_vector(v));
  Json results;
  results["vertices"] = std::move(vertices);
  results["dilate_factor"] = poly.dilate_factor;
  results["h0"] = h0_dims(lens, k_max);
  results["fundamental_volume"] = fundamental_volume(lens);
  results["ehrhart_qP"] = rational_vector(ehrhart_polynomial_of_qP(lens));
  results["boundary_invariant"] = to_string(boundary_invariant(lens));
  results["degree"] = toric_degree(lens).convert_to<std::int64_t>();
  Json inputs;
  inputs["lens"] = lens_json(lens);
  inputs["max_k"] = k_max;
  return document("toric", std::move(inputs), std::move(results));
}

inline Json cmd_oracle(const LensSpace& lens, std::int64_t k, const Limits& limits = {}) {
  limits.check_lens(lens);
  limits.check_k(lens, k);
  if (!lens.spectral()) throw UsageError("oracle needs n >= 2");
  OracleResult res;
  try {
    res = solve_oracle(lens, static_cast<int>(k));
  } catch (const TooLarge& e) {
    throw UsageError(e.what());
  }
  const std::int64_t formula = multiplicity(lens, k);
  Json results;
  results["k"] = k;
  results["lambda"] = eigenvalue(lens.n(), k);
  results["basis_size"] = res.basis_size;
  results["target_size"] = res.target_size;
  results["rank"] = res.rank;
  results["dimension"] = res.dimension;
  results["formula_mult"] = formula;
  results["agree"] = static_cast<std::int64_t>(res.dimension) == formula;
  Json inputs;
  inputs["lens"] = lens_json(lens);
  inputs["k"] = k;
  return document("oracle", std::move(inputs), std::move(results));
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Tabular commands (spectrum) emit their rows; everything else is flattened
/// into key,value pairs.
inline std::string render_csv(const Json& doc) {
  std::string out;
  const Json& results = doc.at("results");
  if (results.contains("columns") && results.contains("rows")) {
    std::vector<std::string> header;
    for (const auto& c : results["columns"]) header.push_back(c.get<std::string>());
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : results["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::scalar_text(row[i]);
      out += "\n";
    }
    return out;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  detail::flatten(results, "", kv);
  out = "key,value\n";
  for (const auto& [k, v] : kv) out += detail::csv_escape(k) + "," + detail::csv_escape(v) + "\n";
  return out;
}

inline std::string render_plain(const Json& doc) {
  std::string out = doc.at("command").get<std::string>() + " (lensform " + kVersion + ")\n";
  const Json& results = doc.at("results");
  if (results.contains("columns") && results.contains("rows")) {
    for (const auto& c : results["columns"]) out += c.get<std::string>() + "\t";
    out.back() = '\n';
    for (const auto& row : results["rows"]) {
      for (const auto& v : row) out += detail::scalar_text(v) + "\t";
      out.back() = '\n';
    }
    return out;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  detail::flatten(results, "", kv);
  for (const auto& [k, v] : kv) out += k + ": " + v + "\n";
  return out;
}

inline std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return render_csv(doc);
  if (format == "plain") return render_plain(doc);
  throw UsageError("unknown format '" + format + "'");
}

inline void write_report(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw OutputError("failed writing '" + path + "'");
}

}  // namespace lensform::cli
