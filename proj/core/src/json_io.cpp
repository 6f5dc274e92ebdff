#include "posmaps/json_io.hpp"

#include <string>

#include "posmaps/errors.hpp"

namespace posmaps {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
  return *it;
}

json complex_list(std::span<const cplx> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back({v.real(), v.imag()});
  return out;
}

json evidence_object(const std::vector<Evidence>& ev) {
  json out = json::object();
  for (const auto& e : ev) out[e.name] = e.value;
  return out;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = complex_list(m.data());
  return out;
}

CMatrix matrix_from_json(const json& j) {
  const auto& rows = field(j, "rows");
  const auto& cols = field(j, "cols");
  const auto& entries = field(j, "entries");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned()) {
    throw FormatError("matrix: 'rows' and 'cols' must be non-negative integers");
  }
  if (!entries.is_array()) throw FormatError("matrix: 'entries' must be an array");
  const auto r = rows.get<std::size_t>();
  const auto c = cols.get<std::size_t>();
  if (entries.size() != r * c) {
    throw FormatError("matrix: expected " + std::to_string(r * c) + " entries, got " +
                      std::to_string(entries.size()));
  }
  std::vector<cplx> data;
  data.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.is_number()) {
      data.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      data.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw FormatError("matrix: each entry must be [re, im]");
    }
  }
  return CMatrix(r, c, std::move(data));
}

MapParams map_params_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("map params: expected a JSON object");
  if (auto kind = j.find("map"); kind != j.end()) {
    if (!kind->is_string() || kind->get<std::string>() != "delta_n") {
      throw ParameterError("map: only \"delta_n\" is a recognised special map");
    }
    const auto& n = field(j, "n");
    if (!n.is_number_integer()) throw FormatError("n: must be an integer");
    return MapParams::delta_n(n.get<int>());
  }

  const auto& sigma_text = field(j, "sigma");
  if (!sigma_text.is_string()) throw FormatError("sigma: must be a string such as \"tau:3:2\"");
  auto sigma = Permutation::parse(sigma_text.get<std::string>());

  if (auto n = j.find("n"); n != j.end()) {
    if (!n->is_number_integer()) throw FormatError("n: must be an integer");
    if (n->get<int>() != sigma.degree()) {
      throw ParameterError("n: " + std::to_string(n->get<int>()) +
                           " does not match the degree of sigma (" +
                           std::to_string(sigma.degree()) + ")");
    }
  }
  const auto& a = field(j, "a");
  if (!a.is_number()) throw FormatError("a: must be a number");
  const auto& c = field(j, "c");
  if (!c.is_array()) throw FormatError("c: must be an array of numbers");
  std::vector<double> cs;
  for (const auto& v : c) {
    if (!v.is_number()) throw FormatError("c: must be an array of numbers");
    cs.push_back(v.get<double>());
  }
  return MapParams(std::move(sigma), a.get<double>(), std::move(cs));
}

json map_params_to_json(const MapParams& p) {
  json out;
  out["n"] = p.n();
  out["sigma_images"] = p.sigma().images();
  out["cycles"] = cycle_decompose(p.sigma()).to_string();
  const auto lengths = min_max_cycle_length(p.sigma());
  out["l_min"] = lengths.l_min;
  out["l_max"] = lengths.l_max;
  out["a"] = p.a();
  out["c"] = p.c();
  if (p.is_delta_n()) out["map"] = "delta_n";
  return out;
}

json to_json(const Verdict& v) {
  json out;
  out["status"] = to_string(v.status);
  out["certificate"] = v.certificate;
  out["basis"] = to_string(v.basis);
  out["numeric_evidence"] = evidence_object(v.evidence);
  out["tolerance"] = v.tolerance;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const PositivityEvidence& e) {
  json out;
  out["max_ratio"] = e.max_ratio;
  out["min_projection_image_eigenvalue"] = e.min_eigenvalue;
  out["random_samples"] = e.random_samples;
  out["adversarial_samples"] = e.adversarial_samples;
  out["tolerance"] = e.tolerance;
  out["consistent_with_positive"] = e.consistent_with_positive();
  out["worst_vector"] = complex_list(e.worst_vector);
  return out;
}

json to_json(const DecomposabilityCertificate& c) {
  json out;
  out["p_min_eigenvalue"] = c.p_min_eigenvalue;
  out["reconstruction_residual"] = c.reconstruction_residual;
  out["P"] = matrix_to_json(c.p);
  json blocks = json::array();
  for (const auto& b : c.q_blocks) {
    json q;
    q["pair"] = {b.i, b.j};
    q["gamma_min_eigenvalue"] = b.gamma_min_eigenvalue;
    q["Q"] = matrix_to_json(b.q);
    blocks.push_back(std::move(q));
  }
  out["Q"] = std::move(blocks);
  return out;
}

json to_json(const ClassificationReport& r) {
  json out;
  out["params"] = map_params_to_json(r.params);
  out["positivity_threshold"] = r.threshold;
  out["choi_min_eigenvalue"] = r.choi_min_eigenvalue;
  json verdicts;
  verdicts["positive"] = to_json(r.positive);
  verdicts["two_positive"] = to_json(r.two_positive);
  verdicts["completely_positive"] = to_json(r.completely_positive);
  verdicts["atomic"] = to_json(r.atomic);
  verdicts["decomposable"] = to_json(r.decomposable);
  out["verdicts"] = std::move(verdicts);
  out["positivity_evidence"] = to_json(r.positivity_evidence);
  if (r.decomposition) out["decomposability_certificate"] = to_json(*r.decomposition);
  return out;
}

json to_json(const SpaState& s, bool include_matrix) {
  json out;
  out["lambda_star"] = s.lambda_star;
  out["w_minus_norm"] = s.w_minus_norm;
  out["choi_minus_norm"] = s.choi_minus_norm;
  out["trace_choi"] = s.trace_choi;
  out["map_positive"] = s.map_positive;
  if (include_matrix) out["matrix"] = matrix_to_json(s.matrix);
  return out;
}

json to_json(const SeparableDecomposition& d) {
  json out;
  out["normalization"] = d.normalization;
  out["residual"] = d.residual;
  out["r_min_eigenvalue"] = d.r_min_eigenvalue;
  out["r_gamma_min_eigenvalue"] = d.r_gamma_min_eigenvalue;
  json terms = json::array();
  for (const auto& t : d.terms) {
    json term;
    term["kind"] = to_string(t.kind);
    term["i"] = t.i;
    term["j"] = t.j;
    term["weight"] = t.weight;
    if (t.kind == TermKind::sigma_ij) {
      term["min_eigenvalue"] = t.min_eigenvalue;
      term["gamma_min_eigenvalue"] = t.gamma_min_eigenvalue;
      term["factorization_residual"] = t.factorization_residual;
    }
    term["matrix"] = matrix_to_json(t.matrix);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

json to_json(const ProductVector& z) {
  json out;
  out["kind"] = to_string(z.kind);
  if (z.kind == GeneratorKind::phase) {
    out["theta"] = z.theta;
  } else {
    out["i"] = z.i;
    out["j"] = z.j;
  }
  out["first"] = complex_list(z.first);
  out["second"] = complex_list(z.second);
  return out;
}

json to_json(const OptimalityCertificate& c) {
  json out;
  out["verdict"] = to_json(c.verdict);
  out["optimal"] = c.optimal;
  out["theorem_applies"] = c.theorem_applies;
  out["span_rank"] = c.span_rank;
  out["dimension"] = c.dimension;
  out["rejected_generators"] = c.rejected_generators;
  if (!c.warning.empty()) out["warning"] = c.warning;
  json gens = json::array();
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    json z = to_json(c.generators[g]);
    z["expectation_abs"] = c.expectations[g];
    gens.push_back(std::move(z));
  }
  out["generators"] = std::move(gens);
  return out;
}

}  // namespace posmaps
