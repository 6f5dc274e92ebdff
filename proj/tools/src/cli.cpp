#include "posmaps_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "posmaps/classify.hpp"
#include "posmaps/dtype.hpp"
#include "posmaps/errors.hpp"
#include "posmaps/json_io.hpp"
#include "posmaps/spa.hpp"
#include "posmaps/version.hpp"
#include "posmaps/witness.hpp"

namespace posmaps::cli {

namespace {

const std::map<std::string, std::string>& statements() {
  static const std::map<std::string, std::string> table = {
      {"positivity-threshold",
       "a >= max(n-1, n - (c_1 c_2 ... c_n)^(1/n)) implies Theta is positive, for every sigma"},
      {"positivity-threshold-sharp",
       "sigma is a single n-cycle, so a >= max(n-1, n - (c_1 ... c_n)^(1/n)) is also necessary "
       "for positivity"},
      {"uniform-c-positivity",
       "with c_i = c and a = n - c, Theta is positive exactly when c <= n / l_max(sigma)"},
      {"cp-iff-a-ge-n",
       "sigma has no fixed points: Theta is completely positive iff 2-positive iff a >= n"},
      {"schur-multiplier",
       "sigma = id: Theta(X) = A o X with A_ii = a + c_i - 1, A_ij = -1; positivity, "
       "2-positivity and complete positivity all reduce to A >= 0"},
      {"delta-n-schur-multiplier",
       "X -> n diag(X) - X is the Schur multiplier nI - J >= 0, hence completely positive"},
      {"choi-psd-numeric",
       "no criterion covers this cycle type; complete positivity read off the Choi spectrum"},
      {"cp-implies-positive", "completely positive maps are positive"},
      {"cp-implies-2-positive", "completely positive maps are 2-positive"},
      {"cp-implies-decomposable", "a completely positive map is trivially decomposable"},
      {"decomposable-involution",
       "sigma^2 = id, a >= n-1, c_i >= 1 on fixed points and c_i c_sigma(i) >= 1 on 2-cycles: "
       "C = P + sum Q_i with P >= 0 and each Q_i^Gamma >= 0"},
      {"atomic-positive-not-cp",
       "l_min(sigma) >= 3 and Theta positive but not completely positive imply Theta is atomic"},
      {"atomic-uniform-c",
       "l_min(sigma) >= 3 and 0 < c <= n / l_max(sigma) imply Theta[n-c; c, ..., c] is atomic"},
      {"uniform-c-zero-is-cp", "c = 0 gives X -> n diag(X) - X, which is completely positive"},
      {"not-positive", "the property fails because Theta is not positive"},
      {"none", "no available criterion decides this property; see numeric evidence"},
      {"witness-optimal-uniform-c",
       "l_min(sigma) >= 3 and 0 < c <= n / l_max(sigma): the witness of T o Theta[n-c; c, ..., c] "
       "is optimal"},
      {"delta-n-witness-optimal",
       "X -> n diag(X) - X is decomposable and the witness of its transpose composition is optimal"},
      {"spanning-property-numeric",
       "product vectors annihilated by W span C^n (x) C^n, which suffices for optimality; "
       "verified numerically outside the proven parameter range"},
      {"choi-spectrum-closed-form",
       "l_min(sigma) >= 2: Choi spectrum is {0^(n^2-2n), a^(n-1), a-n, c_1, ..., c_n}"},
      {"spa-formula",
       "SPA = (||C-|| I (x) I + C) / (Tr C + n^2 ||C-||), lambda* = 1 / (1 + n^2 ||W-||)"},
      {"spa-separable",
       "a = n-1, l_min(sigma) >= 2 and Theta positive: I (x) I + C is a sum of sigma_ij terms "
       "(each PPT on C^2 (x) C^2) and diagonal product terms, so the SPA is separable"},
  };
  return table;
}

json certificate_entry(const std::string& id) {
  json out;
  out["certificate"] = id;
  auto it = statements().find(id);
  out["statement"] = it == statements().end() ? std::string("unrecognised certificate") : it->second;
  return out;
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json read_json_file(const std::string& path, const std::string& field_name) {
  if (path.empty()) throw FormatError(field_name + ": no file given");
  std::ifstream in(path);
  if (!in) throw FormatError(field_name + ": cannot read file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(field_name + ": invalid JSON in '" + path + "': " + e.what());
  }
}

MapParams parse_map(const json& doc) {
  try {
    return map_params_from_json(doc);
  } catch (const json::exception& e) {
    throw FormatError(std::string("map: ") + e.what());
  }
}

json options_json(const RunConfig& c) {
  json out;
  out["tol"] = c.tol;
  out["seed"] = c.seed;
  switch (c.subcommand) {
    case Subcommand::classify:
      out["samples"] = c.samples;
      break;
    case Subcommand::spa:
      out["decompose"] = c.decompose;
      break;
    case Subcommand::witness:
      out["certify"] = c.certify;
      break;
    default:
      break;
  }
  return out;
}

json spectrum_json(const MapParams& p, bool transposed) {
  const auto ch = choi(p, transposed);
  const auto spec = hermitian_spectrum(ch.matrix);
  json out;
  out["transposed_composition"] = transposed;
  out["trace"] = ch.matrix.trace().real();
  out["eigenvalues"] = spec.eigenvalues;
  out["residual"] = spec.residual;
  out["negative_part_norm"] = negative_part(ch.matrix).norm;
  return out;
}

// Closed-form Choi spectrum, valid when sigma has no fixed points.
std::vector<double> closed_form_spectrum(const MapParams& p) {
  const int n = p.n();
  std::vector<double> ev(static_cast<std::size_t>(n * n - 2 * n), 0.0);
  for (int i = 0; i < n - 1; ++i) ev.push_back(p.a());
  ev.push_back(p.a() - n);
  for (double c : p.c()) ev.push_back(c);
  std::sort(ev.begin(), ev.end());
  return ev;
}

struct Outcome {
  json result;
  json certificates = json::object();
};

Outcome do_classify(const MapParams& p, const RunConfig& cfg) {
  ClassifyOptions opts;
  opts.samples = cfg.samples;
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;
  const auto report = classify(p, opts);
  Outcome o;
  o.result = to_json(report);
  o.certificates["positive"] = certificate_entry(report.positive.certificate);
  o.certificates["two_positive"] = certificate_entry(report.two_positive.certificate);
  o.certificates["completely_positive"] = certificate_entry(report.completely_positive.certificate);
  o.certificates["atomic"] = certificate_entry(report.atomic.certificate);
  o.certificates["decomposable"] = certificate_entry(report.decomposable.certificate);
  return o;
}

Outcome do_spectrum(const MapParams& p) {
  Outcome o;
  o.result["choi"] = spectrum_json(p, false);
  o.result["choi_transpose_composed"] = spectrum_json(p, true);
  if (min_max_cycle_length(p.sigma()).l_min >= 2) {
    const auto expected = closed_form_spectrum(p);
    const auto got = hermitian_spectrum(choi(p).matrix).eigenvalues;
    double dev = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) dev = std::max(dev, std::abs(got[k] - expected[k]));
    o.result["closed_form"] = {{"eigenvalues", expected}, {"max_deviation", dev}};
    o.certificates["closed_form"] = certificate_entry("choi-spectrum-closed-form");
  }
  return o;
}

Outcome do_decompose(const MapParams& p, const RunConfig& cfg) {
  Outcome o;
  o.result = to_json(decompose_involution(p, cfg.tol));
  o.certificates["decomposable"] = certificate_entry("decomposable-involution");
  return o;
}

Outcome do_spa(const MapParams& p, const RunConfig& cfg) {
  Outcome o;
  const auto state = spa_state(p);
  o.result["spa"] = to_json(state);
  const auto pos = positivity_verdict(p, cfg.tol);
  o.result["positive"] = to_json(pos);
  if (pos.status != Status::yes) {
    o.result["warning"] = "Theta is not known to be positive; the SPA formula is still evaluated";
  }
  o.certificates["spa"] = certificate_entry("spa-formula");
  o.certificates["positive"] = certificate_entry(pos.certificate);
  if (cfg.decompose) {
    o.result["separable_decomposition"] = to_json(separable_decomposition(p));
    o.certificates["separable_decomposition"] = certificate_entry("spa-separable");
  }
  return o;
}

Outcome do_witness(const MapParams& p, const RunConfig& cfg, const json* state_doc) {
  Outcome o;
  const auto w = witness(p);
  json wj;
  wj["trace"] = w.trace().real();
  wj["min_eigenvalue"] = min_eigenvalue(w);
  wj["matrix"] = matrix_to_json(w);
  o.result["witness"] = std::move(wj);

  if (cfg.certify) {
    const auto cert = certify_optimality(p, default_phase_budget(p.n()), cfg.seed);
    o.result["optimality"] = to_json(cert);
    o.certificates["optimal"] = certificate_entry(cert.verdict.certificate);
  }
  if (state_doc != nullptr) {
    CMatrix rho;
    try {
      rho = matrix_from_json(*state_doc);
    } catch (const FormatError& e) {
      throw FormatError(std::string("state: ") + e.what());
    }
    const auto dim = static_cast<std::size_t>(p.n() * p.n());
    if (rho.rows() != dim || rho.cols() != dim) {
      throw PreconditionError("state: expected a " + std::to_string(dim) + "x" +
                              std::to_string(dim) + " matrix, got " + std::to_string(rho.rows()) +
                              "x" + std::to_string(rho.cols()));
    }
    if (!is_hermitian(rho, 1e-9)) throw PreconditionError("state: matrix is not Hermitian");
    json sj;
    sj["expectation"] = witness_expectation(w, rho);
    sj["trace"] = rho.trace().real();
    sj["min_eigenvalue"] = min_eigenvalue(rho);
    sj["detected"] = sj["expectation"].get<double>() < -cfg.tol;
    o.result["state"] = std::move(sj);
  }
  return o;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw FormatError("out: cannot write file '" + cfg.out_path + "'");
  out << text;
  if (!out) throw FormatError("out: write to '" + cfg.out_path + "' failed");
}

}  // namespace

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::classify: return "classify";
    case Subcommand::spectrum: return "spectrum";
    case Subcommand::decompose: return "decompose";
    case Subcommand::spa: return "spa";
    case Subcommand::witness: return "witness";
  }
  return "?";
}

std::string render_report(const RunConfig& cfg) {
  if (cfg.samples < 1) {
    throw ParameterError("samples: must be at least 1, got " + std::to_string(cfg.samples));
  }
  if (!(cfg.tol >= 0.0)) throw ParameterError("tol: must be non-negative");

  const json map_doc = read_json_file(cfg.map_path, "map");
  const MapParams p = parse_map(map_doc);
  json state_doc;
  if (cfg.state_path) state_doc = read_json_file(*cfg.state_path, "state");

  Outcome o;
  switch (cfg.subcommand) {
    case Subcommand::classify: o = do_classify(p, cfg); break;
    case Subcommand::spectrum: o = do_spectrum(p); break;
    case Subcommand::decompose: o = do_decompose(p, cfg); break;
    case Subcommand::spa: o = do_spa(p, cfg); break;
    case Subcommand::witness:
      o = do_witness(p, cfg, cfg.state_path ? &state_doc : nullptr);
      break;
  }

  json report;
  report["tool"] = "posmaps";
  report["version"] = kVersion;
  report["command"] = to_string(cfg.subcommand);
  report[kTimestampField] = iso8601_now();
  json input;
  input["map"] = map_doc;
  if (cfg.state_path) input["state"] = state_doc;
  input["options"] = options_json(cfg);
  report["input"] = std::move(input);
  report["result"] = std::move(o.result);
  report["paper_certificates"] = std::move(o.certificates);
  return report.dump(2) + "\n";
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    write_output(cfg, render_report(cfg));
    return kOk;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace posmaps::cli
