// Command-line front end: instance I/O, solver invocation, seeded round-trip
// experiments, machine-readable reports.
//
// Every command prints one structured JSON report on stdout:
//   { "command", "inputs_digest", "outputs", "verification", "wall_time_ms" }
// The verification block lists each runtime check as
//   { "name", "value", "tolerance", "pass" }  with pass <=> value <= tolerance.
// Exit codes: 0 success, 1 validation error, 2 numerical degeneracy,
// 3 failed internal verification.

#include <cxxabi.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <typeinfo>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmvkit/errors.hpp"
#include "cmvkit/interlace.hpp"
#include "cmvkit/inverse.hpp"
#include "cmvkit/io.hpp"
#include "cmvkit/oracle.hpp"
#include "cmvkit/random_gen.hpp"
#include "cmvkit/spectral.hpp"
#include "cmvkit/truncation.hpp"
#include "cmvkit/verblunsky.hpp"

using cmv::Complex;
using cmv::Json;

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass;
};

class Report {
 public:
  Report(std::string command, const std::string& digest_payload)
      : command_(std::move(command)),
        digest_("fnv1a:" + hex64(fnv1a64(digest_payload))),
        start_(std::chrono::steady_clock::now()) {}

  Json& outputs() { return outputs_; }

  void check(const std::string& name, double value, double tolerance) {
    checks_.push_back({name, value, tolerance, value <= tolerance});
  }
  // Predicate checks count violations against a zero budget.
  void require(const std::string& name, bool ok) {
    checks_.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
  }

  int finish(bool verbose) const {
    Json rep;
    rep["command"] = command_;
    rep["inputs_digest"] = digest_;
    rep["outputs"] = outputs_;
    Json checks = Json::array();
    bool all_pass = true;
    for (const Check& c : checks_) {
      checks.push_back(Json{{"name", c.name},
                            {"value", c.value},
                            {"tolerance", c.tolerance},
                            {"pass", c.pass}});
      all_pass = all_pass && c.pass;
    }
    rep["verification"] = checks;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    rep["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    std::cout << rep.dump(2) << "\n";
    if (verbose) {
      for (const Check& c : checks_) {
        std::fprintf(stderr, "%-44s %-13.4g %-13.4g %s\n", c.name.c_str(), c.value,
                     c.tolerance, c.pass ? "PASS" : "FAIL");
      }
    }
    return all_pass ? 0 : 3;
  }

  // Marks the document --output should carry when outputs holds several.
  void set_primary(const std::string& key) { primary_ = key; }

  void write_outputs(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw cmv::ValidationError("cannot open output file " + path);
    // A single embedded document is written bare so it can be fed back in.
    if (!primary_.empty() && outputs_.contains(primary_)) {
      out << outputs_[primary_].dump(2) << "\n";
    } else if (outputs_.is_object() && outputs_.size() == 1 &&
               outputs_.begin()->is_object() && outputs_.begin()->contains("kind")) {
      out << outputs_.begin()->dump(2) << "\n";
    } else {
      out << outputs_.dump(2) << "\n";
    }
  }

 private:
  std::string command_;
  std::string digest_;
  std::string primary_;
  Json outputs_ = Json::object();
  std::vector<Check> checks_;
  std::chrono::steady_clock::time_point start_;
};

struct CommonOpts {
  std::string input;
  std::string output;
  double tol = 0.0;  // 0 = command default
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
  auto* in = cmd->add_option("--input", opts.input, "Input document (JSON)");
  if (needs_input) in->required();
  cmd->add_option("--output", opts.output, "Write the result document here");
  cmd->add_flag("--verbose", opts.verbose, "Human-readable check table on stderr");
}

std::string digest_payload(const CommonOpts& opts, const std::string& extra = {}) {
  std::string payload = extra;
  if (!opts.input.empty()) {
    std::ifstream in(opts.input);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      payload += ss.str();
    }
  }
  return payload;
}

cmv::VerblunskyData need_verblunsky(const cmv::InstanceDocument& doc) {
  if (doc.kind != cmv::DocKind::Verblunsky || !doc.verblunsky) {
    throw cmv::DocumentError("this command needs a verblunsky document");
  }
  return *doc.verblunsky;
}

Complex parse_complex_flag(const std::string& text, const char* what) {
  try {
    return cmv::parse_complex(Json::parse(text));
  } catch (const Json::parse_error&) {
    throw cmv::DocumentError(std::string(what) + " must be a JSON [re, im] pair");
  }
}

double spectra_defect(const cmv::VerblunskyData& data,
                      const std::vector<cmv::UnitPoint>& expected) {
  const auto got = cmv::eigenvalues(data);
  const auto match = cmv::match_points(expected, got, 1.0);
  return match ? match->max_chordal : 1e9;
}

// ---------------------------------------------------------------------------

int cmd_build(const CommonOpts& opts) {
  Report report("build", digest_payload(opts));
  const auto data = need_verblunsky(cmv::load_document_file(opts.input));
  const cmv::DenseUnitary c = cmv::assemble(data);
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.order; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.order; ++j) row.push_back(cmv::complex_json(c.at(i, j)));
    rows.push_back(row);
  }
  report.outputs()["order"] = c.order;
  report.outputs()["matrix"] = rows;
  report.check("unitarity_defect", cmv::unitarity_defect(c), 1e-12);
  report.check("pattern_violations",
               static_cast<double>(cmv::pattern_violations(c)), 0.0);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_spectrum(const CommonOpts& opts) {
  Report report("spectrum", digest_payload(opts));
  const auto doc = cmv::load_document_file(opts.input);
  const auto data = need_verblunsky(doc);
  double tol_angle = 1e-12;
  if (opts.tol > 0.0) tol_angle = opts.tol;
  if (doc.tol_override) tol_angle = *doc.tol_override;
  const auto eigs = cmv::eigenvalues(data, tol_angle);
  report.outputs()["spectrum"] = cmv::spectrum_json(eigs);

  const auto sys = cmv::szego_forward(data);
  double max_residual = 0.0, max_off_circle = 0.0;
  for (const auto& zeta : eigs) {
    max_residual = std::max(max_residual, std::abs(sys.phi_tilde(zeta.value)));
    max_off_circle =
        std::max(max_off_circle, std::abs(std::abs(zeta.value) - 1.0));
  }
  report.check("max_paraorthogonal_residual", max_residual, 1e-9);
  report.check("max_off_circle", max_off_circle, 1e-10);
  // Independent localization of the same roots.
  const auto scanned = cmv::grid_root_scan(sys.phi_tilde);
  const auto match = cmv::match_points(scanned, eigs, 1e-8);
  report.check("oracle_cross_check", match ? match->max_chordal : 1e9, 1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_measure(const CommonOpts& opts) {
  Report report("measure", digest_payload(opts));
  const auto data = need_verblunsky(cmv::load_document_file(opts.input));
  const auto measure = cmv::spectral_measure(data);
  report.outputs()["measure"] = cmv::measure_json(measure);

  double sum = 0.0, min_mass = 1.0;
  for (double m : measure.masses) {
    sum += m;
    min_mass = std::min(min_mass, m);
  }
  report.check("mass_sum_defect", std::abs(sum - 1.0), 1e-10);
  report.require("masses_positive", min_mass > 0.0);
  // Weyl partial fractions at two exterior points.
  double weyl_defect = 0.0;
  for (int s = 0; s < 2; ++s) {
    const Complex z = std::polar(2.0, 1.1 + 2.0 * s);
    Complex expansion{};
    for (std::size_t j = 0; j < measure.points.size(); ++j) {
      expansion += measure.masses[j] / (z - measure.points[j].value);
    }
    const Complex w = cmv::weyl_eval(data, z);
    weyl_defect = std::max(weyl_defect, std::abs(w - expansion) / std::abs(w));
  }
  report.check("weyl_partial_fraction_rel_defect", weyl_defect, 1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_weyl(const CommonOpts& opts, const std::string& at_text) {
  Report report("weyl", digest_payload(opts, at_text));
  const auto data = need_verblunsky(cmv::load_document_file(opts.input));
  const Complex z = parse_complex_flag(at_text, "--at");
  const Complex w = cmv::weyl_eval(data, z);
  report.outputs()["value"] = cmv::complex_json(w);
  report.outputs()["at"] = cmv::complex_json(z);

  const Complex oracle = cmv::resolvent_entry(cmv::assemble(data), z);
  report.check("resolvent_oracle_rel_defect", std::abs(w - oracle) / std::abs(w),
               1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_truncate(const CommonOpts& opts, const std::string& beta2_text) {
  Report report("truncate", digest_payload(opts, beta2_text));
  const auto data1 = need_verblunsky(cmv::load_document_file(opts.input));
  const Complex beta2 = parse_complex_flag(beta2_text, "--beta2");
  const auto rep = cmv::truncate_direct(data1, beta2);

  report.outputs()["B"] = cmv::complex_json(rep.B);
  report.outputs()["A"] = cmv::complex_json(rep.A);
  report.outputs()["classification"] =
      rep.classification == cmv::TruncationClass::Singular ? "singular" : "regular";
  report.outputs()["spectrum_full"] = cmv::spectrum_json(rep.spectrum_full.points);
  report.outputs()["spectrum_trunc"] = cmv::spectrum_json(rep.spectrum_trunc.points);
  if (rep.shared_point) {
    report.outputs()["shared_point"] = cmv::point_json(*rep.shared_point);
  }

  std::vector<Complex> prefix(data1.alpha.begin(), data1.alpha.end() - 1);
  const auto sys1 = cmv::szego_forward(data1);
  const auto sys2 = cmv::szego_forward(cmv::VerblunskyData::make(prefix, beta2));
  const auto masses =
      cmv::masses_from_truncation(rep, sys1.phi_tilde, sys2.phi_tilde);
  report.outputs()["masses"] = masses;

  report.check("pivot_unimodularity", std::abs(std::abs(rep.B) - 1.0), 1e-10);
  report.require("interlaces", rep.interlace_witness);
  const auto measure = cmv::spectral_measure(data1);
  double mass_defect = 0.0;
  for (std::size_t j = 0; j < masses.size(); ++j) {
    mass_defect = std::max(mass_defect, std::abs(masses[j] - measure.masses[j]));
  }
  report.check("mass_consistency", mass_defect, 1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_invert_measure(const CommonOpts& opts) {
  Report report("invert measure", digest_payload(opts));
  const auto doc = cmv::load_document_file(opts.input);
  if (doc.kind != cmv::DocKind::Measure || !doc.measure) {
    throw cmv::DocumentError("invert measure needs a measure document");
  }
  const auto data = cmv::from_measure(*doc.measure);
  report.outputs()["verblunsky"] = cmv::verblunsky_json(data);

  const auto back = cmv::spectral_measure(data);
  const auto match = cmv::match_points(doc.measure->points, back.points, 1.0);
  report.check("point_round_trip", match ? match->max_chordal : 1e9, 1e-8);
  double mass_defect = 1e9;
  if (match) {
    mass_defect = 0.0;
    for (std::size_t j = 0; j < back.masses.size(); ++j) {
      mass_defect = std::max(
          mass_defect, std::abs(doc.measure->masses[j] - back.masses[match->perm[j]]));
    }
  }
  report.check("mass_round_trip", mass_defect, 1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_invert_two_spectra(const CommonOpts& opts) {
  Report report("invert two-spectra", digest_payload(opts));
  const auto doc = cmv::load_document_file(opts.input);
  if (doc.kind != cmv::DocKind::SpectrumPair) {
    throw cmv::DocumentError("invert two-spectra needs a spectrum_pair document");
  }
  const auto s1 = cmv::sort_circular(doc.s1);
  const auto s2 = cmv::sort_circular(doc.s2);
  const auto pair = cmv::from_two_spectra(s1, s2);
  report.outputs()["data1"] = cmv::verblunsky_json(pair.data1);
  report.outputs()["data2"] = cmv::verblunsky_json(pair.data2);
  report.check("spectrum1_round_trip", spectra_defect(pair.data1, s1.points), 1e-8);
  report.check("spectrum2_round_trip", spectra_defect(pair.data2, s2.points), 1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

int cmd_invert_truncation(const CommonOpts& opts, bool has_zeta, double zeta_angle,
                          bool has_t, double param_t) {
  Report report("invert truncation",
                digest_payload(opts, std::to_string(zeta_angle) + "|" +
                                         std::to_string(param_t)));
  const auto doc = cmv::load_document_file(opts.input);
  if (doc.kind != cmv::DocKind::SpectrumPair) {
    throw cmv::DocumentError("invert truncation needs a spectrum_pair document");
  }
  if (has_zeta == has_t) {
    throw cmv::ValidationError(
        "choose exactly one of --zeta (regular) or --param-t (singular)");
  }
  const auto z1 = cmv::sort_circular(doc.s1);
  const auto z2 = cmv::sort_circular(doc.s2);
  cmv::CMVPair pair;
  if (has_zeta) {
    pair = cmv::truncation_regular(z1, z2, cmv::UnitPoint::from_angle(zeta_angle));
    const Complex b = cmv::compute_B(pair.data1.alpha.back(), pair.data1.beta,
                                     pair.data2.beta);
    report.check("pivot_matches_zeta",
                 std::abs(b - std::polar(1.0, zeta_angle)), 1e-9);
  } else {
    pair = cmv::truncation_singular(z1, z2, param_t);
    report.outputs()["t"] = param_t;
  }
  report.outputs()["data1"] = cmv::verblunsky_json(pair.data1);
  report.outputs()["data2"] = cmv::verblunsky_json(pair.data2);
  report.check("spectrum1_round_trip", spectra_defect(pair.data1, z1.points), 1e-8);
  report.check("spectrum2_round_trip", spectra_defect(pair.data2, z2.points), 1e-8);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

struct RoundtripOpts {
  std::size_t n = 8;
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::string mode = "measure";
  double alpha_radius = 0.9;
};

double data_distance(const cmv::VerblunskyData& a, const cmv::VerblunskyData& b) {
  double worst = std::abs(a.beta - b.beta);
  for (std::size_t j = 0; j < a.alpha.size(); ++j) {
    worst = std::max(worst, std::abs(a.alpha[j] - b.alpha[j]));
  }
  return worst;
}

int cmd_roundtrip(const RoundtripOpts& r, bool verbose) {
  Report report("roundtrip",
                r.mode + "|" + std::to_string(r.n) + "|" + std::to_string(r.seed) +
                    "|" + std::to_string(r.trials) + "|" +
                    std::to_string(r.alpha_radius));
  if (r.n == 0) throw cmv::ValidationError("--n must be positive");
  const bool needs_pair = r.mode != "measure";
  if (needs_pair && r.n < 2) {
    throw cmv::ValidationError("mode " + r.mode + " needs --n >= 2");
  }

  Json trials = Json::array();
  double max_alpha_err = 0.0, max_beta_err = 0.0, max_spectrum_err = 0.0;
  for (std::size_t trial = 0; trial < r.trials; ++trial) {
    cmv::SplitMix64 g(cmv::trial_seed(r.seed, trial));
    Json entry{{"trial", trial}, {"n", r.n}};
    if (r.mode == "measure") {
      const auto data = cmv::random_verblunsky(g, r.n, r.alpha_radius);
      const auto rec = cmv::from_measure(cmv::spectral_measure(data));
      const double err = data_distance(data, rec);
      entry["data_err"] = err;
      max_alpha_err = std::max(max_alpha_err, err);
      max_beta_err = std::max(max_beta_err, std::abs(data.beta - rec.beta));
    } else if (r.mode == "two-spectra") {
      std::vector<Complex> alpha;
      for (std::size_t j = 0; j + 1 < r.n; ++j) {
        alpha.push_back(cmv::random_in_disk(g, r.alpha_radius));
      }
      const Complex beta1 = cmv::random_unimodular(g);
      Complex beta2 = cmv::random_unimodular(g);
      while (std::abs(std::arg(beta2 / beta1)) < 0.1) {
        beta2 = cmv::random_unimodular(g);
      }
      const auto d1 = cmv::VerblunskyData::make(alpha, beta1);
      const auto d2 = cmv::VerblunskyData::make(alpha, beta2);
      const auto s1 = cmv::sort_circular(cmv::eigenvalues(d1));
      const auto s2 = cmv::sort_circular(cmv::eigenvalues(d2));
      if (!cmv::interlaces(s1, s2)) {
        throw cmv::VerificationError("sampled spectra failed to interlace");
      }
      const auto pair = cmv::from_two_spectra(s1, s2);
      const double err =
          std::max(data_distance(d1, pair.data1), data_distance(d2, pair.data2));
      entry["data_err"] = err;
      max_alpha_err = std::max(max_alpha_err, err);
      max_beta_err = std::max(
          max_beta_err, std::max(std::abs(beta1 - pair.data1.beta),
                                 std::abs(beta2 - pair.data2.beta)));
    } else if (r.mode == "trunc-regular") {
      cmv::TruncationReport rep;
      cmv::VerblunskyData data1;
      for (int attempt = 0;; ++attempt) {
        data1 = cmv::random_verblunsky(g, r.n, r.alpha_radius);
        rep = cmv::truncate_direct(data1, cmv::random_unimodular(g));
        if (rep.classification == cmv::TruncationClass::Regular) break;
        if (attempt > 16) throw cmv::DegeneracyError("no regular draw found");
      }
      const auto pair = cmv::truncation_regular(rep.spectrum_full, rep.spectrum_trunc,
                                                cmv::UnitPoint::from_value(rep.B));
      const double err = data_distance(data1, pair.data1);
      entry["data_err"] = err;
      max_alpha_err = std::max(max_alpha_err, err);
      const Complex b = cmv::compute_B(pair.data1.alpha.back(), pair.data1.beta,
                                       pair.data2.beta);
      max_beta_err = std::max(max_beta_err, std::abs(b - rep.B));
    } else if (r.mode == "trunc-singular") {
      const auto [data1, beta2] = cmv::random_singular_instance(g, r.n, r.alpha_radius);
      const auto rep = cmv::truncate_direct(data1, beta2);
      for (double t : {0.25, 0.5, 0.75}) {
        const auto pair =
            cmv::truncation_singular(rep.spectrum_full, rep.spectrum_trunc, t);
        max_spectrum_err = std::max(
            max_spectrum_err, spectra_defect(pair.data1, rep.spectrum_full.points));
        max_spectrum_err = std::max(
            max_spectrum_err, spectra_defect(pair.data2, rep.spectrum_trunc.points));
      }
      entry["spectrum_err"] = max_spectrum_err;
    } else {
      throw cmv::ValidationError("unknown mode " + r.mode);
    }
    trials.push_back(entry);
  }
  report.outputs()["trials"] = trials;
  if (r.mode == "trunc-singular") {
    report.check("max_spectrum_err", max_spectrum_err, 1e-8);
  } else if (r.mode == "trunc-regular") {
    report.check("max_data_err", max_alpha_err, 1e-7);
    report.check("max_pivot_err", max_beta_err, 1e-9);
  } else {
    report.check("max_data_err", max_alpha_err, 1e-8);
    report.check("max_beta_err", max_beta_err, 1e-9);
  }
  return report.finish(verbose);
}

int cmd_example(const std::string& which, std::size_t n, double angle,
                const CommonOpts& opts) {
  Report report("example " + which,
                which + "|" + std::to_string(n) + "|" + std::to_string(angle));
  if (n == 0) throw cmv::ValidationError("--n must be positive");
  cmv::VerblunskyData data = cmv::VerblunskyData::make(
      std::vector<Complex>(n - 1, Complex{}), Complex{1.0, 0.0});
  double expected_shift = 0.0;
  if (which == "rotated") {
    data = cmv::rotate(data, std::polar(1.0, angle));
    expected_shift = -angle;
  }
  const auto eigs = cmv::eigenvalues(data);
  report.outputs()["verblunsky"] = cmv::verblunsky_json(data);
  report.outputs()["spectrum"] = cmv::spectrum_json(eigs);
  report.set_primary("verblunsky");

  double defect = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex want = std::polar(
        1.0, cmv::kTwoPi * static_cast<double>(j) / static_cast<double>(n) +
                 expected_shift);
    double best = 1e9;
    for (const auto& e : eigs) best = std::min(best, cmv::chordal(e.value, want));
    defect = std::max(defect, best);
  }
  report.check("closed_form_spectrum", defect, which == "rotated" ? 1e-9 : 1e-12);
  report.write_outputs(opts.output);
  return report.finish(opts.verbose);
}

std::string error_name(const std::exception& e) {
  int status = 0;
  char* demangled = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
  std::string name = status == 0 && demangled ? demangled : typeid(e).name();
  std::free(demangled);
  if (name.rfind("cmv::", 0) == 0) name = name.substr(5);
  return name;
}

void emit_error(const char* category, const std::exception& e) {
  std::cout << Json{{"error",
                     {{"category", category},
                      {"type", error_name(e)},
                      {"message", e.what()}}}}
                   .dump(2)
            << "\n";
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const cmv::ValidationError& e) {
    emit_error("validation", e);
    return 1;
  } catch (const cmv::DegeneracyError& e) {
    emit_error("numerical-degeneracy", e);
    return 2;
  } catch (const std::exception& e) {
    emit_error("verification", e);
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite CMV matrices: direct and inverse spectral problems"};
  app.require_subcommand(1);
  int rc = 0;

  CommonOpts build_opts;
  auto* build = app.add_subcommand("build", "Assemble the matrix, check unitarity");
  add_common(build, build_opts);
  build->callback([&] { rc = guarded([&] { return cmd_build(build_opts); }); });

  CommonOpts spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Unit-circle eigenvalues");
  add_common(spectrum, spectrum_opts);
  spectrum->add_option("--tol", spectrum_opts.tol,
                       "Angular tolerance for the root bisection");
  spectrum->callback(
      [&] { rc = guarded([&] { return cmd_spectrum(spectrum_opts); }); });

  CommonOpts measure_opts;
  auto* measure = app.add_subcommand("measure", "Spectral measure (points + masses)");
  add_common(measure, measure_opts);
  measure->callback([&] { rc = guarded([&] { return cmd_measure(measure_opts); }); });

  CommonOpts weyl_opts;
  std::string weyl_at;
  auto* weyl = app.add_subcommand("weyl", "Evaluate the Weyl function");
  add_common(weyl, weyl_opts);
  weyl->add_option("--at", weyl_at, "Evaluation point as [re, im]")->required();
  weyl->callback([&] { rc = guarded([&] { return cmd_weyl(weyl_opts, weyl_at); }); });

  CommonOpts trunc_opts;
  std::string beta2_text;
  auto* trunc = app.add_subcommand("truncate", "Direct truncation problem");
  add_common(trunc, trunc_opts);
  trunc->add_option("--beta2", beta2_text, "Boundary parameter as [re, im]")
      ->required();
  trunc->callback(
      [&] { rc = guarded([&] { return cmd_truncate(trunc_opts, beta2_text); }); });

  auto* invert = app.add_subcommand("invert", "Inverse problems");
  invert->require_subcommand(1);

  CommonOpts inv_measure_opts;
  auto* inv_measure = invert->add_subcommand("measure", "Reconstruct from a measure");
  add_common(inv_measure, inv_measure_opts);
  inv_measure->callback(
      [&] { rc = guarded([&] { return cmd_invert_measure(inv_measure_opts); }); });

  CommonOpts inv_two_opts;
  auto* inv_two = invert->add_subcommand("two-spectra", "Reconstruct from two spectra");
  add_common(inv_two, inv_two_opts);
  inv_two->callback(
      [&] { rc = guarded([&] { return cmd_invert_two_spectra(inv_two_opts); }); });

  CommonOpts inv_tr_opts;
  double zeta_angle = 0.0, param_t = 0.0;
  auto* inv_tr = invert->add_subcommand(
      "truncation", "Reconstruct a matrix and its truncation from both spectra");
  add_common(inv_tr, inv_tr_opts);
  auto* zeta_opt =
      inv_tr->add_option("--zeta", zeta_angle, "Pivot angle (regular case)");
  auto* t_opt =
      inv_tr->add_option("--param-t", param_t, "Shared-point mass split (singular)");
  inv_tr->callback([&] {
    rc = guarded([&] {
      return cmd_invert_truncation(inv_tr_opts, zeta_opt->count() > 0, zeta_angle,
                                   t_opt->count() > 0, param_t);
    });
  });

  RoundtripOpts rt;
  bool rt_verbose = false;
  auto* roundtrip = app.add_subcommand("roundtrip", "Seeded round-trip experiments");
  roundtrip->add_option("--n", rt.n, "Matrix order");
  roundtrip->add_option("--seed", rt.seed, "Run seed");
  roundtrip->add_option("--trials", rt.trials, "Number of trials");
  roundtrip
      ->add_option("--mode", rt.mode,
                   "measure | two-spectra | trunc-regular | trunc-singular")
      ->required();
  roundtrip->add_option("--alpha-radius", rt.alpha_radius,
                        "Sampling radius for the coefficients");
  roundtrip->add_flag("--verbose", rt_verbose, "Check table on stderr");
  roundtrip->callback([&] { rc = guarded([&] { return cmd_roundtrip(rt, rt_verbose); }); });

  auto* example = app.add_subcommand("example", "Golden instances");
  example->require_subcommand(1);
  CommonOpts ex_opts;
  std::size_t ex_n = 4;
  double ex_angle = 0.0;
  auto* roots = example->add_subcommand("roots-of-unity", "Free instance of order n");
  roots->add_option("--n", ex_n, "Matrix order");
  add_common(roots, ex_opts, /*needs_input=*/false);
  roots->callback([&] {
    rc = guarded([&] { return cmd_example("roots-of-unity", ex_n, 0.0, ex_opts); });
  });
  auto* rotated = example->add_subcommand("rotated", "Rotated free instance");
  rotated->add_option("--n", ex_n, "Matrix order");
  rotated->add_option("--zeta", ex_angle, "Rotation angle (radians)")->required();
  add_common(rotated, ex_opts, /*needs_input=*/false);
  rotated->callback([&] {
    rc = guarded([&] { return cmd_example("rotated", ex_n, ex_angle, ex_opts); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}
