#include "cmvkit/io.hpp"

#include <algorithm>
#include <fstream>

#include "cmvkit/errors.hpp"

namespace cmv {

Complex parse_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DocumentError("complex values must be [re, im] arrays, got " + j.dump());
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  require_finite(z, "document value");
  return z;
}

UnitPoint parse_unit_point(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("angle") || !j["angle"].is_number()) {
      throw DocumentError("point object must carry a numeric \"angle\"");
    }
    return UnitPoint::from_angle(j["angle"].get<double>());
  }
  return UnitPoint::from_value(parse_complex(j));
}

std::vector<UnitPoint> parse_point_list(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw DocumentError("expected a nonempty array of points");
  }
  std::vector<UnitPoint> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(parse_unit_point(item));
  return out;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json point_json(const UnitPoint& p) { return Json{{"angle", p.angle}}; }

namespace {

VerblunskyData parse_verblunsky(const Json& j) {
  if (!j.contains("alpha") || !j["alpha"].is_array() || !j.contains("beta")) {
    throw DocumentError("verblunsky document needs \"alpha\" and \"beta\"");
  }
  VerblunskyData d;
  for (const auto& a : j["alpha"]) d.alpha.push_back(parse_complex(a));
  d.beta = parse_complex(j["beta"]);
  d.n = j.contains("n") ? j["n"].get<std::size_t>() : d.alpha.size() + 1;
  validate(d);
  return d;
}

SpectralMeasure parse_measure(const Json& j) {
  if (!j.contains("points") || !j.contains("masses") || !j["masses"].is_array()) {
    throw DocumentError("measure document needs \"points\" and \"masses\"");
  }
  std::vector<UnitPoint> pts = parse_point_list(j["points"]);
  std::vector<double> masses;
  for (const auto& m : j["masses"]) {
    if (!m.is_number()) throw DocumentError("masses must be numeric");
    masses.push_back(m.get<double>());
  }
  if (pts.size() != masses.size()) {
    throw DocumentError("points and masses must have equal length");
  }
  // Sort jointly by angle; the validator then enforces the invariants.
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].angle < pts[b].angle;
  });
  SpectralMeasure m;
  for (std::size_t i : idx) {
    m.points.push_back(pts[i]);
    m.masses.push_back(masses[i]);
  }
  validate(m);
  return m;
}

InstanceDocument load_document_checked(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw DocumentError("document must be an object with a \"kind\" string");
  }
  InstanceDocument doc;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "verblunsky") {
    doc.kind = DocKind::Verblunsky;
    doc.verblunsky = parse_verblunsky(j);
  } else if (kind == "measure") {
    doc.kind = DocKind::Measure;
    doc.measure = parse_measure(j);
  } else if (kind == "spectrum") {
    doc.kind = DocKind::Spectrum;
    if (!j.contains("points")) throw DocumentError("spectrum document needs \"points\"");
    doc.spectrum = parse_point_list(j["points"]);
  } else if (kind == "spectrum_pair") {
    doc.kind = DocKind::SpectrumPair;
    if (!j.contains("s1") || !j.contains("s2")) {
      throw DocumentError("spectrum_pair document needs \"s1\" and \"s2\"");
    }
    doc.s1 = parse_point_list(j["s1"]);
    doc.s2 = parse_point_list(j["s2"]);
  } else {
    throw DocumentError("unknown document kind \"" + kind + "\"");
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) throw DocumentError("\"tolerances\" must be an object");
    if (t.contains("tol")) doc.tol_override = t["tol"].get<double>();
  }
  return doc;
}

}  // namespace

InstanceDocument load_document(const Json& j) {
  try {
    return load_document_checked(j);
  } catch (const Json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  }
}

InstanceDocument load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open input file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw DocumentError("invalid JSON in " + path + ": " + e.what());
  }
  return load_document(j);
}

Json verblunsky_json(const VerblunskyData& data) {
  Json alpha = Json::array();
  for (const Complex& a : data.alpha) alpha.push_back(complex_json(a));
  return Json{{"kind", "verblunsky"},
              {"n", data.n},
              {"alpha", alpha},
              {"beta", complex_json(data.beta)}};
}

Json measure_json(const SpectralMeasure& m) {
  Json pts = Json::array();
  for (const UnitPoint& p : m.points) pts.push_back(point_json(p));
  return Json{{"kind", "measure"}, {"points", pts}, {"masses", m.masses}};
}

Json spectrum_json(const std::vector<UnitPoint>& points) {
  Json pts = Json::array();
  for (const UnitPoint& p : points) pts.push_back(point_json(p));
  return Json{{"kind", "spectrum"}, {"points", pts}};
}

Json spectrum_pair_json(const std::vector<UnitPoint>& s1,
                        const std::vector<UnitPoint>& s2) {
  Json a = Json::array(), b = Json::array();
  for (const UnitPoint& p : s1) a.push_back(point_json(p));
  for (const UnitPoint& p : s2) b.push_back(point_json(p));
  return Json{{"kind", "spectrum_pair"}, {"s1", a}, {"s2", b}};
}

}  // namespace cmv
