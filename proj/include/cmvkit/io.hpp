#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cmvkit/spectral.hpp"
#include "cmvkit/types.hpp"
#include "cmvkit/unit_circle.hpp"
#include "cmvkit/verblunsky.hpp"

namespace cmv {

using Json = nlohmann::json;

// Complex numbers serialize as two-element [re, im] arrays; unit-circle
// points may alternatively appear as {"angle": radians}.
Complex parse_complex(const Json& j);
UnitPoint parse_unit_point(const Json& j);
std::vector<UnitPoint> parse_point_list(const Json& j);

Json complex_json(Complex z);
Json point_json(const UnitPoint& p);  // {"angle": ...}

enum class DocKind { Verblunsky, Measure, Spectrum, SpectrumPair };

// One input document. The payload has already passed the corresponding
// module validator when a load function returns.
struct InstanceDocument {
  DocKind kind{DocKind::Verblunsky};
  std::optional<VerblunskyData> verblunsky;
  std::optional<SpectralMeasure> measure;
  std::vector<UnitPoint> spectrum;
  std::vector<UnitPoint> s1, s2;       // kind == SpectrumPair
  std::optional<double> tol_override;  // "tolerances": {"tol": ...}
};

InstanceDocument load_document(const Json& j);
InstanceDocument load_document_file(const std::string& path);

Json verblunsky_json(const VerblunskyData& data);
Json measure_json(const SpectralMeasure& m);
Json spectrum_json(const std::vector<UnitPoint>& points);
Json spectrum_pair_json(const std::vector<UnitPoint>& s1,
                        const std::vector<UnitPoint>& s2);

}  // namespace cmv
