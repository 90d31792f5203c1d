#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "tropmirror/ci.hpp"
#include "tropmirror/critlocus.hpp"
#include "tropmirror/mirror.hpp"
#include "tropmirror/wallcross.hpp"

namespace tropmirror {

using Json = nlohmann::json;

/// A parsed job: the mode, its input datum and the run options. Parsing
/// enforces the structural invariants (rationals as "p/q" strings, primitive
/// rays, epsilon > 0, the <sigma,alpha> + lambda compatibility).
struct JobSpec {
    enum class Mode { Hypersurface, Ci, Converse, Critlocus, Wallcheck };
    // How far the hypersurface pipeline is reported.
    enum class Depth { Subdivision, Mirror, Potential };

    Mode mode = Mode::Hypersurface;
    Depth depth = Depth::Potential;

    // hypersurface / converse / critlocus / wallcheck data
    WeightedPointSet points;
    std::optional<AmbientToricData> ambient;

    // ci data
    CIDatum ci;

    // options
    std::optional<Rational> cutoff;
    bool svg = false;
    ModificationSpec modification = ModificationSpec::all();
    std::string report_path;

    bool operator==(const JobSpec& o) const;
};

// Strict UTF-8 JSON parsing with ParseError (position, field) and
// ValidationError (named invariant) reporting.
JobSpec parse_input(const std::string& bytes);
Json serialize_job(const JobSpec& job);

// The ambient used by the pipeline when the input omits it: the open torus
// (no rays) with epsilon = 1.
AmbientToricData default_ambient();

// Deterministic report; identical input bytes yield identical report bytes.
Json run_job(const JobSpec& job);
std::string report_bytes(const Json& report);

// Pi_0 diagnostics (n = 2 only): bounded edges solid, rays dashed, components
// labelled by their weights.
std::string render_svg(const WeightedPointSet& w, const RegularSubdivision& s,
                       const TropicalComplex& tc, const TropicalCurveGraph& g);

// Serialization helpers shared with the bindings.
Json series_to_json(const NovikovSeries& s);
Json expr_to_json(const ChartExpression& e);

}  // namespace tropmirror
