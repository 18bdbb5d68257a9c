#pragma once
#include <string>
#include <vector>

#include "sdl/boxdim.hpp"
#include "sdl/distance.hpp"
#include "sdl/energy.hpp"
#include "sdl/experiments.hpp"
#include "sdl/measure.hpp"
#include "sdl/spectrum.hpp"
#include "sdl/thresholds.hpp"
#include "sdl/transform.hpp"

// Artifact emission. Everything here renders to a string and a separate call
// writes it, so the formats are testable without touching the filesystem.
// CSV is RFC 4180 with LF line endings and a header row; every float goes
// through format_double. Identical inputs must yield identical bytes — the
// determinism contract the CLI tests compare — which is why no emitter reads
// clocks, locales, or pointers.

namespace sdl {

// printf "%.17g": 17 significant digits round-trip a double exactly, and a
// fixed precision pins one spelling per value (shortest-form printers are
// a per-library choice, not a contract).
std::string format_double(double v);

std::string csv_of_measure(const DiscreteMeasure& m);  // x1,...,xd,weight
std::string csv_of_shells(const std::vector<ShellStat>& shells);
std::string csv_of_profile(const SpectrumProfile& p);
std::string csv_of_adecay_table(const ADecayTable& t);
std::string csv_of_adecay_curve(const ADecayReport& r);
std::string csv_of_distances(const DistanceSample& s);  // one value column
std::string csv_of_boxcurve(const BoxCountCurve& c);
std::string csv_of_thresholds(const std::vector<ThresholdCurvePoint>& rows);

// Sidecar for csv_of_distances: the sample's provenance (squared flag,
// source ids, pin) that a flat value column cannot carry.
std::string json_of_distance_meta(const DistanceSample& s);

// Non-finite values (an infinite real-space energy, a NaN tail slope)
// serialize as null.
std::string json_of_energy(const EnergyReport& r);
std::string json_of_equivalence(const EquivalenceRatio& r);
std::string json_of_fit(const DecayFit& f);

// {"name","seed","params","metrics","assertions":[{"label","lhs","rhs",
//  "op","pass"}],"verdict","artifacts"} plus "notes" for diagnostics.
std::string json_of_experiment(const ExperimentReport& r);

// Minimal SVG 1.1: axes, the three threshold polylines, and markers at the
// interior transition abscissae. Self-contained vector output; no plotting
// dependency.
std::string svg_of_thresholds(const std::vector<ThresholdCurvePoint>& rows);

// Creates or truncates path; errors (usage) when the file cannot be opened.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sdl
