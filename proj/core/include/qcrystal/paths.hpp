#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcrystal/crystal.hpp"
#include "qcrystal/series.hpp"

namespace qcrystal {

// The weight defect of a path failed to decompose over the simple roots with
// nonnegative integer coefficients; this signals an implementation bug, not
// a property of valid input.
struct NonIntegralGrading : std::runtime_error {
    explicit NonIntegralGrading(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedWeight : std::runtime_error {
    explicit UnsupportedWeight(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidDivisor : std::runtime_error {
    explicit InvalidDivisor(const std::string& msg) : std::runtime_error(msg) {}
};

// A path that agrees with the ground-state sequence beyond finitely many
// positions, stored as the finite prefix of deviations b_1..b_L.  Canonical
// form: the last stored letter differs from the ground letter there.
struct LambdaPath {
    std::vector<int> deviations;
    bool operator==(const LambdaPath& rhs) const { return deviations == rhs.deviations; }
    bool operator<(const LambdaPath& rhs) const { return deviations < rhs.deviations; }
};

LambdaPath make_path(const GroundState& gs, std::vector<int> deviations);
int path_at(const GroundState& gs, const LambdaPath& path, int k);  // k >= 1

struct PathStats {
    std::int64_t h_length;                  // energy above the ground sequence
    std::int64_t degree;                    // depth below the highest weight
    std::optional<std::int64_t> mod_length; // only for the two supported weights
};

PathStats path_stats(const PerfectCrystalSpec& spec, const GroundState& gs, const LambdaPath& path);

// mod_length as a throwing accessor: UnsupportedWeight when the ground state
// is not one of the two weights this statistic is defined for.
std::int64_t mod_length(const PerfectCrystalSpec& spec, const GroundState& gs, const LambdaPath& path);

// All paths of degree < trunc, found by exhausting deviation prefixes under
// an exact lower-bound prune and growing the prefix window until the results
// stabilize twice in a row.
std::vector<std::pair<LambdaPath, PathStats>> enumerate_paths(const PerfectCrystalSpec& spec,
                                                              const GroundState& gs, int trunc);

// Everything one enumeration pass can report: the two-variable series, its
// sixteen refinements by the first two letters, the energy-only histogram,
// and how wide the window had to grow.
struct PathSeriesBundle {
    int trunc;
    XLaurentSeries total;                 // x^{mod_length} q^{degree}
    std::vector<XLaurentSeries> by_start; // index 4*b_1 + b_2
    std::map<std::pair<std::int64_t, std::int64_t>, Coeff> h_histogram;  // (h_length, degree) -> count
    int window;        // first prefix length of the stable run
    int min_x_degree;  // smallest mod_length observed
};

PathSeriesBundle path_series_bundle(const PerfectCrystalSpec& spec, const GroundState& gs, int trunc,
                                    int threads = 1);

XLaurentSeries gf_J(const PerfectCrystalSpec& spec, const GroundState& gs, int trunc, int threads = 1);
// Restriction to paths whose first two letters are p1, p2.
XLaurentSeries gf_J_prefix(const PerfectCrystalSpec& spec, const GroundState& gs, int p1, int p2,
                           int trunc, int threads = 1);
// x-exponent divisor*h_length; divisor must divide the period times the
// null-root height (here: 1, 2, or 4), else InvalidDivisor.
XLaurentSeries gf_FD(const PerfectCrystalSpec& spec, const GroundState& gs, int divisor, int trunc,
                     int threads = 1);

// Lowering/raising operators on whole paths via a growing finite window; the
// window is extended one ground period at a time until the outcome repeats
// twice.  An action that keeps chasing the top of the window is a surviving
// sign owned by no finite position, i.e. no action.
std::optional<LambdaPath> path_f(const PerfectCrystalSpec& spec, const GroundState& gs,
                                 const LambdaPath& path, int color);
std::optional<LambdaPath> path_e(const PerfectCrystalSpec& spec, const GroundState& gs,
                                 const LambdaPath& path, int color);

// Independent oracle: breadth-first closure of the ground-state path under
// the two lowering operators.  levels[n] holds the sorted canonical paths at
// depth n; the depth of every discovered path must equal its weight degree.
std::vector<std::vector<LambdaPath>> bfs_levels(const PerfectCrystalSpec& spec, const GroundState& gs,
                                                int max_degree);

}  // namespace qcrystal
