#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isokit/curves.hpp"
#include "isokit/families.hpp"
#include "isokit/surface.hpp"

namespace isokit {

struct GridSpec {
    Rect range;
    int nu = 2;
    int nv = 2;

    // Endpoints are hit exactly so a grid over a chart's own rectangle never
    // drifts outside it by rounding.
    double u_at(int i) const {
        if (i == nu - 1) return range.u_max;
        return range.u_min + (range.u_max - range.u_min) * static_cast<double>(i) / (nu - 1);
    }
    double v_at(int j) const {
        if (j == nv - 1) return range.v_max;
        return range.v_min + (range.v_max - range.v_min) * static_cast<double>(j) / (nv - 1);
    }
};

// First and second fundamental forms reconstructed from position samples
// only (no analytic derivative field is touched), as an independent check of
// the analytic pipeline. Requires a margin of 2*step inside the chart
// domain; throws OutOfDomain otherwise. With richardson = true the step and
// half-step results are extrapolated.
std::pair<SymForm2, SymForm2> fd_forms_oracle(const SurfaceChart& chart, double u, double v,
                                              double step = kDefaultFdStep,
                                              bool richardson = false);

enum class SweepQuantity {
    relative_curvature,       // K
    mean_curvature,           // H as defined by curvatures()
    doubled_mean_curvature,   // g'/u + g'' form: exactly 2 H on any chart
};

struct SweepResult {
    double mean = 0.0;
    double max_deviation = 0.0;
};

// Evaluates the quantity on the grid and reports its mean and the largest
// absolute deviation from the mean. Throws NotAdmissible (with the node
// coordinates) if any node is inadmissible.
SweepResult constancy_sweep(const SurfaceChart& chart, SweepQuantity quantity,
                            const GridSpec& grid);

enum class ClaimStatus { pass, fail, discrepancy_documented };

const char* to_string(ClaimStatus status);

struct ClaimResult {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::fail;
    double max_abs_error = 0.0;
    std::string notes;
};

struct SuiteParams {
    std::uint64_t seed = 0;
    // Optional overrides for the helicoidal family claims.
    std::optional<double> K0;
    std::optional<double> gamma;
    std::optional<double> pitch_h;
    std::optional<double> H0;
    std::optional<double> alpha;
    // Tolerance overrides merged over the suite defaults.
    std::map<std::string, double> tolerances;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;
    std::uint64_t seed = 0;
    std::map<std::string, double> tolerances;

    int count(ClaimStatus status) const;
    bool all_passed() const;  // true iff no claim failed
};

std::vector<std::string> known_claim_ids();

// Re-derives every verifiable classification claim numerically. An empty
// selection runs everything. Identical inputs produce byte-identical
// reports. Claims that disagree with their printed statement in a documented
// way come back as discrepancy_documented, never silently patched.
VerificationReport run_theorem_suite(const std::set<std::string>& selection = {},
                                     const SuiteParams& params = {});

std::string report_to_json(const VerificationReport& report);

}  // namespace isokit
