// Text serialization. All doubles are written with the shortest
// representation that parses back to the identical bits, so save followed
// by load is lossless.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "scmsweep/music.hpp"
#include "scmsweep/types.hpp"

namespace scmsweep {

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);
double parse_double(const std::string& text);

/// "re,im" with both parts in round-trip form.
std::string format_complex(cxd value);
cxd parse_complex(const std::string& text);

// Covariance file: header "M N provenance", then M rows of M whitespace-
// separated "re,im" entries.
void save_covariance(std::ostream& out, const CovarianceEstimate& estimate);
void save_covariance(const std::string& path, const CovarianceEstimate& estimate);
CovarianceEstimate load_covariance(std::istream& in);
CovarianceEstimate load_covariance(const std::string& path);

// Sweep plan file: "# family: <name>" then one angle in degrees per line.
void save_plan(std::ostream& out, const SweepPlan& plan);
void save_plan(const std::string& path, const SweepPlan& plan);
SweepPlan load_plan(std::istream& in);
SweepPlan load_plan(const std::string& path);

// Correlation file: header "M N Q K spacing source", then Q stanzas of
// N rows of N "re,im" entries.
void save_correlations(std::ostream& out, const ArrayConfig& cfg,
                       const CorrelationSet& set);
void save_correlations(const std::string& path, const ArrayConfig& cfg,
                       const CorrelationSet& set);
std::pair<ArrayConfig, CorrelationSet> load_correlations(std::istream& in);
std::pair<ArrayConfig, CorrelationSet> load_correlations(const std::string& path);

// Snapshot file: header "M K", then M rows of K "re,im" entries.
void save_snapshots(std::ostream& out, const SnapshotBatch& batch);
void save_snapshots(const std::string& path, const SnapshotBatch& batch);
SnapshotBatch load_snapshots(std::istream& in);
SnapshotBatch load_snapshots(const std::string& path);

/// CSV with header "theta_deg,p_theta", one row per grid point.
std::string spectrum_csv(const MusicSpectrum& spectrum);

/// CSV with header "doa_deg", one row per estimated direction.
std::string doa_csv(const DoaEstimate& estimate);

}  // namespace scmsweep
