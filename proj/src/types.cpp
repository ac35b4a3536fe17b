#include "scmsweep/types.hpp"

#include <cmath>

namespace scmsweep {

void ArrayConfig::validate() const {
  if (antennas < 2) {
    throw std::invalid_argument("array needs at least 2 antennas, got " +
                                std::to_string(antennas));
  }
  if (rf_chains < 1) {
    throw std::invalid_argument("array needs at least 1 RF chain, got " +
                                std::to_string(rf_chains));
  }
  if (antennas % rf_chains != 0) {
    throw std::invalid_argument("antenna count " + std::to_string(antennas) +
                                " is not divisible by RF chain count " +
                                std::to_string(rf_chains));
  }
  if (antennas / rf_chains < 2) {
    throw std::invalid_argument("each RF chain must drive at least 2 antennas");
  }
  if (!(spacing_wavelengths > 0.0) || !std::isfinite(spacing_wavelengths)) {
    throw std::invalid_argument("element spacing must be a positive finite "
                                "number of wavelengths");
  }
}

void SourceScene::validate() const {
  if (doas_deg.empty()) {
    throw std::invalid_argument("scene needs at least one source");
  }
  if (powers.size() != doas_deg.size()) {
    throw std::invalid_argument("scene has " + std::to_string(doas_deg.size()) +
                                " DOAs but " + std::to_string(powers.size()) +
                                " powers");
  }
  for (double theta : doas_deg) {
    if (!(theta >= -90.0 && theta <= 90.0)) {
      throw std::invalid_argument("source DOA " + std::to_string(theta) +
                                  " outside [-90, 90] degrees");
    }
  }
  for (double p : powers) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("source powers must be positive and finite");
    }
  }
  if (noise_power < 0.0 || !std::isfinite(noise_power)) {
    throw std::invalid_argument("noise power must be nonnegative and finite");
  }
}

CVector CorrelationSet::pair_values(int chain1, int chain2) const {
  const int q_count = sweep_count();
  CVector values(q_count);
  for (int q = 0; q < q_count; ++q) {
    values(q) = value(chain1, chain2, q);
  }
  return values;
}

std::string to_string(PlanFamily family) {
  switch (family) {
    case PlanFamily::uniform_theta: return "uniform_theta";
    case PlanFamily::uniform_spatial_freq: return "uniform_spatial_freq";
  }
  throw std::invalid_argument("unknown plan family");
}

PlanFamily plan_family_from_string(const std::string& name) {
  if (name == "uniform_theta") return PlanFamily::uniform_theta;
  if (name == "uniform_spatial_freq") return PlanFamily::uniform_spatial_freq;
  throw std::invalid_argument("unknown plan family '" + name + "'");
}

std::string to_string(CorrelationSource source) {
  switch (source) {
    case CorrelationSource::measured: return "measured";
    case CorrelationSource::oracle: return "oracle";
  }
  throw std::invalid_argument("unknown correlation source");
}

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::truth: return "true";
    case Provenance::sample_average: return "sample_average";
    case Provenance::basic: return "basic";
    case Provenance::low_complexity: return "low_complexity";
    case Provenance::fast_diagonal: return "fast_diagonal";
  }
  throw std::invalid_argument("unknown provenance");
}

Provenance provenance_from_string(const std::string& name) {
  if (name == "true") return Provenance::truth;
  if (name == "sample_average") return Provenance::sample_average;
  if (name == "basic") return Provenance::basic;
  if (name == "low_complexity") return Provenance::low_complexity;
  if (name == "fast_diagonal") return Provenance::fast_diagonal;
  throw std::invalid_argument("unknown provenance '" + name + "'");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::sample_average: return "sample_average";
    case Algorithm::basic: return "basic";
    case Algorithm::low_complexity: return "low_complexity";
    case Algorithm::fast_diagonal: return "fast_diagonal";
  }
  throw std::invalid_argument("unknown algorithm");
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "sample_average") return Algorithm::sample_average;
  if (name == "basic") return Algorithm::basic;
  if (name == "low_complexity") return Algorithm::low_complexity;
  if (name == "fast_diagonal") return Algorithm::fast_diagonal;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

}  // namespace scmsweep
