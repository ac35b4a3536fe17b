#include "scmsweep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace scmsweep {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  return in;
}

[[noreturn]] void bad_format(const std::string& what) {
  throw std::runtime_error("malformed input: " + what);
}

std::string next_token(std::istream& in, const std::string& what) {
  std::string token;
  if (!(in >> token)) bad_format("missing " + what);
  return token;
}

int parse_count(const std::string& token, const std::string& what, int minimum) {
  int value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size() ||
      value < minimum) {
    bad_format(what + " '" + token + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    bad_format("number '" + text + "'");
  }
  return value;
}

std::string format_complex(cxd value) {
  return format_double(value.real()) + "," + format_double(value.imag());
}

cxd parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) bad_format("complex entry '" + text + "'");
  return cxd(parse_double(text.substr(0, comma)),
             parse_double(text.substr(comma + 1)));
}

void save_covariance(std::ostream& out, const CovarianceEstimate& estimate) {
  const int dim = estimate.dim();
  if (dim < 1 || estimate.matrix.cols() != dim) {
    throw std::invalid_argument("covariance must be square and nonempty");
  }
  if (estimate.rf_chains < 1) {
    throw std::invalid_argument("covariance metadata lacks the RF chain count");
  }
  out << dim << ' ' << estimate.rf_chains << ' ' << to_string(estimate.provenance)
      << '\n';
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (j > 0) out << ' ';
      out << format_complex(estimate.matrix(i, j));
    }
    out << '\n';
  }
}

void save_covariance(const std::string& path, const CovarianceEstimate& estimate) {
  auto out = open_out(path);
  save_covariance(out, estimate);
}

CovarianceEstimate load_covariance(std::istream& in) {
  const int dim = parse_count(next_token(in, "dimension"), "dimension", 1);
  const int chains = parse_count(next_token(in, "RF chain count"), "RF chain count", 1);
  const std::string provenance = next_token(in, "provenance");
  CovarianceEstimate estimate;
  estimate.provenance = provenance_from_string(provenance);
  estimate.rf_chains = chains;
  estimate.matrix.resize(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      estimate.matrix(i, j) = parse_complex(next_token(in, "matrix entry"));
    }
  }
  return estimate;
}

CovarianceEstimate load_covariance(const std::string& path) {
  auto in = open_in(path);
  return load_covariance(in);
}

void save_plan(std::ostream& out, const SweepPlan& plan) {
  out << "# family: " << to_string(plan.family) << '\n';
  for (double angle : plan.angles_deg) {
    out << format_double(angle) << '\n';
  }
}

void save_plan(const std::string& path, const SweepPlan& plan) {
  auto out = open_out(path);
  save_plan(out, plan);
}

SweepPlan load_plan(std::istream& in) {
  SweepPlan plan;
  std::string line;
  bool family_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto pos = line.find("family:");
      if (pos != std::string::npos && !family_seen) {
        std::istringstream rest(line.substr(pos + 7));
        std::string name;
        if (rest >> name) {
          plan.family = plan_family_from_string(name);
          family_seen = true;
        }
      }
      continue;
    }
    plan.angles_deg.push_back(parse_double(line));
  }
  if (plan.angles_deg.empty()) bad_format("plan has no angles");
  return plan;
}

SweepPlan load_plan(const std::string& path) {
  auto in = open_in(path);
  return load_plan(in);
}

void save_correlations(std::ostream& out, const ArrayConfig& cfg,
                       const CorrelationSet& set) {
  cfg.validate();
  if (set.sweep_count() < 1) {
    throw std::invalid_argument("correlation set is empty");
  }
  if (set.chains() != cfg.rf_chains) {
    throw std::invalid_argument("correlation set does not match the array config");
  }
  out << cfg.antennas << ' ' << cfg.rf_chains << ' ' << set.sweep_count() << ' '
      << set.samples_per_beam << ' ' << format_double(cfg.spacing_wavelengths)
      << ' ' << to_string(set.source) << '\n';
  for (const CMatrix& beam : set.beams) {
    for (int n1 = 0; n1 < set.chains(); ++n1) {
      for (int n2 = 0; n2 < set.chains(); ++n2) {
        if (n2 > 0) out << ' ';
        out << format_complex(beam(n1, n2));
      }
      out << '\n';
    }
  }
}

void save_correlations(const std::string& path, const ArrayConfig& cfg,
                       const CorrelationSet& set) {
  auto out = open_out(path);
  save_correlations(out, cfg, set);
}

std::pair<ArrayConfig, CorrelationSet> load_correlations(std::istream& in) {
  ArrayConfig cfg;
  cfg.antennas = parse_count(next_token(in, "antenna count"), "antenna count", 2);
  cfg.rf_chains = parse_count(next_token(in, "RF chain count"), "RF chain count", 1);
  const int sweeps = parse_count(next_token(in, "sweep count"), "sweep count", 1);
  const int samples =
      parse_count(next_token(in, "sample count"), "sample count", 0);
  cfg.spacing_wavelengths = parse_double(next_token(in, "element spacing"));
  cfg.validate();
  CorrelationSet set;
  set.samples_per_beam = samples;
  const std::string source = next_token(in, "correlation source");
  if (source == "measured") {
    set.source = CorrelationSource::measured;
  } else if (source == "oracle") {
    set.source = CorrelationSource::oracle;
  } else {
    bad_format("correlation source '" + source + "'");
  }
  set.beams.resize(sweeps);
  for (int q = 0; q < sweeps; ++q) {
    CMatrix beam(cfg.rf_chains, cfg.rf_chains);
    for (int n1 = 0; n1 < cfg.rf_chains; ++n1) {
      for (int n2 = 0; n2 < cfg.rf_chains; ++n2) {
        beam(n1, n2) = parse_complex(next_token(in, "correlation entry"));
      }
    }
    set.beams[q] = std::move(beam);
  }
  return {cfg, set};
}

std::pair<ArrayConfig, CorrelationSet> load_correlations(const std::string& path) {
  auto in = open_in(path);
  return load_correlations(in);
}

void save_snapshots(std::ostream& out, const SnapshotBatch& batch) {
  if (batch.data.rows() < 1 || batch.data.cols() < 1) {
    throw std::invalid_argument("snapshot batch is empty");
  }
  out << batch.data.rows() << ' ' << batch.data.cols() << '\n';
  for (Eigen::Index m = 0; m < batch.data.rows(); ++m) {
    for (Eigen::Index k = 0; k < batch.data.cols(); ++k) {
      if (k > 0) out << ' ';
      out << format_complex(batch.data(m, k));
    }
    out << '\n';
  }
}

void save_snapshots(const std::string& path, const SnapshotBatch& batch) {
  auto out = open_out(path);
  save_snapshots(out, batch);
}

SnapshotBatch load_snapshots(std::istream& in) {
  const int rows = parse_count(next_token(in, "antenna count"), "antenna count", 1);
  const int cols = parse_count(next_token(in, "sample count"), "sample count", 1);
  SnapshotBatch batch;
  batch.data.resize(rows, cols);
  for (int m = 0; m < rows; ++m) {
    for (int k = 0; k < cols; ++k) {
      batch.data(m, k) = parse_complex(next_token(in, "snapshot entry"));
    }
  }
  return batch;
}

SnapshotBatch load_snapshots(const std::string& path) {
  auto in = open_in(path);
  return load_snapshots(in);
}

std::string spectrum_csv(const MusicSpectrum& spectrum) {
  std::string out = "theta_deg,p_theta\n";
  for (std::size_t i = 0; i < spectrum.grid_deg.size(); ++i) {
    out += format_double(spectrum.grid_deg[i]);
    out += ',';
    out += format_double(spectrum.values[i]);
    out += '\n';
  }
  return out;
}

std::string doa_csv(const DoaEstimate& estimate) {
  std::string out = "doa_deg\n";
  for (double angle : estimate.angles_deg) {
    out += format_double(angle);
    out += '\n';
  }
  return out;
}

}  // namespace scmsweep
