#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergtop/carleson.hpp"
#include "bergtop/io.hpp"
#include "bergtop/spectral.hpp"
#include "bergtop/symbols.hpp"

namespace bergtop {

/// Run-wide configuration; flags override config-file values which override
/// these defaults.
struct RunConfig {
  int dim = 64;
  int n_radial = 64;
  int n_theta = 256;
  double p = 1.0 / 9.0;
  double tol = 1e-12;
  std::uint64_t seed = 12345;
  std::string format = "csv";  // csv | json
  std::string out;             // empty: stdout

  DiskRule make_rule() const { return DiskRule::make(n_radial, n_theta); }
};

void apply_config_json(RunConfig& cfg, const io::json& j);

/// Serializable profile a(t) on the positive half-line (vertical symbols).
struct HalfLineProfile {
  enum class Kind { Const, Chi, ExpDecay };
  Kind kind = Kind::Const;
  double value = 1.0;  // Const
  double h = 1.0;      // Chi: indicator of [0, h]
  double operator()(double t) const;
  std::vector<double> breakpoints() const {
    return kind == Kind::Chi ? std::vector<double>{h} : std::vector<double>{};
  }
};

/// Serializable profile a(theta) on [0, pi] (angular symbols).
struct AngleProfile {
  enum class Kind { Const, Chi };
  Kind kind = Kind::Const;
  double value = 1.0;
  double theta1 = 1.5707963267948966;  // Chi: indicator of [0, theta1]
  double operator()(double theta) const;
  std::vector<double> breakpoints() const {
    return kind == Kind::Chi ? std::vector<double>{theta1} : std::vector<double>{};
  }
};

// Named experiments (the `identity` column states the identity each row
// checks). All deterministic for a fixed config.
io::Table experiment_p0_approx(const RunConfig& cfg, int n_max);
io::Table experiment_gamma_radial(const RunConfig& cfg, const RadialProfile& a,
                                  int count);
io::Table experiment_gamma_vertical(const RunConfig& cfg,
                                    const HalfLineProfile& a,
                                    const RealVec& grid);
io::Table experiment_gamma_angular(const RunConfig& cfg, const AngleProfile& a,
                                   const RealVec& grid);
io::Table experiment_kcarleson(const RunConfig& cfg, const Symbol& measure,
                               const std::vector<double>& orders);
io::Table experiment_afn_type(const RunConfig& cfg,
                              const MeasureCollection& collection, int window,
                              SeriesReport* report_out = nullptr);
io::Table experiment_decay(const RunConfig& cfg, double r1, int count,
                           DecayReport* report_out = nullptr);
io::Table experiment_weak_compress(const RunConfig& cfg, const Symbol& symbol,
                                   const AnalyticPoly& f,
                                   const std::vector<Complex>& points);
io::Table experiment_oscillation(const RunConfig& cfg, const SpectralData& data,
                                 const RealVec& deltas);

std::vector<std::string> experiment_names();

/// Hyperfunction model at the origin: weights m_{l,j} = 4^{-(l+j)} / (l! j!)
/// for l, j < order, as a derivative-delta symbol and as the matching
/// measure collection (point masses at 0, ordered by l+j).
DerivativeDeltaCollection hyperfunction_origin_symbol(int order);
MeasureCollection hyperfunction_origin_collection(int order);

}  // namespace bergtop
