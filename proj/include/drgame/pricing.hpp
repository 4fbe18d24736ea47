#pragma once

#include <vector>

#include "drgame/domain.hpp"

namespace drgame {

/// Time-varying quadratic utility cost a·l² + b·l + c per slot.
struct CostCoefficients {
  std::vector<double> a;  // currency/kWh²
  std::vector<double> b;  // currency/kWh
  std::vector<double> c;  // currency

  [[nodiscard]] std::size_t slots() const { return b.size(); }
  /// Throws InvalidCoefficients on negative a or b, or ragged lengths.
  void validate() const;
};

/// Base-rate tier over [start_h, end_h).
struct TouTier {
  double start_h = 0.0;
  double end_h = 0.0;
  double rate = 0.0;
};

struct TariffSettings {
  std::vector<TouTier> tou_tiers{{0, 7, 0.08}, {7, 18, 0.12}, {18, 22, 0.20}, {22, 24, 0.12}};
  double a_coeff = 0.002;
  double c_coeff = 0.0;
};

/// Expands tiers to per-slot coefficients. A slot takes the rate of the tier
/// containing its start; slots covered by no tier throw InvalidConfig.
CostCoefficients make_coefficients(const TariffSettings& tariff, const TimeGrid& grid);

struct PriceSignal {
  std::vector<double> price;  // currency/kWh
};

/// Prosumer generation per slot and the rate it is paid at.
struct GenerationProfile {
  std::vector<double> energy_kwh;
  double revenue_rate = 0.0;

  [[nodiscard]] double total() const;
};

std::vector<double> utility_cost(const LoadVector& load, const CostCoefficients& coeffs);

/// Marginal utility cost a·l + b: the TOU base rate plus a congestion term.
PriceSignal realtime_price(const LoadVector& load, const CostCoefficients& coeffs);

double consumer_energy_cost(const PriceSignal& price, const ConsumptionProfile& profile);

double prosumer_revenue(const GenerationProfile& gen);

/// Half-sine between 07:00 and 19:00 peaking at `peak_kw`, in kWh per slot.
std::vector<double> solar_generation(const TimeGrid& grid, double peak_kw);

// Slot-level kernels shared by the evaluators above; kept inline so hot loops
// reproduce the free functions bit for bit.
inline double price_at(double load, double a, double b) { return a * load + b; }

}  // namespace drgame
