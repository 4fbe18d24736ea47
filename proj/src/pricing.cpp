#include "drgame/pricing.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace drgame {
namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + " has " + std::to_string(got) +
                                               " slots, expected " + std::to_string(want));
  }
}

}  // namespace

void CostCoefficients::validate() const {
  if (a.size() != b.size() || c.size() != b.size()) {
    throw Error(ErrorCode::InvalidCoefficients, "a, b and c must have equal lengths");
  }
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (!(a[t] >= 0.0) || !(b[t] >= 0.0)) {
      throw Error(ErrorCode::InvalidCoefficients, "a and b must be non-negative (slot " +
                                                      std::to_string(t) + ")");
    }
  }
}

CostCoefficients make_coefficients(const TariffSettings& tariff, const TimeGrid& grid) {
  const auto n = static_cast<std::size_t>(grid.slots_per_day);
  CostCoefficients k{std::vector<double>(n, tariff.a_coeff), std::vector<double>(n, 0.0),
                     std::vector<double>(n, tariff.c_coeff)};
  for (std::size_t t = 0; t < n; ++t) {
    const double hour = grid.to_hours(static_cast<int>(t));
    bool covered = false;
    for (const auto& tier : tariff.tou_tiers) {
      if (hour >= tier.start_h && hour < tier.end_h) {
        k.b[t] = tier.rate;
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw Error(ErrorCode::InvalidConfig, "no TOU tier covers hour " + std::to_string(hour));
    }
  }
  k.validate();
  return k;
}

double GenerationProfile::total() const {
  return std::accumulate(energy_kwh.begin(), energy_kwh.end(), 0.0);
}

std::vector<double> utility_cost(const LoadVector& load, const CostCoefficients& coeffs) {
  require_length(load.energy_kwh.size(), coeffs.slots(), "load");
  std::vector<double> out(load.energy_kwh.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    const double l = load.energy_kwh[t];
    out[t] = coeffs.a[t] * l * l + coeffs.b[t] * l + coeffs.c[t];
  }
  return out;
}

PriceSignal realtime_price(const LoadVector& load, const CostCoefficients& coeffs) {
  require_length(load.energy_kwh.size(), coeffs.slots(), "load");
  PriceSignal p{std::vector<double>(load.energy_kwh.size())};
  for (std::size_t t = 0; t < p.price.size(); ++t) {
    p.price[t] = price_at(load.energy_kwh[t], coeffs.a[t], coeffs.b[t]);
  }
  return p;
}

double consumer_energy_cost(const PriceSignal& price, const ConsumptionProfile& profile) {
  require_length(profile.energy_kwh.size(), price.price.size(), "profile");
  double cost = 0.0;
  for (std::size_t t = 0; t < price.price.size(); ++t) cost += price.price[t] * profile.energy_kwh[t];
  return cost;
}

double prosumer_revenue(const GenerationProfile& gen) {
  double revenue = 0.0;
  for (double e : gen.energy_kwh) revenue += gen.revenue_rate * e;
  return revenue;
}

std::vector<double> solar_generation(const TimeGrid& grid, double peak_kw) {
  constexpr double sunrise = 7.0;
  constexpr double sunset = 19.0;
  std::vector<double> out(static_cast<std::size_t>(grid.slots_per_day), 0.0);
  for (std::size_t t = 0; t < out.size(); ++t) {
    // Mid-slot sample of the half-sine.
    const double h = grid.to_hours(static_cast<int>(t)) + 0.5 * grid.slot_hours;
    if (h > sunrise && h < sunset) {
      out[t] = peak_kw * std::sin(std::numbers::pi * (h - sunrise) / (sunset - sunrise)) *
               grid.slot_hours;
    }
  }
  return out;
}

}  // namespace drgame
