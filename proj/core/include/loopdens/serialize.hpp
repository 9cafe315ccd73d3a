#pragma once

#include <string>

#include "loopdens/asymptotics.hpp"
#include "loopdens/densities.hpp"

namespace loopdens {

/// Deterministic, locale-independent serialization. Exact rationals render
/// as "num/den"; floats in scientific notation with the digit count in the
/// "digits" field.
std::string density_to_json(const DensityResult& r);
std::string density_to_csv(const DensityResult& r); // m,n,l,mode,digits,nu_c,nu_nc,nu
DensityResult density_from_json(const std::string& text);

std::string fit_to_json(const FitResult& r);
std::string angle_fit_to_json(const AngleCoefficients& c, const std::vector<FitResult>& sweep);

/// CSV row for sweep output: m,n,l,s2,nu,scaled_deviation.
std::string sweep_csv_row(const DensitySample& sample, long display_digits);

std::string error_json(const std::string& type, const std::string& message);

} // namespace loopdens
