#pragma once

#include <span>

namespace tagsim {

// Coefficient of determination: 1 - SS_res / SS_tot. Zero for the constant
// mean predictor, negative for models worse than it. Throws on length
// mismatch, fewer than 2 values, or constant y (zero denominator).
double r2_score(std::span<const double> y, std::span<const double> yhat);

// sqrt(mean squared error). Throws on length mismatch or empty input.
double rmse(std::span<const double> y, std::span<const double> yhat);

}  // namespace tagsim
