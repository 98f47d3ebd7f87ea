#include "tagsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace tagsim {

double r2_score(std::span<const double> y, std::span<const double> yhat) {
  if (y.size() != yhat.size()) throw std::invalid_argument("r2_score: length mismatch");
  if (y.size() < 2) throw std::invalid_argument("r2_score: need at least 2 values");
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - yhat[i];
    const double d = y[i] - mean;
    ss_res += r * r;
    ss_tot += d * d;
  }
  if (ss_tot == 0.0) throw std::invalid_argument("r2_score: constant y has zero total variance");
  return 1.0 - ss_res / ss_tot;
}

double rmse(std::span<const double> y, std::span<const double> yhat) {
  if (y.size() != yhat.size()) throw std::invalid_argument("rmse: length mismatch");
  if (y.empty()) throw std::invalid_argument("rmse: empty input");
  double ss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = yhat[i] - y[i];
    ss += r * r;
  }
  return std::sqrt(ss / static_cast<double>(y.size()));
}

}  // namespace tagsim
