#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgini/distortion.hpp"
#include "specgini/endowment.hpp"
#include "specgini/geometry.hpp"
#include "specgini/mre.hpp"

namespace specgini {

// Built-in planar sampling models for the consistency experiment.
//   uniform2      independent uniforms on the unit square
//   gauss2:RHO    correlated Gaussian (mean 0.5, sd 0.15) clipped to [0,1]^2
//   point:A,B     degenerate one-point distribution
struct PlanarGenerator {
  std::string name;
  std::function<std::array<double, 2>(std::mt19937_64&)> draw;
  Window support;
};

inline PlanarGenerator parse_generator(const std::string& spec) {
  if (spec == "uniform2") {
    return {spec,
            [](std::mt19937_64& rng) {
              std::uniform_real_distribution<double> u(0.0, 1.0);
              const double x = u(rng), y = u(rng);
              return std::array<double, 2>{x, y};
            },
            Window{0.0, 1.0, 0.0, 1.0}};
  }
  if (spec.rfind("gauss2:", 0) == 0) {
    const double rho = std::stod(spec.substr(7));
    if (!(rho > -1.0) || !(rho < 1.0))
      throw std::invalid_argument("gauss2 correlation must lie in (-1,1)");
    const double comp = std::sqrt(1.0 - rho * rho);
    return {spec,
            [rho, comp](std::mt19937_64& rng) {
              std::normal_distribution<double> z(0.0, 1.0);
              const double z1 = z(rng), z2 = z(rng);
              const double x = 0.5 + 0.15 * z1;
              const double y = 0.5 + 0.15 * (rho * z1 + comp * z2);
              return std::array<double, 2>{std::clamp(x, 0.0, 1.0), std::clamp(y, 0.0, 1.0)};
            },
            Window{0.0, 1.0, 0.0, 1.0}};
  }
  if (spec.rfind("point:", 0) == 0) {
    const std::string tail = spec.substr(6);
    const auto comma = tail.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("point generator expects point:X,Y");
    const double a = std::stod(tail.substr(0, comma));
    const double b = std::stod(tail.substr(comma + 1));
    return {spec,
            [a, b](std::mt19937_64&) { return std::array<double, 2>{a, b}; },
            Window{a - 1.0, a + 1.0, b - 1.0, b + 1.0}};
  }
  throw std::invalid_argument("unknown generator spec '" + spec + "'");
}

struct LLNConfig {
  std::string generator = "uniform2";
  std::vector<std::size_t> n_grid;
  std::size_t repetitions = 20;
  std::uint64_t seed = 0;
  DistortionSpec distortion = DistortionSpec::donaldson_weymark(0.5);
  std::optional<Window> window;        // defaults to the generator's support box
  std::size_t angle_resolution = 512;  // directions used to sample each boundary
  std::size_t densify = 1024;
};

struct LLNRow {
  std::size_t n = 0;
  double median_hausdorff = 0.0;
};

namespace detail {

// Independent, reproducible substream per (grid position, repetition); the
// reference sample uses stream index 0. Results are therefore byte-identical
// for a fixed seed no matter how repetitions are scheduled.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

inline EndowmentMatrix draw_matrix(const PlanarGenerator& gen, std::size_t n, std::mt19937_64& rng) {
  std::vector<double> data;
  data.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = gen.draw(rng);
    data.push_back(row[0]);
    data.push_back(row[1]);
  }
  return EndowmentMatrix(n, 2, std::move(data));
}

}  // namespace detail

// Consistency experiment: for each n, draw `repetitions` samples, build the
// representative endowment of each, and report the median windowed
// Hausdorff distance to the representative endowment of one large reference
// sample of size 10 * max(n_grid), a stand-in for the population boundary.
inline std::vector<LLNRow> run_lln(const LLNConfig& cfg) {
  if (cfg.n_grid.empty()) throw std::invalid_argument("n grid must be nonempty");
  for (std::size_t k = 1; k < cfg.n_grid.size(); ++k)
    if (!(cfg.n_grid[k] > cfg.n_grid[k - 1]))
      throw std::invalid_argument("n grid must be strictly increasing");
  if (cfg.repetitions == 0) throw std::invalid_argument("need at least one repetition");
  if (!cfg.distortion.concave())
    throw std::domain_error("the consistency experiment needs a concave distortion");

  const PlanarGenerator gen = parse_generator(cfg.generator);
  const Window window = cfg.window.value_or(gen.support);

  auto ref_rng = detail::substream(cfg.seed, 0);
  const std::size_t ref_n = 10 * cfg.n_grid.back();
  const MREPolyline reference = mre_2d_sampled(detail::draw_matrix(gen, ref_n, ref_rng),
                                               cfg.distortion, cfg.angle_resolution);

  std::vector<LLNRow> rows;
  std::uint32_t stream = 1;
  for (std::size_t n : cfg.n_grid) {
    std::vector<double> distances;
    distances.reserve(cfg.repetitions);
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep, ++stream) {
      auto rng = detail::substream(cfg.seed, stream);
      const MREPolyline emp =
          mre_2d_sampled(detail::draw_matrix(gen, n, rng), cfg.distortion, cfg.angle_resolution);
      distances.push_back(hausdorff_polyline(emp, reference, window, cfg.densify));
    }
    std::sort(distances.begin(), distances.end());
    const std::size_t m = distances.size();
    const double median = (m % 2 == 1) ? distances[m / 2]
                                       : 0.5 * (distances[m / 2 - 1] + distances[m / 2]);
    rows.push_back({n, median});
  }
  return rows;
}

}  // namespace specgini
