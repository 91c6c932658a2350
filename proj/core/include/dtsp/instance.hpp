#pragma once

/**
 * @file instance.hpp
 * @brief Problem instances, their JSON files, and heading partitions.
 *
 * Instance JSON: {"name", "extent", "rho", "seed", "targets": [[x, y], ...]} in
 * that order, floats printed with 17 significant digits. The file, not the
 * generator, is the artifact of record.
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dtsp/dubins.hpp"
#include "dtsp/gtsp.hpp"

namespace dtsp {

struct ProblemInstance {
  std::string name;
  double extent = 1000.0;
  double rho = 100.0;
  std::uint64_t seed = 0;
  std::vector<Point> targets;
};

/// n points drawn from mt19937_64(seed); each coordinate is
/// extent * (next() >> 11) * 2^-53, x before y.
ProblemInstance generate_instance(std::size_t n, double extent, double rho, std::uint64_t seed);

/// Checks rho > 0, n >= 1 and every target inside [0, extent]^2.
void validate_instance(const ProblemInstance& inst);

std::string to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const std::string& text);
void write_instance(const ProblemInstance& inst, const std::filesystem::path& path);
ProblemInstance read_instance(const std::filesystem::path& path);

/// [2pi j/m, 2pi (j+1)/m] for j = 0..m-1. Nested across m and 2m.
Partition uniform_partition(std::size_t m);

enum class HeadingPlacement : std::uint8_t { endpoints, midpoints };

/// k headings 2pi j/k (endpoints) or 2pi (j + 1/2)/k (midpoints).
std::vector<double> uniform_headings(std::size_t k, HeadingPlacement placement = HeadingPlacement::endpoints);

/// printf("%.17g") of a double.
std::string format_double(double v);

}  // namespace dtsp
