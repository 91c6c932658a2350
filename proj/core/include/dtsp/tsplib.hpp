#pragma once

/**
 * @file tsplib.hpp
 * @brief TSPLIB95 EXPLICIT / FULL_MATRIX writer and reader.
 *
 * Costs are scaled and rounded to integers: down for lower-bound instances
 * (an optimum of the rounded matrix, divided by the scale, never exceeds the
 * true optimum) and up for upper-bound instances. Excluded arcs get one more
 * than the sum of all finite rounded entries, so no optimal tour uses one
 * while a finite tour exists. The value is recorded in a COMMENT line.
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dtsp/gtsp.hpp"

namespace dtsp {

struct TsplibMatrix {
  std::string name;
  std::string type;  ///< "TSP" or "ATSP"
  std::size_t dimension = 0;
  std::vector<std::string> comments;
  std::vector<std::int64_t> weights;  ///< dimension x dimension row-major
};

struct TsplibOptions {
  std::string name = "dtsp";
  bool symmetric = false;
  BoundMode mode = BoundMode::lower;
  double scale = 1000.0;
  double shift = 0.0;  ///< Noon-Bean M, recorded in a comment
};

/// Rounds a real matrix as described above.
TsplibMatrix to_tsplib(const std::vector<double>& cost, std::size_t n, const TsplibOptions& options);

/// Writes the file; throws IoError if the path cannot be written.
void write_tsplib(const TsplibMatrix& m, const std::filesystem::path& path);
std::string format_tsplib(const TsplibMatrix& m);

/// Parses EXPLICIT FULL_MATRIX files; throws IoError on unreadable or malformed input.
TsplibMatrix read_tsplib(const std::filesystem::path& path);
TsplibMatrix parse_tsplib(const std::string& text);

}  // namespace dtsp
