#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphspectra/energy.hpp"
#include "graphspectra/graph.hpp"

namespace graphspectra {

enum class GraphFormat { automatic, edgelist, matrixmarket };

/// Loads a whitespace edge list ("i j [w]", 1-based, '#' comments) or a
/// MatrixMarket coordinate file. Symmetric closure with conflict
/// detection: the same pair listed with two different weights is an
/// error. Unknown formats are chosen by extension (.mtx).
Graph load_graph(const std::string& path,
                 GraphFormat format = GraphFormat::automatic);

/// Shortest-round-trip decimal formatting: 17 significant digits, '.'
/// separator regardless of locale.
std::string format_sig17(double v);

struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;
};

/// Writes a numeric CSV with LF line endings and 17-significant-digit
/// values.
void save_csv(const std::string& path, const std::vector<std::string>& header,
              const Eigen::MatrixXd& values);

CsvTable load_csv(const std::string& path);

/// Signal sets round-trip through CSV with labels in the header row.
void save_signals(const std::string& path, const SignalSet& set);
SignalSet load_signals(const std::string& path);

/// FNV-1a 64-bit hash, used for config fingerprints in metadata files.
std::uint64_t fnv1a64(std::string_view text);

}  // namespace graphspectra
