#include "graphspectra/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace graphspectra {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& text, const std::string& where) {
  const std::string t = strip(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0') {
    fail(errc::parse_error, where + ": bad number '" + t + "'");
  }
  return v;
}

long parse_long(const std::string& text, const std::string& where) {
  const std::string t = strip(text);
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (end == t.c_str() || *end != '\0') {
    fail(errc::parse_error, where + ": bad integer '" + t + "'");
  }
  return v;
}

/// Accumulates undirected pairs; the same pair with conflicting weights
/// is rejected.
class EdgeAccumulator {
 public:
  void add(long i, long j, double w, const std::string& where) {
    if (i == j) fail(errc::self_loop, where + ": self-loop on vertex " +
                                          std::to_string(i));
    if (i < 1 || j < 1) {
      fail(errc::index_out_of_range, where + ": vertex indices are 1-based");
    }
    const auto key = std::minmax(i, j);
    auto [it, inserted] = edges_.emplace(key, w);
    if (!inserted && it->second != w) {
      fail(errc::asymmetric_weight,
           where + ": edge (" + std::to_string(key.first) + ", " +
               std::to_string(key.second) + ") listed with weights " +
               format_sig17(it->second) + " and " + format_sig17(w));
    }
    max_index_ = std::max({max_index_, i, j});
  }

  Graph build(long declared_n = 0) const {
    if (edges_.empty()) fail(errc::parse_error, "no edges found");
    const long n = std::max(declared_n, max_index_);
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [key, w] : edges_) {
      edges.push_back({static_cast<int>(key.first - 1),
                       static_cast<int>(key.second - 1), w});
    }
    return Graph(static_cast<int>(n), std::move(edges));
  }

 private:
  std::map<std::pair<long, long>, double> edges_;
  long max_index_ = 0;
};

Graph load_edgelist(std::ifstream& in, const std::string& path) {
  EdgeAccumulator acc;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string si, sj, sw, extra;
    fields >> si >> sj;
    const std::string where = path + ":" + std::to_string(line_no);
    if (sj.empty()) fail(errc::parse_error, where + ": expected 'i j [w]'");
    double w = 1.0;
    if (fields >> sw) {
      w = parse_double(sw, where);
      if (fields >> extra) fail(errc::parse_error, where + ": trailing tokens");
    }
    acc.add(parse_long(si, where), parse_long(sj, where), w, where);
  }
  return acc.build();
}

Graph load_matrixmarket(std::ifstream& in, const std::string& path) {
  std::string banner;
  if (!std::getline(in, banner) || banner.rfind("%%MatrixMarket", 0) != 0) {
    fail(errc::parse_error, path + ": missing MatrixMarket banner");
  }
  std::istringstream fields(banner);
  std::string tag, object, format, field, symmetry;
  fields >> tag >> object >> format >> field >> symmetry;
  if (object != "matrix" || format != "coordinate") {
    fail(errc::parse_error, path + ": need a coordinate matrix");
  }
  const bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer") {
    fail(errc::parse_error, path + ": unsupported field type '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    fail(errc::parse_error,
         path + ": unsupported symmetry '" + symmetry + "'");
  }

  std::string line;
  long line_no = 1;
  long rows = 0, cols = 0, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty() || line[0] == '%') continue;
    std::istringstream dims(line);
    if (!(dims >> rows >> cols >> nnz)) {
      fail(errc::parse_error,
           path + ":" + std::to_string(line_no) + ": bad size line");
    }
    break;
  }
  if (nnz < 0) fail(errc::parse_error, path + ": missing size line");
  if (rows != cols) {
    fail(errc::parse_error, path + ": adjacency matrix must be square");
  }

  EdgeAccumulator acc;
  long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty() || line[0] == '%') continue;
    const std::string where = path + ":" + std::to_string(line_no);
    std::istringstream entry(line);
    long i = 0, j = 0;
    double w = 1.0;
    if (!(entry >> i >> j)) fail(errc::parse_error, where + ": bad entry");
    if (!pattern && !(entry >> w)) {
      fail(errc::parse_error, where + ": missing value");
    }
    if (i > rows || j > cols) {
      fail(errc::index_out_of_range, where + ": entry outside matrix");
    }
    acc.add(i, j, w, where);
    ++seen;
  }
  if (seen != nnz) {
    fail(errc::parse_error,
         path + ": entry count " + std::to_string(seen) +
             " does not match declared " + std::to_string(nnz));
  }
  return acc.build(rows);
}

}  // namespace

Graph load_graph(const std::string& path, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    format = path.size() >= 4 && path.substr(path.size() - 4) == ".mtx"
                 ? GraphFormat::matrixmarket
                 : GraphFormat::edgelist;
  }
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return format == GraphFormat::matrixmarket ? load_matrixmarket(in, path)
                                             : load_edgelist(in, path);
}

std::string format_sig17(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void save_csv(const std::string& path, const std::vector<std::string>& header,
              const Eigen::MatrixXd& values) {
  if (static_cast<Eigen::Index>(header.size()) != values.cols()) {
    fail(errc::invalid_parameters, "header does not match column count");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << (c ? "," : "") << header[c];
  }
  out << '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      out << (c ? "," : "") << format_sig17(values(r, c));
    }
    out << '\n';
  }
  if (!out) fail(errc::parse_error, "write failed for '" + path + "'");
}

CsvTable load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) fail(errc::parse_error, path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  CsvTable table;
  table.header = split_fields(line, ',');
  const std::size_t n_cols = table.header.size();

  std::vector<double> flat;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line, ',');
    if (fields.size() != n_cols) {
      fail(errc::parse_error,
           path + ":" + std::to_string(line_no) + ": expected " +
               std::to_string(n_cols) + " fields");
    }
    for (const std::string& f : fields) {
      flat.push_back(
          parse_double(f, path + ":" + std::to_string(line_no)));
    }
  }
  const Eigen::Index rows =
      static_cast<Eigen::Index>(flat.size() / n_cols);
  table.values.resize(rows, static_cast<Eigen::Index>(n_cols));
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
      table.values(r, c) = flat[static_cast<std::size_t>(r) * n_cols +
                                static_cast<std::size_t>(c)];
    }
  }
  return table;
}

void save_signals(const std::string& path, const SignalSet& set) {
  if (static_cast<int>(set.labels.size()) != set.count()) {
    fail(errc::invalid_parameters, "signal set labels are incomplete");
  }
  for (const std::string& label : set.labels) {
    if (label.find(',') != std::string::npos) {
      fail(errc::invalid_parameters, "labels must not contain commas");
    }
  }
  save_csv(path, set.labels, set.signals);
}

SignalSet load_signals(const std::string& path) {
  CsvTable table = load_csv(path);
  SignalSet set;
  set.labels = std::move(table.header);
  set.signals = std::move(table.values);
  set.normalized = false;
  if (set.count() == 0 || set.size() == 0) {
    fail(errc::parse_error, path + ": no signals");
  }
  return set;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char ch : text) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace graphspectra
