#include "phaselab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace phaselab::io {
namespace {

Complex entry(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw InputError("expected a number or an [re, im] pair, got " + e.dump());
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Signal signal_from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_object() && j.contains("signal") ? j["signal"] : j;
  if (!arr.is_array() || arr.empty()) throw InputError("signal must be a non-empty JSON array");
  Signal x(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) x(static_cast<Eigen::Index>(i)) = entry(arr[i]);
  return x;
}

nlohmann::json signal_to_json(const Signal& x) {
  const bool real = (x.imag().array() == 0.0).all();
  auto out = nlohmann::json::array();
  for (const Complex& v : x) {
    if (real)
      out.push_back(v.real());
    else
      out.push_back({v.real(), v.imag()});
  }
  return out;
}

Signal parse_signal(const std::string& text) {
  try {
    return signal_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed signal JSON: ") + e.what());
  }
}

Signal read_signal(const std::string& path) { return parse_signal(read_file(path)); }

SensingMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw InputError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXcd a(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InputError("matrix row " + std::to_string(r + 1) + " has the wrong length");
    for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = entry(row[static_cast<std::size_t>(c)]);
  }
  if ((a.imag().array() == 0.0).all()) return SensingMatrix::real(a.real());
  return SensingMatrix::complex(a);
}

SensingMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      cell = trim(cell);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw InputError("CSV line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("CSV line " + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw InputError("CSV matrix is empty");
  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      a(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return SensingMatrix::real(a);
}

SensingMatrix read_matrix(const std::string& path) {
  const std::string text = read_file(path);
  if (!ends_with(path, ".json")) return matrix_from_csv(text);
  try {
    return matrix_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  auto out = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

SupportSet parse_support(const std::string& text, int n) {
  std::vector<int> idx;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) continue;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) throw InputError("support: not an integer: '" + cell + "'");
    idx.push_back(v);
  }
  try {
    return SupportSet(std::move(idx), n);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

nlohmann::json support_to_json(const SupportSet& s) { return s.indices(); }

}  // namespace phaselab::io
