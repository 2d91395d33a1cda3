#pragma once

#include "phaselab/core.hpp"
#include "phaselab/measure.hpp"

#include <json.hpp>

#include <string>

namespace phaselab::io {

/// Unreadable or malformed user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/// Entries are plain numbers or [re, im] pairs.
Signal signal_from_json(const nlohmann::json& j);
/// Plain numbers when every imaginary part is zero, [re, im] pairs otherwise.
nlohmann::json signal_to_json(const Signal& x);

Signal parse_signal(const std::string& text);
Signal read_signal(const std::string& path);

/// Row-major JSON array of rows, entries as in signal_from_json.
SensingMatrix matrix_from_json(const nlohmann::json& j);
/// Comma-separated real rows; blank lines and lines starting with '#' are skipped.
SensingMatrix matrix_from_csv(const std::string& text);
/// Dispatches on the extension: .json is JSON, anything else CSV.
SensingMatrix read_matrix(const std::string& path);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);

/// "0,1,2,5" -> SupportSet over [0, n-1].
SupportSet parse_support(const std::string& text, int n);
nlohmann::json support_to_json(const SupportSet& s);

}  // namespace phaselab::io
