#include "qbound/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

using nlohmann::json;

Eigen::MatrixXd parse_real_matrix(const json& arr, int dim, const char* key) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    fail(ErrorCode::IoError, std::string("'") + key + "' must be a " + std::to_string(dim) + "x" +
                                 std::to_string(dim) + " array");
  Eigen::MatrixXd out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = arr[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(ErrorCode::IoError, std::string("row ") + std::to_string(i) + " of '" + key +
                                   "' must have " + std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_number())
        fail(ErrorCode::IoError, std::string("non-numeric entry in '") + key + "'");
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

}  // namespace

BipartiteDensityMatrix read_state_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail(ErrorCode::IoError, "invalid JSON in '" + path + "': " + e.what());
  }
  if (!doc.contains("m") || !doc.contains("n") || !doc.contains("re"))
    fail(ErrorCode::IoError, "'" + path + "' must contain keys m, n, re");
  if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer())
    fail(ErrorCode::IoError, "m and n must be integers");
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  if (m < 2 || n < 2 || m * n > 64)
    fail(ErrorCode::BadDimension, "state dimensions must satisfy 2 <= m, n and mn <= 64");
  const int dim = m * n;
  const Eigen::MatrixXd re = parse_real_matrix(doc["re"], dim, "re");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(dim, dim);
  if (doc.contains("im")) im = parse_real_matrix(doc["im"], dim, "im");
  Eigen::MatrixXcd mat(dim, dim);
  mat.real() = re;
  mat.imag() = im;
  return make_density(mat, m, n, path);
}

void write_state_json(const BipartiteDensityMatrix& rho, const std::string& path) {
  const int dim = rho.dim();
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < dim; ++i) {
    json rrow = json::array();
    json irow = json::array();
    for (int j = 0; j < dim; ++j) {
      rrow.push_back(rho.mat(i, j).real());
      irow.push_back(rho.mat(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  json doc;
  doc["m"] = rho.m;
  doc["n"] = rho.n;
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + tmp + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) fail(ErrorCode::IoError, "write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(ErrorCode::IoError, "cannot rename '" + tmp + "' to '" + path + "'");
}

std::string format_cell(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ostringstream body;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) body << ',';
    body << header[i];
  }
  body << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size())
      fail(ErrorCode::IoError, "CSV row width does not match the header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) body << ',';
      body << format_cell(row[i]);
    }
    body << '\n';
  }

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + tmp + "' for writing");
    out << body.str();
    if (!out) fail(ErrorCode::IoError, "write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(ErrorCode::IoError, "cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace qbound
