// Copyright 2026 The qcorr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/json_io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace qcorr {

namespace {

nlohmann::json real_grid(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd grid_from_json(const nlohmann::json& j, Eigen::Index rows,
                               Eigen::Index cols, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(rows) +
                          " rows");
  }
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const nlohmann::json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidArgument(std::string(what) + ": row " + std::to_string(i) +
                            " has wrong length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
    }
  }
  return m;
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  return nlohmann::json{{"dim", m.rows()},
                        {"re", real_grid(m.real())},
                        {"im", real_grid(m.imag())}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  if (dim < 1) throw InvalidArgument("operator dim must be >= 1");
  const Eigen::MatrixXd re = grid_from_json(j.at("re"), dim, dim, "re");
  const Eigen::MatrixXd im = grid_from_json(j.at("im"), dim, dim, "im");
  ComplexMatrix m = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
  if (!finite_entries(m)) throw InvalidArgument("operator has non-finite entries");
  return m;
}

nlohmann::json vector_to_json(const ComplexVector& v) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return nlohmann::json{{"dim", v.size()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexVector vector_from_json(const nlohmann::json& j) {
  const Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  const nlohmann::json& re = j.at("re");
  const nlohmann::json& im = j.at("im");
  // Accept a dim x 1 operator-style payload as well as flat arrays.
  if (!re.empty() && re.at(0).is_array()) {
    const ComplexMatrix m = matrix_from_json(j);
    return m.col(0);
  }
  if (static_cast<Eigen::Index>(re.size()) != dim ||
      static_cast<Eigen::Index>(im.size()) != dim) {
    throw InvalidArgument("vector re/im length must equal dim");
  }
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(re.at(static_cast<std::size_t>(i)).get<double>(),
                   im.at(static_cast<std::size_t>(i)).get<double>());
  }
  return v;
}

nlohmann::json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.mat()); }

DensityMatrix state_from_json(const nlohmann::json& j, const ToleranceProfile& tol) {
  return DensityMatrix(matrix_from_json(j), tol);
}

nlohmann::json observable_to_json(const Observable& a) { return matrix_to_json(a.mat()); }

Observable observable_from_json(const nlohmann::json& j, double cluster_tol,
                                double herm_tol) {
  return make_observable(matrix_from_json(j), cluster_tol, herm_tol);
}

nlohmann::json instrument_to_json(const Instrument& m) {
  nlohmann::json outcomes = nlohmann::json::array();
  for (const Outcome& out : m.outcomes()) {
    nlohmann::json kraus = nlohmann::json::array();
    for (const ComplexMatrix& k : out.kraus) kraus.push_back(matrix_to_json(k));
    nlohmann::json entry{{"label", out.label}, {"kraus", std::move(kraus)}};
    if (out.value) entry["value"] = *out.value;
    outcomes.push_back(std::move(entry));
  }
  return nlohmann::json{{"outcomes", std::move(outcomes)}};
}

Instrument instrument_from_json(const nlohmann::json& j, const ToleranceProfile& tol) {
  std::vector<Outcome> outcomes;
  for (const nlohmann::json& entry : j.at("outcomes")) {
    Outcome out;
    out.label = entry.at("label").get<std::string>();
    for (const nlohmann::json& k : entry.at("kraus")) {
      out.kraus.push_back(matrix_from_json(k));
    }
    if (entry.contains("value")) out.value = entry.at("value").get<double>();
    outcomes.push_back(std::move(out));
  }
  return Instrument(std::move(outcomes), tol);
}

nlohmann::json qjp_to_json(const QjpTable& table) {
  return nlohmann::json{{"rep", table.rep.to_string()},
                        {"a", table.a_values},
                        {"b", table.b_values},
                        {"w_re", real_grid(table.weights.real())},
                        {"w_im", real_grid(table.weights.imag())}};
}

QjpTable qjp_from_json(const nlohmann::json& j) {
  QjpTable table;
  table.rep = Representation::parse(j.at("rep").get<std::string>());
  table.a_values = j.at("a").get<std::vector<double>>();
  table.b_values = j.at("b").get<std::vector<double>>();
  const Eigen::Index rows = static_cast<Eigen::Index>(table.a_values.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(table.b_values.size());
  const Eigen::MatrixXd re = grid_from_json(j.at("w_re"), rows, cols, "w_re");
  const Eigen::MatrixXd im = grid_from_json(j.at("w_im"), rows, cols, "w_im");
  table.weights = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
  return table;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file '" + path + "'");
  nlohmann::json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string format_double(double value) {
  char buf[64];
  const std::to_chars_result res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw NumericalFailure("double formatting failed");
  return std::string(buf, res.ptr);
}

}  // namespace qcorr
