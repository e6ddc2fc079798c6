#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lgkit/errors.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/tensor.hpp"

namespace lgkit {

namespace {

using nlohmann::json;

RationalFn entry(const json& j, const std::string& field) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return RationalFn(j.get<long>());
  throw ParseError("entries of '" + field + "' must be polynomial strings");
}

// Accepts a list of rows or, for the single-row / single-column maps, a flat list.
Matrix read_matrix(const json& doc, const std::string& field, int rows, int cols) {
  if (!doc.contains(field)) throw ParseError("fixture is missing '" + field + "'");
  const json& j = doc.at(field);
  if (!j.is_array()) throw ParseError("'" + field + "' must be an array");
  std::vector<RationalFn> data;
  const bool flat = !j.empty() && !j.front().is_array();
  if (flat) {
    for (const auto& e : j) data.push_back(entry(e, field));
  } else {
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("'" + field + "' mixes rows and entries");
      for (const auto& e : row) data.push_back(entry(e, field));
    }
  }
  if (data.size() != static_cast<std::size_t>(rows * cols)) {
    throw std::invalid_argument("'" + field + "' must have " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(data.size()));
  }
  if (!flat && j.size() != static_cast<std::size_t>(rows) && !(rows == 1 || cols == 1)) {
    throw std::invalid_argument("'" + field + "' must have " + std::to_string(rows) + " rows");
  }
  return Matrix(rows, cols, std::move(data));
}

json write_rows(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json write_flat(const Matrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c).to_string());
  }
  return out;
}

}  // namespace

TensorAssignment parse_fixture_unchecked(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("fixture is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.at("dim").is_number_integer()) {
    throw ParseError("fixture needs an integer 'dim'");
  }
  TensorAssignment a;
  a.dim = doc.at("dim").get<int>();
  if (a.dim < 1 || a.dim > 16) throw std::invalid_argument("fixture dimension must lie in 1..16");
  const int d2 = a.dim * a.dim;
  a.R = read_matrix(doc, "R", d2, d2);
  a.Rinv = read_matrix(doc, "Rinv", d2, d2);
  a.n = read_matrix(doc, "n", 1, d2);
  a.ntilde = read_matrix(doc, "ntilde", 1, d2);
  a.u = read_matrix(doc, "u", d2, 1);
  a.utilde = read_matrix(doc, "utilde", d2, 1);
  return a;
}

TensorAssignment parse_fixture(const std::string& json_text) {
  TensorAssignment a = parse_fixture_unchecked(json_text);
  ValidationReport report = validate(a);
  if (!report.all_passed()) {
    throw std::invalid_argument("fixture fails validation:\n" + report.to_string());
  }
  return a;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

TensorAssignment load_fixture(const std::string& path) { return parse_fixture(read_file(path)); }

TensorAssignment load_fixture_unchecked(const std::string& path) { return parse_fixture_unchecked(read_file(path)); }

std::string fixture_to_json(const TensorAssignment& a) {
  json doc;
  doc["dim"] = a.dim;
  doc["R"] = write_rows(a.R);
  doc["Rinv"] = write_rows(a.Rinv);
  doc["n"] = write_flat(a.n);
  doc["ntilde"] = write_flat(a.ntilde);
  doc["u"] = write_flat(a.u);
  doc["utilde"] = write_flat(a.utilde);
  return doc.dump(2) + "\n";
}

}  // namespace lgkit
