#include "arspec/matrix.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace arspec {

template <typename T>
std::string to_csv(const SquareMatrix<T>& m) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

template <typename T>
std::string to_json(const SquareMatrix<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    auto r = m.row(i);
    rows.push_back(std::vector<T>(r.begin(), r.end()));
  }
  return nlohmann::json{{"order", m.order()}, {"entries", rows}}.dump();
}

RealMatrix real_matrix_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  const auto order = doc.at("order").get<std::size_t>();
  const auto& rows = doc.at("entries");
  if (rows.size() != order) throw Error(ErrorKind::Parse, "entries row count does not match order");
  RealMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (rows[i].size() != order) throw Error(ErrorKind::Parse, "ragged entries row");
    for (std::size_t j = 0; j < order; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

template std::string to_csv(const IntMatrix&);
template std::string to_csv(const RealMatrix&);
template std::string to_json(const IntMatrix&);
template std::string to_json(const RealMatrix&);

}  // namespace arspec
