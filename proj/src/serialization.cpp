#include "cqg/serialization.hpp"

#include <fstream>
#include <stdexcept>

namespace cqg {

namespace {

Json real_part(const MatrixC& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json imag_part(const MatrixC& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).imag());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json matrix_to_json(const MatrixC& m) { return Json{{"re", real_part(m)}, {"im", imag_part(m)}}; }

MatrixC matrix_from_json(const Json& re, const Json& im) {
  const auto rows = static_cast<Eigen::Index>(re.size());
  if (im.size() != re.size()) throw std::invalid_argument("matrix: re/im row count mismatch");
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(re[0].size());
  MatrixC m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(re[i].size()) != cols ||
        static_cast<Eigen::Index>(im[i].size()) != cols) {
      throw std::invalid_argument("matrix: ragged rows");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = cd(re[i][j].get<double>(), im[i][j].get<double>());
    }
  }
  return m;
}

Json to_json(const DualDescriptor& dual) {
  Json irreps = Json::array();
  for (const auto& irrep : dual.irreps()) {
    irreps.push_back(Json{{"label", irrep.label()}, {"n", irrep.n()}, {"q_diag", irrep.q_diag()}});
  }
  return Json{{"name", dual.name()}, {"irreps", std::move(irreps)}};
}

DualPtr dual_from_json(const Json& j) {
  std::vector<IrrepData> irreps;
  for (const auto& entry : j.at("irreps")) {
    auto q = entry.at("q_diag").get<std::vector<double>>();
    if (entry.at("n").get<int>() != static_cast<int>(q.size())) {
      throw std::invalid_argument("dual json: n does not match q_diag length");
    }
    irreps.emplace_back(entry.at("label").get<std::string>(), std::move(q));
  }
  return std::make_shared<const DualDescriptor>(j.at("name").get<std::string>(), std::move(irreps));
}

Json to_json(const FourierCoeffs& f) {
  Json entries = Json::array();
  for (const auto& [idx, m] : f.support()) {
    entries.push_back(
        Json{{"label", f.dual()->irrep(idx).label()}, {"re", real_part(m)}, {"im", imag_part(m)}});
  }
  return Json{{"dual", f.dual()->name()}, {"entries", std::move(entries)}};
}

FourierCoeffs coeffs_from_json(const Json& j, const DualPtr& dual) {
  if (j.at("dual").get<std::string>() != dual->name()) {
    throw std::invalid_argument("coefficient json refers to dual '" + j.at("dual").get<std::string>() +
                                "', expected '" + dual->name() + "'");
  }
  FourierCoeffs f(dual);
  for (const auto& entry : j.at("entries")) {
    f.set(entry.at("label").get<std::string>(), matrix_from_json(entry.at("re"), entry.at("im")));
  }
  return f;
}

Json to_json(const FiniteGroupTable& table) {
  Json irreps = Json::array();
  for (const auto& irrep : table.irreps()) {
    Json mats = Json::array();
    for (const auto& m : irrep.matrices) mats.push_back(matrix_to_json(m));
    irreps.push_back(Json{{"label", irrep.label}, {"n", irrep.n}, {"matrices", std::move(mats)}});
  }
  return Json{{"name", table.name()},
              {"order", table.order()},
              {"mult", table.mult()},
              {"irreps", std::move(irreps)}};
}

FiniteGroupTable finite_group_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(mult.size()) != order) {
    throw std::invalid_argument("finite group json: order does not match the table");
  }
  std::vector<FiniteGroupIrrep> irreps;
  for (const auto& entry : j.at("irreps")) {
    FiniteGroupIrrep irrep{entry.at("label").get<std::string>(), entry.at("n").get<int>(), {}};
    for (const auto& m : entry.at("matrices")) {
      irrep.matrices.push_back(matrix_from_json(m.at("re"), m.at("im")));
    }
    irreps.push_back(std::move(irrep));
  }
  return FiniteGroupTable(j.value("name", std::string("custom")), std::move(mult), std::move(irreps));
}

FiniteGroupTable load_finite_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open finite group file '" + path + "'");
  return finite_group_from_json(Json::parse(in));
}

}  // namespace cqg
