#include "qfound/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include "qfound/nonclassicality.hpp"

namespace qfound::io {

namespace {

std::pair<int, int> parse_hardy_suffix(const std::string& name, const std::string& prefix) {
  const std::string rest = name.substr(prefix.size());
  const auto colon = rest.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("expected '" + prefix + "M:j', got '" + name + "'");
  const int m = std::stoi(rest.substr(0, colon));
  const int j = std::stoi(rest.substr(colon + 1));
  if (m < 2 || j < 0 || j >= m)
    throw std::invalid_argument("index out of range in '" + name + "'");
  return {m, j};
}

}  // namespace

hilbert::StateVector parse_state_name(const std::string& name) {
  if (name == "|0>") return hilbert::ket0();
  if (name == "|1>") return hilbert::ket1();
  if (name == "|+>") return hilbert::ket_plus();
  if (name == "|->") return hilbert::ket_minus();
  if (name == "|+i>") return hilbert::ket_plus_i();
  if (name == "|-i>") return hilbert::ket_minus_i();
  if (name.rfind("hardy:", 0) == 0) {
    const auto [m, j] = parse_hardy_suffix(name, "hardy:");
    return nonclassical::hardy_states(m)[static_cast<std::size_t>(j)];
  }
  throw std::invalid_argument("unknown state name '" + name + "'");
}

hilbert::MeasurementBasis parse_basis_name(const std::string& name) {
  if (name == "z") return hilbert::pauli_eigenbasis(3);
  if (name == "x") return hilbert::pauli_eigenbasis(1);
  if (name == "y") return hilbert::pauli_eigenbasis(2);
  if (name.rfind("hardy:", 0) == 0) {
    const auto [m, j] = parse_hardy_suffix(name, "hardy:");
    const auto qa = nonclassical::hardy_assignment(m);
    return qa.bases.at("meas" + std::to_string(j));
  }
  throw std::invalid_argument("unknown basis name '" + name + "'");
}

Json model_to_json(const ontology::FiniteOntologicalModel& model) {
  Json j;
  j["lambda_count"] = model.lambda_count();
  Json preps = Json::object();
  for (const auto& [label, p] : model.preparations()) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p(i));
    preps[label] = std::move(arr);
  }
  j["preparations"] = std::move(preps);
  Json resps = Json::object();
  for (const auto& [label, table] : model.responses()) {
    Json rows = Json::array();
    for (Eigen::Index lam = 0; lam < table.rows(); ++lam) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < table.cols(); ++k) row.push_back(table(lam, k));
      rows.push_back(std::move(row));
    }
    resps[label] = std::move(rows);
  }
  j["responses"] = std::move(resps);
  return j;
}

ontology::FiniteOntologicalModel model_from_json(const Json& j) {
  if (!j.contains("lambda_count"))
    throw std::invalid_argument("model document: missing /lambda_count");
  const int n = j.at("lambda_count").get<int>();

  ontology::FiniteOntologicalModel::PrepMap preps;
  if (j.contains("preparations")) {
    for (const auto& [label, arr] : j.at("preparations").items()) {
      if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        throw std::invalid_argument("model document: /preparations/" + label +
                                    " must be an array of length lambda_count");
      Eigen::VectorXd p(n);
      for (int i = 0; i < n; ++i) p(i) = arr.at(static_cast<std::size_t>(i)).get<double>();
      preps[label] = std::move(p);
    }
  }

  ontology::FiniteOntologicalModel::ResponseMap resps;
  if (j.contains("responses")) {
    for (const auto& [label, rows] : j.at("responses").items()) {
      if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("model document: /responses/" + label +
                                    " must have one row per lambda");
      const int n_out = static_cast<int>(rows.at(0).size());
      Eigen::MatrixXd table(n, n_out);
      for (int lam = 0; lam < n; ++lam) {
        const auto& row = rows.at(static_cast<std::size_t>(lam));
        if (!row.is_array() || static_cast<int>(row.size()) != n_out)
          throw std::invalid_argument("model document: /responses/" + label + "/" +
                                      std::to_string(lam) + " has inconsistent outcome count");
        for (int k = 0; k < n_out; ++k)
          table(lam, k) = row.at(static_cast<std::size_t>(k)).get<double>();
      }
      resps[label] = std::move(table);
    }
  }

  return ontology::FiniteOntologicalModel(n, std::move(preps), std::move(resps));
}

LoadedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_model: cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("load_model: invalid JSON in '" + path + "': " + e.what());
  }

  ontology::QuantumAssignment qa;
  if (j.contains("bindings")) {
    const Json& b = j.at("bindings");
    if (b.contains("preparations")) {
      for (const auto& [label, name] : b.at("preparations").items())
        qa.states.insert({label, parse_state_name(name.get<std::string>())});
    }
    if (b.contains("measurements")) {
      for (const auto& [label, name] : b.at("measurements").items())
        qa.bases.insert({label, parse_basis_name(name.get<std::string>())});
    }
  }

  return LoadedModel{model_from_json(j), std::move(qa)};
}

Json gaussian_to_json(const phase::GaussianMacrostate& state) {
  Json j;
  j["n_modes"] = state.n_modes();
  Json mean = Json::array();
  for (Eigen::Index i = 0; i < state.mean().size(); ++i) mean.push_back(state.mean()(i));
  j["mean"] = std::move(mean);
  Json cov = Json::array();
  for (Eigen::Index r = 0; r < state.cov().rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < state.cov().cols(); ++c) row.push_back(state.cov()(r, c));
    cov.push_back(std::move(row));
  }
  j["cov"] = std::move(cov);
  return j;
}

phase::GaussianMacrostate gaussian_from_json(const Json& j) {
  const int n = j.at("n_modes").get<int>();
  const auto& mean_arr = j.at("mean");
  const auto& cov_arr = j.at("cov");
  if (static_cast<int>(mean_arr.size()) != 2 * n)
    throw std::invalid_argument("gaussian document: /mean must have length 2*n_modes");
  Eigen::VectorXd mean(2 * n);
  for (int i = 0; i < 2 * n; ++i) mean(i) = mean_arr.at(static_cast<std::size_t>(i)).get<double>();
  if (static_cast<int>(cov_arr.size()) != 2 * n)
    throw std::invalid_argument("gaussian document: /cov must be 2N x 2N");
  Eigen::MatrixXd cov(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r) {
    const auto& row = cov_arr.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != 2 * n)
      throw std::invalid_argument("gaussian document: /cov row " + std::to_string(r) +
                                  " has wrong length");
    for (int c = 0; c < 2 * n; ++c) cov(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return phase::GaussianMacrostate(std::move(mean), std::move(cov));
}

}  // namespace qfound::io
