#include "coxeter/system.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace coxeter {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries) : m_(std::move(entries)) {
  int n = rank();
  if (n < 1) throw std::invalid_argument("Coxeter matrix must have rank at least 1");
  if (n > kMaxRank) throw std::invalid_argument("Coxeter matrix rank exceeds " + std::to_string(kMaxRank));
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(m_[s].size()) != n) throw std::invalid_argument("Coxeter matrix is not square");
    if (m_[s][s] != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (m_[s][t] != m_[t][s]) throw std::invalid_argument("Coxeter matrix is not symmetric");
      if (m_[s][t] != kInfinity && m_[s][t] < 2)
        throw std::invalid_argument("off-diagonal Coxeter labels must be >= 2 or infinity");
    }
  }
}

int CoxeterMatrix::conductor() const {
  long N = 1;
  for (int s = 0; s < rank(); ++s)
    for (int t = s + 1; t < rank(); ++t)
      if (m_[s][t] != kInfinity) N = std::lcm(N, static_cast<long>(m_[s][t]));
  if (N > 100000) throw std::invalid_argument("field conductor too large");
  return N < 2 ? 2 : static_cast<int>(N);
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::vector<std::string> generators)
    : matrix_(std::move(matrix)), names_(std::move(generators)) {
  if (static_cast<int>(names_.size()) != rank()) throw std::invalid_argument("generator count does not match rank");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    if (names_[i].find(',') != std::string::npos) throw std::invalid_argument("generator names may not contain ','");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator name " + names_[i]);
  }
  field_ = make_field(matrix_.conductor());
  int n = rank();
  gram_ = GramMatrix::Constant(n, n, AlgebraicReal(0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) gram_(s, t) = embed_cos(field_, matrix_(s, t));
  for (int s = 0; s < n; ++s) gram_(s, s) = AlgebraicReal(1);
}

int CoxeterSystem::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

template <>
Matrix<double> gram_matrix<double>(const CoxeterMatrix& m) {
  int n = m.rank();
  Matrix<double> g(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int l = m(s, t);
      g(s, t) = s == t ? 1.0 : (l == kInfinity ? -1.0 : -std::cos(M_PI / l));
    }
  return g;
}

template <>
Matrix<AlgebraicReal> gram_matrix<AlgebraicReal>(const CoxeterMatrix& m) {
  return CoxeterSystem(m, default_generator_names(m.rank())).gram();
}

std::vector<std::string> default_generator_names(int rank) {
  static const char* letters[] = {"s", "t", "u", "v", "w", "x", "y", "z"};
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i) out.push_back(rank <= 8 ? letters[i] : "s" + std::to_string(i));
  return out;
}

namespace {

int parse_label(const nlohmann::json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "oo") return kInfinity;
    try {
      std::size_t used = 0;
      int x = std::stoi(s, &used);
      if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad Coxeter label '" + s + "'");
  }
  if (v.is_number_integer()) return v.get<int>();
  throw std::invalid_argument("bad Coxeter label " + v.dump());
}

}  // namespace

CoxeterSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw std::invalid_argument("group file needs a \"matrix\" field");
  const auto& jm = j.at("matrix");
  if (!jm.is_array()) throw std::invalid_argument("\"matrix\" must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : jm) {
    if (!row.is_array()) throw std::invalid_argument("\"matrix\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(parse_label(v));
    rows.push_back(std::move(r));
  }
  CoxeterMatrix m(std::move(rows));
  std::vector<std::string> names;
  if (j.contains("generators")) {
    for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
  } else {
    names = default_generator_names(m.rank());
  }
  return CoxeterSystem(std::move(m), std::move(names));
}

nlohmann::json system_to_json(const CoxeterSystem& sys) {
  nlohmann::json j;
  j["generators"] = sys.generators();
  j["matrix"] = sys.matrix().entries();
  return j;
}

CoxeterSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("group file '" + path + "' is not valid JSON: " + e.what());
  }
  return system_from_json(j);
}

}  // namespace coxeter
