#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coxeter/field.hpp"
#include "coxeter/linalg.hpp"

namespace coxeter {

constexpr int kInfinity = 0;  // encoding of m(s,t) = infinity
constexpr int kMaxRank = 32;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  int rank() const { return static_cast<int>(m_.size()); }
  int operator()(int s, int t) const { return m_[s][t]; }
  const std::vector<std::vector<int>>& entries() const { return m_; }
  // lcm of finite off-diagonal labels, 2 if there are none.
  int conductor() const;

 private:
  std::vector<std::vector<int>> m_;
};

class CoxeterSystem {
 public:
  CoxeterSystem(CoxeterMatrix matrix, std::vector<std::string> generators);

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& generators() const { return names_; }
  const FieldPtr& field() const { return field_; }
  const GramMatrix& gram() const { return gram_; }
  int generator_index(const std::string& name) const;  // -1 if unknown

 private:
  CoxeterMatrix matrix_;
  std::vector<std::string> names_;
  FieldPtr field_;
  GramMatrix gram_;
};

// Form values <alpha_s, alpha_t> = -cos(pi/m(s,t)) as any scalar type.
template <class Scalar>
Matrix<Scalar> gram_matrix(const CoxeterMatrix& m);

template <>
Matrix<double> gram_matrix<double>(const CoxeterMatrix& m);

// Default names s,t,u,v,w,x,y,z then s0,s1,...
std::vector<std::string> default_generator_names(int rank);

// {"generators": [...], "matrix": [[...]]}, 0 or "inf" encodes infinity.
CoxeterSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const CoxeterSystem& sys);
CoxeterSystem load_system_file(const std::string& path);

}  // namespace coxeter
