#include "coxeter/serialize.hpp"

namespace coxeter {

nlohmann::json root_json(const Root& v) {
  nlohmann::json coeffs = nlohmann::json::array(), approx = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& q : v(i).dense_coeffs()) poly.push_back(q.get_str());
    coeffs.push_back(std::move(poly));
    approx.push_back(v(i).to_double());
  }
  return {{"coeffs", coeffs}, {"approx", approx}};
}

nlohmann::json root_json(Group& g, int id) { return root_json(g.roots().root(id)); }

Root root_from_json(Group& g, const nlohmann::json& j) {
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != g.rank()) throw std::invalid_argument("root has wrong dimension");
  Root v(g.rank());
  for (int i = 0; i < g.rank(); ++i) {
    std::vector<Rational> poly;
    for (const auto& q : coeffs[i]) poly.emplace_back(q.get<std::string>());
    v(i) = AlgebraicReal(g.system().field(), std::move(poly));
  }
  return v;
}

std::string root_text(Group& g, int id) {
  const Root& v = g.roots().root(id);
  const auto& names = g.system().generators();
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const AlgebraicReal& c = v(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (c == AlgebraicReal(1)) {
    } else if (c.is_rational()) {
      out += c.to_string();
    } else {
      out += "(" + c.to_string() + ")";
    }
    out += "a_" + names[i];
  }
  return out;
}

nlohmann::json shadow_json(Group& g, const ShadowSet& X) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& x : X.elements) {
    nlohmann::json roots = nlohmann::json::array();
    for (int r : right_descent_roots(g, x)) roots.push_back(root_json(g, r));
    items.push_back({{"word", g.format(x)}, {"final_roots", roots}});
  }
  return {{"kind", to_string(X.kind)}, {"size", X.size()}, {"elements", items}};
}

}  // namespace coxeter
