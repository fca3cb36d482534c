#include "coxeter/presets.hpp"

#include <sstream>

namespace coxeter {

namespace {

std::vector<std::vector<int>> commuting(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void bond(std::vector<std::vector<int>>& m, int i, int j, int label) { m[i][j] = m[j][i] = label; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw PresetError("bad " + what + " '" + s + "' in preset");
}

int parse_label(const std::string& s) {
  if (s == "inf" || s == "oo" || s == "infinity") return kInfinity;
  int v = parse_int(s, "label");
  if (v != kInfinity && v < 2) throw PresetError("preset label must be >= 2 or inf, got '" + s + "'");
  return v;
}

std::vector<int> parse_labels(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_label(part));
  return out;
}

}  // namespace

CoxeterMatrix affine_matrix(char type, int n) {
  switch (type) {
    case 'A': {
      if (n < 1 || n > 8) throw PresetError("affine-A needs 1 <= n <= 8");
      if (n == 1) return dihedral_matrix(kInfinity);
      std::vector<int> labels(n + 1, 3);
      return cycle_matrix(labels);
    }
    case 'B': {
      if (n < 2 || n > 8) throw PresetError("affine-B needs 2 <= n <= 8");
      if (n == 2) return linear_matrix({4, 4});
      auto m = commuting(n + 1);
      bond(m, 0, 2, 3);
      bond(m, 1, 2, 3);
      for (int i = 2; i < n; ++i) bond(m, i, i + 1, i + 1 == n ? 4 : 3);
      return CoxeterMatrix(m);
    }
    case 'C': {
      if (n < 2 || n > 8) throw PresetError("affine-C needs 2 <= n <= 8");
      std::vector<int> labels(n, 3);
      labels.front() = 4;
      labels.back() = 4;
      return linear_matrix(labels);
    }
    case 'D': {
      if (n < 4 || n > 8) throw PresetError("affine-D needs 4 <= n <= 8");
      auto m = commuting(n + 1);
      bond(m, 0, 2, 3);
      bond(m, 1, 2, 3);
      for (int i = 2; i < n - 2; ++i) bond(m, i, i + 1, 3);
      bond(m, n - 2, n - 1, 3);
      bond(m, n - 2, n, 3);
      return CoxeterMatrix(m);
    }
    case 'G':
      if (n != 2) throw PresetError("affine-G exists only for n = 2");
      return linear_matrix({3, 6});
    case 'F':
      if (n != 4) throw PresetError("affine-F exists only for n = 4");
      return linear_matrix({3, 3, 4, 3});
    default:
      throw PresetError(std::string("unknown affine type '") + type + "'");
  }
}

CoxeterMatrix dihedral_matrix(int m) {
  if (m != kInfinity && m < 2) throw PresetError("dihedral label must be >= 2 or inf");
  return CoxeterMatrix({{1, m}, {m, 1}});
}

CoxeterMatrix linear_matrix(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size()) + 1;
  auto m = commuting(n);
  for (int i = 0; i + 1 < n; ++i) bond(m, i, i + 1, labels[i]);
  return CoxeterMatrix(m);
}

CoxeterMatrix cycle_matrix(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size());
  if (n < 3) throw PresetError("cycle needs at least 3 labels");
  auto m = commuting(n);
  for (int i = 0; i < n; ++i) bond(m, i, (i + 1) % n, labels[i]);
  return CoxeterMatrix(m);
}

CoxeterMatrix rank3_matrix(int type, int a, int b) {
  bool ok = false;
  switch (type) {
    case 1: ok = a == 3 && b >= 7; break;
    case 2: ok = a >= 5 && b >= 5; break;
    case 3: ok = a == 4 && b >= 5; break;
    default: break;
  }
  if (!ok)
    throw PresetError("rank3 parameters out of range (type I: a=3, b>=7; type II: a,b>=5; type III: a=4, b>=5)");
  return linear_matrix({a, b});
}

CoxeterMatrix right_angled_matrix(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw PresetError("right-angled needs n >= 1");
  auto m = commuting(n);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw PresetError("right-angled edge out of range");
    bond(m, i, j, kInfinity);
  }
  return CoxeterMatrix(m);
}

CoxeterMatrix complete_matrix(int n, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != n * (n - 1) / 2)
    throw PresetError("complete graph on " + std::to_string(n) + " nodes needs " + std::to_string(n * (n - 1) / 2) +
                      " labels");
  auto m = commuting(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (labels[k] == 2) throw PresetError("complete graph labels must be >= 3 or inf");
      bond(m, i, j, labels[k++]);
    }
  return CoxeterMatrix(m);
}

CoxeterSystem preset_system(const std::string& spec) {
  auto named = [](CoxeterMatrix m) {
    int n = m.rank();
    return CoxeterSystem(std::move(m), default_generator_names(n));
  };
  if (spec.rfind("affine-", 0) == 0) {
    std::string rest = spec.substr(7);
    if (rest.size() < 2) throw PresetError("affine preset needs a type and rank, e.g. affine-G2");
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(rest[0])));
    return named(affine_matrix(type, parse_int(rest.substr(1), "rank")));
  }
  auto parts = split(spec, ':');
  const std::string& head = parts.front();
  if ((head == "I2" || head == "i2") && parts.size() == 2) return named(dihedral_matrix(parse_label(parts[1])));
  if (head == "rank3" && parts.size() == 4) {
    int type = parts[1] == "I" ? 1 : parts[1] == "II" ? 2 : parts[1] == "III" ? 3 : 0;
    if (!type) throw PresetError("rank3 type must be I, II or III");
    return named(rank3_matrix(type, parse_int(parts[2], "label"), parse_int(parts[3], "label")));
  }
  if (head == "linear" && parts.size() == 2) return named(linear_matrix(parse_labels(parts[1])));
  if (head == "cycle" && parts.size() == 2) return named(cycle_matrix(parse_labels(parts[1])));
  if (head == "right-angled" && (parts.size() == 2 || parts.size() == 3)) {
    int n = parse_int(parts[1], "rank");
    std::vector<std::pair<int, int>> edges;
    if (parts.size() == 3 && !parts[2].empty()) {
      for (const auto& e : split(parts[2], ',')) {
        auto ends = split(e, '-');
        if (ends.size() != 2) throw PresetError("right-angled edge '" + e + "' must look like i-j");
        edges.emplace_back(parse_int(ends[0], "node"), parse_int(ends[1], "node"));
      }
    }
    return named(right_angled_matrix(n, edges));
  }
  if (head == "complete" && parts.size() == 3)
    return named(complete_matrix(parse_int(parts[1], "rank"), parse_labels(parts[2])));
  throw PresetError("unknown preset '" + spec + "'");
}

std::string preset_help() {
  return "affine-A<n> affine-B<n> affine-C<n> affine-D<n> affine-G2 affine-F4, I2:<m|inf>, "
         "rank3:<I|II|III>:<a>:<b>, linear:<l1,l2,...>, cycle:<l1,...,ln>, "
         "right-angled:<n>:<i-j,...>, complete:<n>:<l01,l02,...>";
}

}  // namespace coxeter
