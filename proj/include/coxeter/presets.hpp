#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxeter/system.hpp"

namespace coxeter {

class PresetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CoxeterMatrix affine_matrix(char type, int n);
CoxeterMatrix dihedral_matrix(int m);
// Linear diagram; labels[i] joins nodes i and i+1.
CoxeterMatrix linear_matrix(const std::vector<int>& labels);
// Cycle; labels[i] joins nodes i and (i+1) mod n.
CoxeterMatrix cycle_matrix(const std::vector<int>& labels);
// Nodes s,t,u with a = m(s,t), b = m(t,u), m(s,u) = 2.
CoxeterMatrix rank3_matrix(int type, int a, int b);
// Listed edges get infinity, all other pairs commute.
CoxeterMatrix right_angled_matrix(int n, const std::vector<std::pair<int, int>>& edges);
// Labels in pair order (0,1),(0,2),...,(1,2),...
CoxeterMatrix complete_matrix(int n, const std::vector<int>& labels);

// Parses names like "affine-G2", "I2:5", "I2:inf", "rank3:I:3:7", "linear:3,inf",
// "cycle:3,3,4,3", "right-angled:4:0-1,1-2,2-3,3-0", "complete:3:3,3,3".
CoxeterSystem preset_system(const std::string& spec);

// Help text listing accepted preset forms.
std::string preset_help();

}  // namespace coxeter
