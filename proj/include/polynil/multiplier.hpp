#pragma once

#include "polynil/abelian.hpp"
#include "polynil/arith.hpp"
#include "polynil/bigint.hpp"

#include <string>
#include <vector>

namespace polynil {

// Result of a multiplier computation for G = Z^(m) + Z_{n_1} + ... + Z_{n_k}
// and a class row: the f-value table f_m..f_{m+k}, the multiplicity of each
// summand of the shaped sum
//   Z^(f_m) + Z_{n_1}^(f_{m+1}-f_m) + ... + Z_{n_k}^(f_{m+k}-f_{m+k-1}),
// and that sum as a canonical group.
struct MultiplierReport {
  FgAbelianGroup input_group;
  ClassRow class_row;
  std::vector<BigCount> f_values;        // f_m .. f_{m+k}
  std::vector<BigCount> multiplicities;  // [0] for Z, [j] for the j-th factor
  FgAbelianGroup result;

  bool operator==(const MultiplierReport&) const = default;
};

// The multiplier of a finitely generated abelian group with respect to the
// polynilpotent variety of the given class row, with f = iterated_witt(row, .).
MultiplierReport polynilpotent_multiplier(const FgAbelianGroup& group, const ClassRow& row);

// Single-entry row (c); f-values are witt(c + 1, .). Requires c >= 1.
MultiplierReport nilpotent_multiplier(const FgAbelianGroup& group, unsigned nil_class);

// Row (1,1).
MultiplierReport metabelian_multiplier(const FgAbelianGroup& group);

// All-ones row of the given length; length 1 is the Schur multiplier.
MultiplierReport solvable_multiplier(const FgAbelianGroup& group, unsigned length);

// "Z^(3) + Z/4^(3) + Z/2^(12)"; zero-multiplicity terms dropped, "0" if all
// are zero.
std::string shaped_sum_string(const MultiplierReport& report);

}  // namespace polynil
