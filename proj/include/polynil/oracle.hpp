#pragma once

#include "polynil/abelian.hpp"
#include "polynil/arith.hpp"
#include "polynil/bigint.hpp"

#include <string>
#include <variant>
#include <vector>

namespace polynil {

// One verification instance. Everything is exact: pass means expected and
// actual are equal, no tolerance anywhere.
struct CheckOutcome {
  std::string name;
  std::string instance;
  std::variant<BigCount, FgAbelianGroup> expected;
  std::variant<BigCount, FgAbelianGroup> actual;
  bool pass = false;
};

std::string outcome_value_string(const std::variant<BigCount, FgAbelianGroup>& value);
bool all_pass(const std::vector<CheckOutcome>& outcomes);

// Schur multiplier by peeling one cyclic summand at a time:
// M(trivial) = M(cyclic) = 0 and M(G + Z_r) = M(G) + (G (x) Z_r).
FgAbelianGroup schur_recursion(const FgAbelianGroup& group);
// Same recursion over an explicit cyclic decomposition, peeled in the given
// order (the result is independent of that order).
FgAbelianGroup schur_recursion_on_orders(const std::vector<BigInt>& orders);

// Every canonical group with free rank + factor count <= max_total and leading
// invariant factor <= max_factor, generated by divisor-chain descent in a
// fixed deterministic order.
std::vector<FgAbelianGroup> all_canonical_groups(unsigned max_total, unsigned max_factor);

// Three-way agreement on every instance: nilpotent multiplier at class 1 vs
// exterior square vs Schur recursion.
std::vector<CheckOutcome> sweep_schur(unsigned max_rank, unsigned max_factor);

// Basic-commutator enumeration vs the Witt formula on the full grid
// (1..max_d) x (1..max_weight), plus the Moebius-inversion identity
// sum over m | n of m * chi_m(d) = d^n on the same grid.
std::vector<CheckOutcome> sweep_counts(unsigned max_d, unsigned max_weight);

// Iterated basic-commutator set sizes vs iterated_witt for each row and
// 1 <= d <= max_d.
std::vector<CheckOutcome> sweep_iterated(const std::vector<ClassRow>& rows, unsigned max_d);

}  // namespace polynil
