#pragma once

#include "polynil/bigint.hpp"
#include "polynil/errors.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace polynil {

inline constexpr std::size_t kDefaultExpansionLimit = 1'000'000;

// Dense integer matrix with exact entries. As a presentation, columns are
// generators and rows are relations.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  explicit IntegerMatrix(const std::vector<std::vector<BigInt>>& rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t row, std::size_t col);
  const BigInt& at(std::size_t row, std::size_t col) const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// Exact determinant (Bareiss fraction-free elimination). Square input only.
BigInt determinant(const IntegerMatrix& m);

struct SmithDecomposition {
  // d_1 | d_2 | ... with trailing zeros, length min(rows, cols).
  std::vector<BigInt> diagonal;
  // (U, V) unimodular with U * M * V = diag(diagonal), when requested.
  std::optional<std::pair<IntegerMatrix, IntegerMatrix>> transforms;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

// One torsion run: `count` copies of Z_factor.
struct FactorRun {
  BigInt factor;  // >= 2
  BigInt count;   // >= 1
  bool operator==(const FactorRun&) const = default;
};

// A finitely generated abelian group in invariant-factor form
//   Z^(free_rank) + Z_{n_1} + ... + Z_{n_k},   n_{i+1} | n_i.
// Torsion is stored run-length compressed (strictly decreasing factors), so
// ranks and multiplicities may be astronomically large without ever being
// materialized element by element.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;  // trivial group

  static FgAbelianGroup free_abelian(BigInt rank);
  static FgAbelianGroup cyclic(const BigInt& order);  // 0 -> Z, 1 -> trivial
  // Canonicalizes an arbitrary finite multiset of cyclic orders (0 encodes Z).
  static FgAbelianGroup from_cyclic_orders(const std::vector<BigInt>& orders,
                                           std::size_t expansion_limit = kDefaultExpansionLimit);
  // Canonicalizes free rank plus arbitrary torsion runs. Runs that already
  // form a divisibility chain are merged symbolically; anything else is
  // expanded through Smith normal form, subject to `expansion_limit`.
  static FgAbelianGroup from_runs(const BigInt& free_rank, std::vector<FactorRun> runs,
                                  std::size_t expansion_limit = kDefaultExpansionLimit);
  // Requires factors already in descending-divisibility order (throws
  // std::invalid_argument otherwise).
  static FgAbelianGroup from_invariant_factors(const BigInt& free_rank,
                                               const std::vector<BigInt>& factors);

  const BigInt& free_rank() const { return free_rank_; }
  const std::vector<FactorRun>& torsion_runs() const { return runs_; }
  BigCount torsion_term_count() const;
  bool is_trivial() const { return free_rank_ == 0 && runs_.empty(); }

  // Expanded views; throw ResourceLimitError beyond `limit` terms.
  std::vector<BigInt> invariant_factors(std::size_t limit = kDefaultExpansionLimit) const;
  // Cyclic decomposition with the free part first: free_rank zeros, then the
  // invariant factors.
  std::vector<BigInt> cyclic_orders(std::size_t limit = kDefaultExpansionLimit) const;

  bool operator==(const FgAbelianGroup&) const = default;

 private:
  BigInt free_rank_{0};
  std::vector<FactorRun> runs_;
};

// The group <g_1..g_generators | rows of `relations`> in canonical form.
FgAbelianGroup canonicalize(std::size_t generators, const IntegerMatrix& relations);

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h);

// Order parameter of Z_r (x) Z_s: gcd with gcd(0, s) = s, gcd(0, 0) = 0, so
// that 0 keeps encoding Z.
BigInt tensor_cyclic(const BigInt& r, const BigInt& s);

FgAbelianGroup tensor_product(const FgAbelianGroup& g, const FgAbelianGroup& h);

// Direct sum of Z_{gcd(r_i, r_j)} over strictly-below-diagonal pairs i < j of
// the cyclic decomposition. For abelian groups this is the Schur multiplier.
FgAbelianGroup exterior_square(const FgAbelianGroup& g);

}  // namespace polynil
