#pragma once

#include "polynil/bigint.hpp"

#include <string>
#include <vector>

namespace polynil {

// The tuple (c_1, ..., c_t) selecting a polynilpotent variety. Entries are the
// nilpotency classes of the successive quotients; all >= 1, t >= 1.
class ClassRow {
 public:
  explicit ClassRow(std::vector<unsigned> entries);
  static ClassRow parse(const std::string& text);  // "1,2,3"
  static ClassRow ones(unsigned length);           // solvable variety of that length

  const std::vector<unsigned>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  std::string to_string() const;  // "(1,2,3)"

  bool operator==(const ClassRow&) const = default;

 private:
  std::vector<unsigned> entries_;
};

// Moebius function: 1 for m = 1, 0 when a square divides m, (-1)^s for a
// product of s distinct primes. Trial division; arguments are divisors of
// commutator weights and stay small.
int mobius(long long m);

// Witt formula: the number of basic commutators of weight `weight` on
// `letters` free generators,
//   chi_n(d) = (1/n) * sum over m | n of mobius(m) * d^(n/m).
// Exact at any magnitude; the division by n is checked to be exact.
BigCount witt(unsigned weight, const BigCount& letters);

// chi_{c_t+1}(chi_{c_{t-1}+1}(... chi_{c_1+1}(letters) ...)), the first row
// entry applied innermost.
BigCount iterated_witt(const ClassRow& row, const BigCount& letters);

}  // namespace polynil
