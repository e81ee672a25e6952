#include "polynil/abelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polynil {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<BigInt>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigInt& IntegerMatrix::at(std::size_t row, std::size_t col) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index");
  return entries_[row * cols_ + col];
}

const BigInt& IntegerMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index");
  return entries_[row * cols_ + col];
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

SmithDecomposition smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  const std::size_t dim = std::min(rows, cols);

  IntegerMatrix d = input;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols; ++j) d.at(dst, j) += k * d.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += k * u.at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows; ++i) d.at(i, dst) += k * d.at(i, src);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += k * v.at(i, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) d.at(r, j) = -d.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  };

  for (std::size_t t = 0; t < dim; ++t) {
    for (;;) {
      // smallest nonzero |entry| of the trailing submatrix becomes the pivot
      std::size_t pivot_row = t;
      std::size_t pivot_col = t;
      bool found = false;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d.at(i, j) == 0) continue;
          BigInt magnitude = abs(d.at(i, j));
          if (!found || magnitude < best) {
            found = true;
            best = magnitude;
            pivot_row = i;
            pivot_col = j;
          }
        }
      }
      if (!found) {
        t = dim;  // trailing block is zero
        break;
      }
      swap_rows(t, pivot_row);
      swap_cols(t, pivot_col);

      bool reduced = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        add_row(i, t, -(d.at(i, t) / d.at(t, t)));
        if (d.at(i, t) != 0) reduced = false;  // remainder keeps the loop going
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        add_col(j, t, -(d.at(t, j) / d.at(t, t)));
        if (d.at(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // pivot must divide the rest of the submatrix
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (t >= dim) break;
    if (d.at(t, t) < 0) negate_row(t);
  }

  SmithDecomposition result;
  result.diagonal.reserve(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    BigInt entry = d.at(t, t);
    result.diagonal.push_back(entry < 0 ? -entry : entry);
  }
  if (with_transforms) result.transforms = std::make_pair(std::move(u), std::move(v));
  return result;
}

BigCount FgAbelianGroup::torsion_term_count() const {
  BigInt total = 0;
  for (const FactorRun& run : runs_) total += run.count;
  return total;
}

FgAbelianGroup FgAbelianGroup::free_abelian(BigInt rank) {
  if (rank < 0) throw std::invalid_argument("free rank must be >= 0");
  FgAbelianGroup g;
  g.free_rank_ = std::move(rank);
  return g;
}

FgAbelianGroup FgAbelianGroup::cyclic(const BigInt& order) {
  if (order < 0) throw std::invalid_argument("cyclic order must be >= 0");
  FgAbelianGroup g;
  if (order == 0) {
    g.free_rank_ = 1;
  } else if (order > 1) {
    g.runs_.push_back({order, 1});
  }
  return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<BigInt>& orders,
                                                  std::size_t expansion_limit) {
  BigInt rank = 0;
  std::vector<FactorRun> runs;
  for (const BigInt& order : orders) {
    if (order < 0) throw std::invalid_argument("cyclic order must be >= 0");
    if (order == 0) {
      ++rank;
    } else if (order > 1) {
      runs.push_back({order, 1});
    }
  }
  return from_runs(rank, std::move(runs), expansion_limit);
}

FgAbelianGroup FgAbelianGroup::from_runs(const BigInt& free_rank, std::vector<FactorRun> runs,
                                         std::size_t expansion_limit) {
  if (free_rank < 0) throw std::invalid_argument("free rank must be >= 0");
  std::vector<FactorRun> merged;
  for (FactorRun& run : runs) {
    if (run.count < 0) throw std::invalid_argument("run count must be >= 0");
    if (run.factor < 1) throw std::invalid_argument("torsion factor must be >= 1");
    if (run.count == 0 || run.factor == 1) continue;
    merged.push_back(std::move(run));
  }
  std::sort(merged.begin(), merged.end(),
            [](const FactorRun& a, const FactorRun& b) { return a.factor > b.factor; });
  std::vector<FactorRun> collapsed;
  for (FactorRun& run : merged) {
    if (!collapsed.empty() && collapsed.back().factor == run.factor) {
      collapsed.back().count += run.count;
    } else {
      collapsed.push_back(std::move(run));
    }
  }

  bool chain = true;
  for (std::size_t i = 0; i + 1 < collapsed.size(); ++i) {
    if (collapsed[i].factor % collapsed[i + 1].factor != 0) {
      chain = false;
      break;
    }
  }

  FgAbelianGroup g;
  g.free_rank_ = free_rank;
  if (chain) {
    g.runs_ = std::move(collapsed);
    return g;
  }

  // no divisibility chain as given: expand and recanonicalize through the
  // Smith normal form of the diagonal presentation
  BigInt total = 0;
  for (const FactorRun& run : collapsed) total += run.count;
  if (total > expansion_limit) {
    throw ResourceLimitError("canonicalization would expand " + to_decimal(total) +
                             " torsion factors (cap " + std::to_string(expansion_limit) + ")");
  }
  std::vector<BigInt> factors;
  factors.reserve(total.convert_to<std::size_t>());
  for (const FactorRun& run : collapsed) {
    for (BigInt i = 0; i < run.count; ++i) factors.push_back(run.factor);
  }
  IntegerMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag.at(i, i) = factors[i];
  const SmithDecomposition snf = smith_normal_form(diag);
  for (auto it = snf.diagonal.rbegin(); it != snf.diagonal.rend(); ++it) {
    if (*it <= 1) continue;  // the diagonal of a nonsingular matrix has no zeros
    if (!g.runs_.empty() && g.runs_.back().factor == *it) {
      g.runs_.back().count += 1;
    } else {
      g.runs_.push_back({*it, 1});
    }
  }
  return g;
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(const BigInt& free_rank,
                                                      const std::vector<BigInt>& factors) {
  if (free_rank < 0) throw std::invalid_argument("free rank must be >= 0");
  FgAbelianGroup g;
  g.free_rank_ = free_rank;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i + 1 < factors.size() && factors[i] % factors[i + 1] != 0) {
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    if (!g.runs_.empty() && g.runs_.back().factor == factors[i]) {
      g.runs_.back().count += 1;
    } else {
      g.runs_.push_back({factors[i], 1});
    }
  }
  return g;
}

std::vector<BigInt> FgAbelianGroup::invariant_factors(std::size_t limit) const {
  if (torsion_term_count() > limit) {
    throw ResourceLimitError("expanding " + to_decimal(torsion_term_count()) +
                             " invariant factors exceeds the cap of " + std::to_string(limit));
  }
  std::vector<BigInt> out;
  for (const FactorRun& run : runs_) {
    for (BigInt i = 0; i < run.count; ++i) out.push_back(run.factor);
  }
  return out;
}

std::vector<BigInt> FgAbelianGroup::cyclic_orders(std::size_t limit) const {
  if (free_rank_ + torsion_term_count() > limit) {
    throw ResourceLimitError("expanding the cyclic decomposition exceeds the cap of " +
                             std::to_string(limit));
  }
  std::vector<BigInt> out;
  for (BigInt i = 0; i < free_rank_; ++i) out.push_back(0);
  for (const FactorRun& run : runs_) {
    for (BigInt i = 0; i < run.count; ++i) out.push_back(run.factor);
  }
  return out;
}

FgAbelianGroup canonicalize(std::size_t generators, const IntegerMatrix& relations) {
  if (relations.cols() != generators && !(relations.rows() == 0 && relations.cols() == 0)) {
    throw std::invalid_argument("relation matrix must have one column per generator");
  }
  const SmithDecomposition snf = smith_normal_form(relations);
  std::vector<BigInt> factors;
  std::size_t nonzero = 0;
  for (const BigInt& entry : snf.diagonal) {
    if (entry != 0) ++nonzero;
    if (entry > 1) factors.push_back(entry);
  }
  std::reverse(factors.begin(), factors.end());  // descending-divisibility convention
  return FgAbelianGroup::from_invariant_factors(BigInt(generators - nonzero), factors);
}

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  std::vector<FactorRun> runs = g.torsion_runs();
  runs.insert(runs.end(), h.torsion_runs().begin(), h.torsion_runs().end());
  return FgAbelianGroup::from_runs(g.free_rank() + h.free_rank(), std::move(runs));
}

BigInt tensor_cyclic(const BigInt& r, const BigInt& s) {
  if (r < 0 || s < 0) throw std::invalid_argument("cyclic order must be >= 0");
  return gcd(r, s);
}

FgAbelianGroup tensor_product(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  const std::vector<BigInt> a = g.cyclic_orders();
  const std::vector<BigInt> b = h.cyclic_orders();
  if (!b.empty() && a.size() > kDefaultExpansionLimit / b.size()) {
    throw ResourceLimitError("tensor product expansion exceeds the cap");
  }
  std::vector<BigInt> orders;
  orders.reserve(a.size() * b.size());
  for (const BigInt& r : a) {
    for (const BigInt& s : b) orders.push_back(tensor_cyclic(r, s));
  }
  return FgAbelianGroup::from_cyclic_orders(orders);
}

FgAbelianGroup exterior_square(const FgAbelianGroup& g) {
  const std::vector<BigInt> orders = g.cyclic_orders();
  if (orders.size() > 1 && orders.size() > 2 * (kDefaultExpansionLimit / (orders.size() - 1))) {
    throw ResourceLimitError("exterior square expansion exceeds the cap");
  }
  std::vector<BigInt> pairs;
  pairs.reserve(orders.size() * (orders.size() - 1) / 2);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      pairs.push_back(tensor_cyclic(orders[i], orders[j]));
    }
  }
  return FgAbelianGroup::from_cyclic_orders(pairs);
}

}  // namespace polynil
