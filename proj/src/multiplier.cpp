#include "polynil/multiplier.hpp"

#include <stdexcept>
#include <utility>

namespace polynil {

MultiplierReport polynilpotent_multiplier(const FgAbelianGroup& group, const ClassRow& row) {
  const BigInt& m = group.free_rank();
  // the f-table carries one entry per invariant factor plus one for the free
  // part, so the input's torsion expansion must stay materializable
  const std::vector<BigInt> factors = group.invariant_factors();

  MultiplierReport report{group, row, {}, {}, {}};
  report.f_values.reserve(factors.size() + 1);
  for (std::size_t j = 0; j <= factors.size(); ++j) {
    report.f_values.push_back(iterated_witt(row, m + BigInt(j)));
  }

  report.multiplicities.reserve(factors.size() + 1);
  report.multiplicities.push_back(report.f_values.front());
  for (std::size_t j = 1; j <= factors.size(); ++j) {
    BigInt difference = report.f_values[j] - report.f_values[j - 1];
    if (difference < 0) {
      throw std::logic_error("multiplier multiplicities came out negative; "
                             "iterated Witt values must be nondecreasing");
    }
    report.multiplicities.push_back(std::move(difference));
  }

  // Z^(f_m) + sum of Z_{n_j}^(mult_j): the factors already form a
  // divisibility chain, so the assembled sum is canonical as written.
  std::vector<FactorRun> runs;
  for (std::size_t j = 1; j <= factors.size(); ++j) {
    if (report.multiplicities[j] == 0) continue;
    runs.push_back({factors[j - 1], report.multiplicities[j]});
  }
  report.result = FgAbelianGroup::from_runs(report.multiplicities.front(), std::move(runs));
  return report;
}

MultiplierReport nilpotent_multiplier(const FgAbelianGroup& group, unsigned nil_class) {
  if (nil_class < 1) throw std::invalid_argument("nilpotency class must be >= 1");
  return polynilpotent_multiplier(group, ClassRow({nil_class}));
}

MultiplierReport metabelian_multiplier(const FgAbelianGroup& group) {
  return polynilpotent_multiplier(group, ClassRow({1, 1}));
}

MultiplierReport solvable_multiplier(const FgAbelianGroup& group, unsigned length) {
  if (length < 1) throw std::invalid_argument("solvable length must be >= 1");
  return polynilpotent_multiplier(group, ClassRow::ones(length));
}

std::string shaped_sum_string(const MultiplierReport& report) {
  std::string out;
  auto append = [&](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (report.multiplicities.front() > 0) {
    append("Z^(" + to_decimal(report.multiplicities.front()) + ")");
  }
  const std::vector<BigInt> factors = report.input_group.invariant_factors();
  for (std::size_t j = 1; j < report.multiplicities.size(); ++j) {
    const BigInt& multiplicity = report.multiplicities[j];
    if (multiplicity == 0) continue;
    std::string term = "Z/" + to_decimal(factors[j - 1]);
    if (multiplicity > 1) term += "^(" + to_decimal(multiplicity) + ")";
    append(term);
  }
  return out.empty() ? "0" : out;
}

}  // namespace polynil
