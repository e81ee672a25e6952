#include "polynil/oracle.hpp"

#include "polynil/group_expr.hpp"
#include "polynil/hall.hpp"
#include "polynil/multiplier.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace polynil {

std::string outcome_value_string(const std::variant<BigCount, FgAbelianGroup>& value) {
  if (const BigCount* count = std::get_if<BigCount>(&value)) return to_decimal(*count);
  return render_group(std::get<FgAbelianGroup>(value));
}

bool all_pass(const std::vector<CheckOutcome>& outcomes) {
  for (const CheckOutcome& outcome : outcomes) {
    if (!outcome.pass) return false;
  }
  return true;
}

FgAbelianGroup schur_recursion_on_orders(const std::vector<BigInt>& orders) {
  FgAbelianGroup multiplier_part;
  FgAbelianGroup peeled;
  for (const BigInt& order : orders) {
    const FgAbelianGroup next = FgAbelianGroup::cyclic(order);
    multiplier_part = direct_sum(multiplier_part, tensor_product(peeled, next));
    peeled = direct_sum(peeled, next);
  }
  return multiplier_part;
}

FgAbelianGroup schur_recursion(const FgAbelianGroup& group) {
  return schur_recursion_on_orders(group.cyclic_orders());
}

namespace {

void descend_chains(unsigned length, unsigned max_factor, std::vector<BigInt>& chain,
                    std::vector<std::vector<BigInt>>& out) {
  if (chain.size() == length) {
    out.push_back(chain);
    return;
  }
  if (chain.empty()) {
    for (unsigned n = 2; n <= max_factor; ++n) {
      chain.push_back(n);
      descend_chains(length, max_factor, chain, out);
      chain.pop_back();
    }
    return;
  }
  const BigInt previous = chain.back();  // copied: push_back below reallocates
  for (BigInt next = 2; next <= previous; ++next) {
    if (previous % next != 0) continue;
    chain.push_back(next);
    descend_chains(length, max_factor, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<FgAbelianGroup> all_canonical_groups(unsigned max_total, unsigned max_factor) {
  std::vector<FgAbelianGroup> groups;
  for (unsigned total = 0; total <= max_total; ++total) {
    for (unsigned k = 0; k <= total; ++k) {
      const unsigned m = total - k;
      std::vector<std::vector<BigInt>> chains;
      std::vector<BigInt> scratch;
      descend_chains(k, max_factor, scratch, chains);
      for (const std::vector<BigInt>& chain : chains) {
        groups.push_back(FgAbelianGroup::from_invariant_factors(BigInt(m), chain));
      }
    }
  }
  return groups;
}

std::vector<CheckOutcome> sweep_schur(unsigned max_rank, unsigned max_factor) {
  if (max_rank < 1 || max_factor < 1) {
    throw std::invalid_argument("sweep_schur: bounds must be >= 1");
  }
  std::vector<CheckOutcome> outcomes;
  for (const FgAbelianGroup& group : all_canonical_groups(max_rank, max_factor)) {
    const FgAbelianGroup formula = nilpotent_multiplier(group, 1).result;
    const FgAbelianGroup exterior = exterior_square(group);
    const FgAbelianGroup recursion = schur_recursion(group);
    const std::string instance = "G = " + render_group(group);
    outcomes.push_back(
        {"schur formula-vs-exterior", instance, exterior, formula, formula == exterior});
    outcomes.push_back(
        {"schur formula-vs-recursion", instance, recursion, formula, formula == recursion});
    outcomes.push_back(
        {"schur exterior-vs-recursion", instance, recursion, exterior, exterior == recursion});
  }
  return outcomes;
}

std::vector<CheckOutcome> sweep_counts(unsigned max_d, unsigned max_weight) {
  if (max_d < 1 || max_weight < 1) {
    throw std::invalid_argument("sweep_counts: bounds must be >= 1");
  }
  std::vector<CheckOutcome> outcomes;
  for (unsigned d = 1; d <= max_d; ++d) {
    for (unsigned n = 1; n <= max_weight; ++n) {
      std::ostringstream instance;
      instance << "d = " << d << ", weight = " << n;

      const BigCount predicted = witt(n, BigCount(d));
      const BigCount enumerated(enumerate_basic(Alphabet::base(d), n).size());
      outcomes.push_back({"counts enumeration-vs-witt", instance.str(), predicted, enumerated,
                          enumerated == predicted});

      BigCount divisor_sum = 0;
      for (unsigned m = 1; m <= n; ++m) {
        if (n % m == 0) divisor_sum += BigCount(m) * witt(m, BigCount(d));
      }
      const BigCount power = pow(BigCount(d), n);
      outcomes.push_back({"counts mobius-inversion", instance.str(), power, divisor_sum,
                          divisor_sum == power});
    }
  }
  return outcomes;
}

std::vector<CheckOutcome> sweep_iterated(const std::vector<ClassRow>& rows, unsigned max_d) {
  if (rows.empty() || max_d < 1) {
    throw std::invalid_argument("sweep_iterated: need rows and max_d >= 1");
  }
  std::vector<CheckOutcome> outcomes;
  for (const ClassRow& row : rows) {
    for (unsigned d = 1; d <= max_d; ++d) {
      std::ostringstream instance;
      instance << "row " << row.to_string() << ", d = " << d;
      const BigCount predicted = iterated_witt(row, BigCount(d));
      const BigCount enumerated = iterated_basic_set(row, d).count;
      outcomes.push_back({"iterated enumeration-vs-witt", instance.str(), predicted, enumerated,
                          enumerated == predicted});
    }
  }
  return outcomes;
}

}  // namespace polynil
