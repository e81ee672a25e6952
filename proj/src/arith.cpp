#include "polynil/arith.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace polynil {

ClassRow::ClassRow(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("class row must be nonempty");
  for (unsigned c : entries_) {
    if (c < 1) throw std::invalid_argument("class row entries must be >= 1");
  }
}

ClassRow ClassRow::parse(const std::string& text) {
  std::vector<unsigned> entries;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("class row '" + text + "': expected a positive integer");
    }
    unsigned long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > 1'000'000) throw std::invalid_argument("class row entry too large");
      ++pos;
    }
    if (value == 0) throw std::invalid_argument("class row entries must be >= 1");
    entries.push_back(static_cast<unsigned>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("class row '" + text + "': expected ',' between entries");
    }
    ++pos;
  }
  return ClassRow(std::move(entries));
}

ClassRow ClassRow::ones(unsigned length) {
  if (length < 1) throw std::invalid_argument("solvable length must be >= 1");
  return ClassRow(std::vector<unsigned>(length, 1));
}

std::string ClassRow::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

int mobius(long long m) {
  if (m < 1) throw std::invalid_argument("mobius: argument must be >= 1");
  int distinct_primes = 0;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;  // square factor
    ++distinct_primes;
  }
  if (m > 1) ++distinct_primes;
  return distinct_primes % 2 == 0 ? 1 : -1;
}

BigCount witt(unsigned weight, const BigCount& letters) {
  if (weight == 0) throw std::invalid_argument("witt: weight must be >= 1");
  if (letters < 0) throw std::invalid_argument("witt: letter count must be >= 0");
  BigInt sum = 0;
  for (unsigned m = 1; m <= weight; ++m) {
    if (weight % m != 0) continue;
    const int mu = mobius(m);
    if (mu == 0) continue;
    BigInt term = pow(letters, weight / m);
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum % weight != 0) {
    throw std::logic_error("witt: divisor sum not divisible by the weight");
  }
  BigInt count = sum / weight;
  if (count < 0) throw std::logic_error("witt: negative count");
  return count;
}

BigCount iterated_witt(const ClassRow& row, const BigCount& letters) {
  if (letters < 0) throw std::invalid_argument("iterated_witt: letter count must be >= 0");
  BigCount value = letters;
  for (unsigned c : row.entries()) value = witt(c + 1, value);
  return value;
}

}  // namespace polynil
