#include "polynil/hall.hpp"

#include "polynil/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace polynil {

struct Commutator::Node {
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int index = 0;  // letter index when leaf, 0 otherwise
  long long weight = 0;
};

Commutator Commutator::leaf(int index) {
  if (index < 1) throw std::invalid_argument("letter index must be >= 1");
  auto node = std::make_shared<Node>();
  node->index = index;
  node->weight = 1;
  return Commutator(std::move(node));
}

Commutator Commutator::bracket(const Commutator& left, const Commutator& right) {
  auto node = std::make_shared<Node>();
  node->left = left.node_;
  node->right = right.node_;
  node->weight = left.weight() + right.weight();
  return Commutator(std::move(node));
}

bool Commutator::is_leaf() const { return node_->left == nullptr; }

int Commutator::index() const {
  if (!is_leaf()) throw std::logic_error("index() on a bracket");
  return node_->index;
}

Commutator Commutator::left() const {
  if (is_leaf()) throw std::logic_error("left() on a leaf");
  return Commutator(node_->left);
}

Commutator Commutator::right() const {
  if (is_leaf()) throw std::logic_error("right() on a leaf");
  return Commutator(node_->right);
}

long long Commutator::weight() const { return node_->weight; }

int Commutator::compare(const Commutator& other) const {
  if (node_ == other.node_) return 0;
  if (weight() != other.weight()) return weight() < other.weight() ? -1 : 1;
  if (weight() == 1) {
    // both leaves; ordered by letter index
    const int a = node_->index;
    const int b = other.node_->index;
    return a == b ? 0 : (a < b ? -1 : 1);
  }
  const int by_left = left().compare(other.left());
  if (by_left != 0) return by_left;
  return right().compare(other.right());
}

namespace {

// "x2,x1" for the left spine of [[x2,x1]]; arguments that are themselves
// brackets stay enclosed.
std::string spine_word(const Commutator& c);

std::string atom_string(const Commutator& c) {
  if (c.is_leaf()) return "x" + std::to_string(c.index());
  return "[" + spine_word(c) + "]";
}

std::string spine_word(const Commutator& c) {
  if (c.is_leaf()) return atom_string(c);
  return spine_word(c.left()) + "," + atom_string(c.right());
}

}  // namespace

std::string Commutator::to_string() const { return atom_string(*this); }

int hall_compare(const Commutator& a, const Commutator& b) { return a.compare(b); }
bool hall_less(const Commutator& a, const Commutator& b) { return a.compare(b) < 0; }
bool operator==(const Commutator& a, const Commutator& b) { return a.compare(b) == 0; }
bool operator!=(const Commutator& a, const Commutator& b) { return a.compare(b) != 0; }

bool is_basic_commutator(const Commutator& c, std::size_t letter_count) {
  if (c.is_leaf()) {
    return c.index() >= 1 && static_cast<std::size_t>(c.index()) <= letter_count;
  }
  const Commutator u = c.left();
  const Commutator v = c.right();
  if (!is_basic_commutator(u, letter_count) || !is_basic_commutator(v, letter_count)) return false;
  if (hall_compare(u, v) <= 0) return false;           // need u > v
  if (!u.is_leaf() && hall_less(v, u.right())) return false;  // need u2 <= v
  return true;
}

Alphabet Alphabet::base(std::size_t letter_count) {
  Alphabet a;
  a.base_size_ = letter_count;
  return a;
}

Alphabet Alphabet::derived(std::vector<Commutator> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (hall_compare(letters[i - 1], letters[i]) >= 0) {
      throw std::invalid_argument("derived alphabet letters must be strictly Hall-increasing");
    }
  }
  Alphabet a;
  a.derived_ = true;
  a.letters_ = std::move(letters);
  return a;
}

namespace {

Commutator substitute_letters(const Commutator& indexed, const std::vector<Commutator>& letters) {
  if (indexed.is_leaf()) {
    const int i = indexed.index();
    if (i < 1 || static_cast<std::size_t>(i) > letters.size()) {
      throw std::logic_error("leaf index outside the alphabet");
    }
    return letters[static_cast<std::size_t>(i) - 1];
  }
  return Commutator::bracket(substitute_letters(indexed.left(), letters),
                             substitute_letters(indexed.right(), letters));
}

void check_level_cap(unsigned weight, std::size_t letter_count, const EnumerationLimits& limits) {
  const BigCount predicted = witt(weight, BigCount(letter_count));
  if (predicted > limits.max_elements) {
    throw ResourceLimitError("enumeration of weight-" + std::to_string(weight) +
                             " basic commutators on " + std::to_string(letter_count) +
                             " letters would produce " + to_decimal(predicted) +
                             " elements (cap " + std::to_string(limits.max_elements) + ")");
  }
}

// Basic commutators of weights 1..max_weight over letter indices 1..letter_count,
// grouped by weight, each level in Hall order.
std::vector<std::vector<Commutator>> basic_levels(std::size_t letter_count, unsigned max_weight,
                                                  const EnumerationLimits& limits) {
  std::vector<std::vector<Commutator>> levels(max_weight + 1);
  if (letter_count > limits.max_elements) {
    throw ResourceLimitError("alphabet larger than the enumeration cap");
  }
  if (max_weight >= 1) {
    levels[1].reserve(letter_count);
    for (std::size_t i = 1; i <= letter_count; ++i) {
      levels[1].push_back(Commutator::leaf(static_cast<int>(i)));
    }
  }
  for (unsigned w = 2; w <= max_weight; ++w) {
    check_level_cap(w, letter_count, limits);
    std::vector<Commutator>& out = levels[w];
    for (unsigned left_weight = (w + 1) / 2; left_weight <= w - 1; ++left_weight) {
      const unsigned right_weight = w - left_weight;
      for (const Commutator& u : levels[left_weight]) {
        for (const Commutator& v : levels[right_weight]) {
          if (left_weight == right_weight && hall_compare(u, v) <= 0) continue;
          if (!u.is_leaf() && hall_less(v, u.right())) continue;  // need u2 <= v
          out.push_back(Commutator::bracket(u, v));
        }
      }
    }
    std::sort(out.begin(), out.end(), hall_less);
  }
  return levels;
}

}  // namespace

Commutator Alphabet::substitute(const Commutator& indexed) const {
  if (!derived_) return indexed;
  return substitute_letters(indexed, letters_);
}

std::vector<Commutator> enumerate_basic(const Alphabet& alphabet, unsigned weight,
                                        const EnumerationLimits& limits) {
  if (weight < 1) throw std::invalid_argument("enumerate_basic: weight must be >= 1");
  if (alphabet.size() == 0) throw std::invalid_argument("enumerate_basic: empty alphabet");
  std::vector<Commutator> result = basic_levels(alphabet.size(), weight, limits)[weight];
  if (!alphabet.is_base()) {
    for (Commutator& c : result) c = alphabet.substitute(c);
  }
  return result;
}

BigCount count_basic(const Alphabet& alphabet, unsigned weight, const EnumerationLimits& limits) {
  const std::vector<Commutator> elements = enumerate_basic(alphabet, weight, limits);
  const BigCount enumerated(elements.size());
  const BigCount predicted = witt(weight, BigCount(alphabet.size()));
  if (enumerated != predicted) {
    throw std::logic_error("count_basic: enumeration found " + to_decimal(enumerated) +
                           " elements but the Witt formula predicts " + to_decimal(predicted));
  }
  return enumerated;
}

namespace {

// c = [head, a_1, ..., a_p] with head and every a_i of weight < bound?
bool left_normed_parts_below(const Commutator& c, unsigned bound) {
  Commutator cur = c;
  while (cur.weight() >= bound) {
    if (cur.is_leaf()) return false;
    if (cur.right().weight() >= static_cast<long long>(bound)) return false;
    cur = cur.left();
  }
  return true;
}

}  // namespace

std::vector<Commutator> generate_a_set(unsigned m, unsigned n, const Alphabet& alphabet,
                                       const EnumerationLimits& limits) {
  if (m < 2 || n < m) throw std::invalid_argument("generate_a_set: need 2 <= m <= n");
  if (alphabet.size() == 0) throw std::invalid_argument("generate_a_set: empty alphabet");
  const std::vector<std::vector<Commutator>> levels = basic_levels(alphabet.size(), n, limits);
  std::vector<Commutator> result;
  for (const Commutator& c : levels[n]) {
    if (left_normed_parts_below(c, m)) result.push_back(c);
  }
  if (!alphabet.is_base()) {
    for (Commutator& c : result) c = alphabet.substitute(c);
  }
  return result;
}

long long StandardInvertator::weight() const {
  long long total = head.weight();
  for (const Commutator& a : prefix) total += a.weight();
  for (const auto& [b, sign] : tail) total += b.weight();
  return total;
}

std::string StandardInvertator::to_string() const {
  std::string out = "[" + spine_word(head);
  for (const Commutator& a : prefix) out += "," + atom_string(a);
  for (const auto& [b, sign] : tail) {
    out += "," + atom_string(b);
    if (sign < 0) out += "^-1";
  }
  out += "]";
  return out;
}

bool operator==(const StandardInvertator& a, const StandardInvertator& b) {
  if (a.head != b.head || a.prefix.size() != b.prefix.size() || a.tail.size() != b.tail.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.prefix.size(); ++i) {
    if (a.prefix[i] != b.prefix[i]) return false;
  }
  for (std::size_t i = 0; i < a.tail.size(); ++i) {
    if (a.tail[i].first != b.tail[i].first || a.tail[i].second != b.tail[i].second) return false;
  }
  return true;
}

namespace {

int sequence_compare(const StandardInvertator& a, const StandardInvertator& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  const int by_head = hall_compare(a.head, b.head);
  if (by_head != 0) return by_head;
  auto letter_at = [](const StandardInvertator& w, std::size_t i) {
    return i < w.prefix.size() ? w.prefix[i] : w.tail[i - w.prefix.size()].first;
  };
  const std::size_t a_len = a.prefix.size() + a.tail.size();
  const std::size_t b_len = b.prefix.size() + b.tail.size();
  for (std::size_t i = 0; i < std::min(a_len, b_len); ++i) {
    const int c = hall_compare(letter_at(a, i), letter_at(b, i));
    if (c != 0) return c;
  }
  if (a_len != b_len) return a_len < b_len ? -1 : 1;
  for (std::size_t i = 0; i < std::min(a.tail.size(), b.tail.size()); ++i) {
    if (a.tail[i].second != b.tail[i].second) return a.tail[i].second > b.tail[i].second ? -1 : 1;
  }
  if (a.tail.size() != b.tail.size()) return a.tail.size() < b.tail.size() ? -1 : 1;
  return 0;
}

}  // namespace

std::vector<StandardInvertator> generate_b_set(unsigned m, unsigned n, const Alphabet& alphabet,
                                               unsigned weight_cap,
                                               const EnumerationLimits& limits) {
  if (m < 2 || n < m) throw std::invalid_argument("generate_b_set: need 2 <= m <= n");
  if (weight_cap < n) throw std::invalid_argument("generate_b_set: weight cap must be >= n");
  if (alphabet.size() == 0) throw std::invalid_argument("generate_b_set: empty alphabet");

  // component pool: all basic commutators of weight < m, in Hall order
  const std::vector<std::vector<Commutator>> levels =
      basic_levels(alphabet.size(), m - 1, limits);
  std::vector<Commutator> pool;
  for (unsigned w = 1; w < m; ++w) pool.insert(pool.end(), levels[w].begin(), levels[w].end());

  std::vector<StandardInvertator> out;
  auto guard = [&]() {
    if (out.size() >= limits.max_elements) {
      throw ResourceLimitError("generate_b_set: more than " +
                               std::to_string(limits.max_elements) + " invertators");
    }
  };

  std::vector<std::size_t> chain;  // indices into pool, nondecreasing
  for (std::size_t head_idx = 0; head_idx < pool.size(); ++head_idx) {
    const Commutator& head = pool[head_idx];
    const long long head_weight = head.weight();

    auto emit_with_signs = [&](long long total_weight) {
      // the unsigned prefix length is forced by the weight window
      std::size_t p = 0;
      long long partial = head_weight;
      while (p < chain.size() && partial + pool[chain[p]].weight() < n) {
        partial += pool[chain[p]].weight();
        ++p;
      }
      if (total_weight < n) return;  // no split with p < q exists yet
      // group equal tail letters into runs; one sign per run
      std::vector<std::pair<std::size_t, std::size_t>> runs;  // (pool index, length)
      for (std::size_t i = p; i < chain.size(); ++i) {
        if (!runs.empty() && runs.back().first == chain[i]) {
          ++runs.back().second;
        } else {
          runs.emplace_back(chain[i], 1);
        }
      }
      if (runs.size() >= 63) {
        throw ResourceLimitError("generate_b_set: too many sign combinations");
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << runs.size()); ++mask) {
        guard();
        StandardInvertator word{head, {}, {}};
        for (std::size_t i = 0; i < p; ++i) word.prefix.push_back(pool[chain[i]]);
        for (std::size_t r = 0; r < runs.size(); ++r) {
          const int sign = (mask >> r) & 1 ? -1 : 1;
          for (std::size_t k = 0; k < runs[r].second; ++k) {
            word.tail.emplace_back(pool[runs[r].first], sign);
          }
        }
        out.push_back(std::move(word));
      }
    };

    auto extend = [&](auto&& self, std::size_t min_idx, long long total_weight) -> void {
      for (std::size_t i = min_idx; i < pool.size(); ++i) {
        const long long next_weight = total_weight + pool[i].weight();
        if (next_weight > weight_cap) continue;
        chain.push_back(i);
        emit_with_signs(next_weight);
        self(self, i, next_weight);
        chain.pop_back();
      }
    };

    // admissible first letters: a_1 < head, and head = [h1,h2] needs h2 <= a_1
    for (std::size_t first = 0; first < pool.size(); ++first) {
      if (hall_compare(pool[first], head) >= 0) break;  // pool is Hall-sorted
      if (!head.is_leaf() && hall_less(pool[first], head.right())) continue;
      const long long total = head_weight + pool[first].weight();
      if (total > weight_cap) continue;
      chain.push_back(first);
      emit_with_signs(total);
      extend(extend, first, total);
      chain.pop_back();
    }
  }

  std::sort(out.begin(), out.end(), [](const StandardInvertator& a, const StandardInvertator& b) {
    return sequence_compare(a, b) < 0;
  });
  if (!alphabet.is_base()) {
    for (StandardInvertator& word : out) {
      word.head = alphabet.substitute(word.head);
      for (Commutator& a : word.prefix) a = alphabet.substitute(a);
      for (auto& [b, sign] : word.tail) b = alphabet.substitute(b);
    }
  }
  return out;
}

bool is_standard_invertator(const StandardInvertator& word, unsigned m, unsigned n,
                            std::size_t letter_count) {
  if (m < 2 || n < m) return false;
  if (word.tail.empty()) return false;  // need p < q
  if (!is_basic_commutator(word.head, letter_count) || word.head.weight() >= m) return false;

  std::vector<Commutator> sequence;
  sequence.reserve(word.prefix.size() + word.tail.size());
  for (const Commutator& a : word.prefix) sequence.push_back(a);
  for (const auto& [b, sign] : word.tail) {
    if (sign != 1 && sign != -1) return false;
    sequence.push_back(b);
  }
  for (const Commutator& a : sequence) {
    if (!is_basic_commutator(a, letter_count) || a.weight() >= m) return false;
  }
  // head > a_1 <= a_2 <= ... and head = [h1,h2] implies h2 <= a_1
  if (hall_compare(word.head, sequence.front()) <= 0) return false;
  if (!word.head.is_leaf() && hall_less(sequence.front(), word.head.right())) return false;
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (hall_compare(sequence[i - 1], sequence[i]) > 0) return false;
  }
  // equal tail letters carry one common sign
  for (std::size_t i = 0; i < word.tail.size(); ++i) {
    for (std::size_t j = i + 1; j < word.tail.size(); ++j) {
      if (word.tail[i].first == word.tail[j].first &&
          word.tail[i].second != word.tail[j].second) {
        return false;
      }
    }
  }
  // weight window around n
  long long before_tail = word.head.weight();
  for (const Commutator& a : word.prefix) before_tail += a.weight();
  if (before_tail >= n) return false;
  if (before_tail + word.tail.front().first.weight() < n) return false;
  return true;
}

IteratedBasicSet iterated_basic_set(const ClassRow& row, std::size_t letter_count,
                                    const EnumerationLimits& limits) {
  if (letter_count < 1) throw std::invalid_argument("iterated_basic_set: need >= 1 letter");
  std::vector<Commutator> current;
  current.reserve(letter_count);
  for (std::size_t i = 1; i <= letter_count; ++i) {
    current.push_back(Commutator::leaf(static_cast<int>(i)));
  }
  for (unsigned c : row.entries()) {
    if (current.empty()) break;  // chi of an empty set stays empty
    const unsigned weight = c + 1;
    std::vector<Commutator> indexed =
        basic_levels(current.size(), weight, limits)[weight];
    std::vector<Commutator> next;
    next.reserve(indexed.size());
    for (const Commutator& tree : indexed) next.push_back(substitute_letters(tree, current));
    current = std::move(next);
  }
  IteratedBasicSet result;
  result.count = BigCount(current.size());
  result.members = std::move(current);
  return result;
}

int max_leaf_index(const Commutator& c) {
  if (c.is_leaf()) return c.index();
  return std::max(max_leaf_index(c.left()), max_leaf_index(c.right()));
}

}  // namespace polynil
