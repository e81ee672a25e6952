#pragma once

#include "polynil/arith.hpp"
#include "polynil/bigint.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace polynil {

// A commutator over an indexed alphabet: either a single letter (1-based
// index) or a bracket [left, right]. Immutable; subtrees are shared between
// values, so copies are cheap. weight() counts letter occurrences.
class Commutator {
 public:
  static Commutator leaf(int index);
  static Commutator bracket(const Commutator& left, const Commutator& right);

  bool is_leaf() const;
  int index() const;               // leaf only
  Commutator left() const;         // bracket only
  Commutator right() const;        // bracket only
  long long weight() const;

  // Left-normed bracket notation: [[x2,x1],x1] prints as "[x2,x1,x1]",
  // non-left-normed arguments stay nested: "[x2,x1,[x3,x1]]".
  std::string to_string() const;

  int compare(const Commutator& other) const;

 private:
  struct Node;
  explicit Commutator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Hall order: by weight first, then lexicographically on (left, right);
// letters by index. A strict total order on distinct commutators.
int hall_compare(const Commutator& a, const Commutator& b);
bool hall_less(const Commutator& a, const Commutator& b);
bool operator==(const Commutator& a, const Commutator& b);
bool operator!=(const Commutator& a, const Commutator& b);

// Independent membership predicate (not used by the enumerator): a letter is
// basic; [u,v] is basic when u and v are basic, u > v, and if u = [u1,u2]
// then u2 <= v.
bool is_basic_commutator(const Commutator& c, std::size_t letter_count);

// The alphabet basic commutators are built over: either d base letters
// x1..xd, or a derived alphabet whose letters are themselves commutators over
// the base (kept as full trees so weights over the base stay computable).
class Alphabet {
 public:
  static Alphabet base(std::size_t letter_count);
  // Letters must be strictly increasing in the Hall order (hence duplicate
  // free); throws std::invalid_argument otherwise.
  static Alphabet derived(std::vector<Commutator> letters);

  std::size_t size() const { return derived_ ? letters_.size() : base_size_; }
  bool is_base() const { return !derived_; }
  const std::vector<Commutator>& letters() const { return letters_; }

  // Replaces the 1-based leaf indices of `indexed` by this alphabet's letter
  // trees. Identity for base alphabets.
  Commutator substitute(const Commutator& indexed) const;

 private:
  Alphabet() = default;
  std::size_t base_size_ = 0;
  bool derived_ = false;
  std::vector<Commutator> letters_;
};

struct EnumerationLimits {
  std::size_t max_elements = 1'000'000;
};

// All basic commutators of the given weight over the alphabet, in Hall order.
// Weight is counted in alphabet letters; for derived alphabets the returned
// trees are substituted down to the base. Throws ResourceLimitError when a
// predicted level size exceeds the cap.
std::vector<Commutator> enumerate_basic(const Alphabet& alphabet, unsigned weight,
                                        const EnumerationLimits& limits = {});

// Length of enumerate_basic, cross-checked against the Witt formula; a
// mismatch throws std::logic_error. This is the count equivalence as a
// first-class operation.
BigCount count_basic(const Alphabet& alphabet, unsigned weight,
                     const EnumerationLimits& limits = {});

// A_{m,n}: basic commutators of weight exactly n that are left-normed words
// [c, a_1, ..., a_p] whose head and a_i all have weight < m. A_{m,m} is all
// basic commutators of weight m.
std::vector<Commutator> generate_a_set(unsigned m, unsigned n, const Alphabet& alphabet,
                                       const EnumerationLimits& limits = {});

// A word [head, a_1, ..., a_p, b_1^s1, ..., b_q^sq]: unsigned prefix, then a
// tail of +-1 signed letters.
struct StandardInvertator {
  Commutator head;
  std::vector<Commutator> prefix;
  std::vector<std::pair<Commutator, int>> tail;  // sign in {+1, -1}

  long long weight() const;
  std::string to_string() const;  // "[x2,x1,x1^-1]"; +1 prints bare
};

bool operator==(const StandardInvertator& a, const StandardInvertator& b);

// B_{m,n}: standard invertators whose components are basic of weight < m,
// with head > a_1 <= ... <= a_p <= b_1 <= ... <= b_q, one sign per distinct
// tail letter, head = [h1,h2] implying h2 <= a_1, and the weight window
//   wt([head,a_1..a_p]) < n <= wt([head,a_1..a_p,b_1]).
// The set is infinite; enumeration is truncated to total weight <= weight_cap
// and ordered by (total weight, components, signs).
std::vector<StandardInvertator> generate_b_set(unsigned m, unsigned n, const Alphabet& alphabet,
                                               unsigned weight_cap,
                                               const EnumerationLimits& limits = {});

// Independent predicate for membership in B_{m,n} (including the standard
// invertator conditions themselves).
bool is_standard_invertator(const StandardInvertator& word, unsigned m, unsigned n,
                            std::size_t letter_count);

struct IteratedBasicSet {
  BigCount count;
  std::vector<Commutator> members;  // trees over the base letters
};

// E_t for the class row: basic commutators of weight c_1+1 on x1..xd, then of
// weight c_2+1 on those, and so on. The count equals iterated_witt(row, d).
IteratedBasicSet iterated_basic_set(const ClassRow& row, std::size_t letter_count,
                                    const EnumerationLimits& limits = {});

// Largest leaf index appearing in the tree.
int max_leaf_index(const Commutator& c);

}  // namespace polynil
