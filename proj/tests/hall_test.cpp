#include "polynil/hall.hpp"

#include "brute_force.hpp"
#include "polynil/errors.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace polynil;

namespace {

// renders a library commutator in the brute-force oracle's key format
std::string structural_key(const Commutator& c) {
  if (c.is_leaf()) return "x" + std::to_string(c.index());
  return "(" + structural_key(c.left()) + " " + structural_key(c.right()) + ")";
}

std::set<std::string> keys_of(const std::vector<Commutator>& elements) {
  std::set<std::string> keys;
  for (const Commutator& c : elements) keys.insert(structural_key(c));
  return keys;
}

std::string invertator_key(const StandardInvertator& word) {
  std::string k = structural_key(word.head);
  for (const Commutator& a : word.prefix) k += "|" + structural_key(a);
  for (const auto& [b, sign] : word.tail) {
    k += "|" + structural_key(b) + (sign > 0 ? "^+" : "^-");
  }
  return k;
}

}  // namespace

TEST_CASE("weight-one basic commutators are the letters") {
  const std::vector<Commutator> ones = enumerate_basic(Alphabet::base(3), 1);
  REQUIRE(ones.size() == 3);
  CHECK(ones[0].to_string() == "x1");
  CHECK(ones[1].to_string() == "x2");
  CHECK(ones[2].to_string() == "x3");
}

TEST_CASE("two letters, weight three") {
  const std::vector<Commutator> basics = enumerate_basic(Alphabet::base(2), 3);
  REQUIRE(basics.size() == 2);
  CHECK(basics[0].to_string() == "[x2,x1,x1]");
  CHECK(basics[1].to_string() == "[x2,x1,x2]");
}

TEST_CASE("one letter admits no brackets") {
  CHECK(enumerate_basic(Alphabet::base(1), 2).empty());
  CHECK(count_basic(Alphabet::base(1), 5) == 0);
}

TEST_CASE("enumeration matches the brute-force oracle as sets") {
  for (int d = 1; d <= 3; ++d) {
    for (unsigned w = 1; w <= 5; ++w) {
      CAPTURE(d);
      CAPTURE(w);
      CHECK(keys_of(enumerate_basic(Alphabet::base(d), w)) == brute::basic_keys(w, d));
    }
  }
}

TEST_CASE("count equivalence with the Witt formula") {
  CHECK(count_basic(Alphabet::base(4), 2) == 6);
  CHECK(count_basic(Alphabet::base(3), 3) == 8);
  for (unsigned d = 1; d <= 4; ++d) {
    for (unsigned w = 1; w <= 6; ++w) {
      CHECK(count_basic(Alphabet::base(d), w) == witt(w, d));
    }
  }
}

TEST_CASE("every enumerated element passes the independent predicate") {
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned w = 1; w <= 5; ++w) {
      for (const Commutator& c : enumerate_basic(Alphabet::base(d), w)) {
        CHECK(is_basic_commutator(c, d));
        CHECK(c.weight() == w);
      }
    }
  }
}

TEST_CASE("hall order is a strict total order on enumerated sets") {
  std::vector<Commutator> pool;
  for (unsigned w = 1; w <= 4; ++w) {
    for (const Commutator& c : enumerate_basic(Alphabet::base(3), w)) pool.push_back(c);
  }
  for (const Commutator& a : pool) CHECK(hall_compare(a, a) == 0);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const int forward = hall_compare(pool[i], pool[j]);
      CHECK(forward == -hall_compare(pool[j], pool[i]));
      if (i != j) CHECK(forward != 0);  // totality on distinct elements
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (hall_less(pool[i], pool[j]) && hall_less(pool[j], pool[k])) {
          CHECK(hall_less(pool[i], pool[k]));
        }
      }
    }
  }
}

TEST_CASE("enumeration rejects empty alphabets and trips the resource guard") {
  CHECK_THROWS_AS(enumerate_basic(Alphabet::base(0), 2), std::invalid_argument);
  EnumerationLimits tight{10};
  CHECK_THROWS_AS(enumerate_basic(Alphabet::base(3), 5, tight), ResourceLimitError);
}

TEST_CASE("derived alphabets enumerate over their letters") {
  // letters: the three weight-2 basics on x1..x3; weight-2 basics on those
  const std::vector<Commutator> letters = enumerate_basic(Alphabet::base(3), 2);
  REQUIRE(letters.size() == 3);
  const Alphabet derived = Alphabet::derived(letters);
  const std::vector<Commutator> second = enumerate_basic(derived, 2);
  REQUIRE(second.size() == 3);  // chi2(3)
  for (const Commutator& c : second) {
    CHECK(c.weight() == 4);  // substituted down to the base letters
    CHECK(is_basic_commutator(c, 3));
  }
  CHECK_THROWS_AS(Alphabet::derived({letters[1], letters[0]}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::derived({letters[0], letters[0]}), std::invalid_argument);
}

TEST_CASE("A_{m,m} is all basic commutators of weight m") {
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned m = 2; m <= 4; ++m) {
      CHECK(keys_of(generate_a_set(m, m, Alphabet::base(d))) ==
            keys_of(enumerate_basic(Alphabet::base(d), m)));
    }
  }
}

TEST_CASE("A-set examples") {
  CHECK(generate_a_set(2, 2, Alphabet::base(2)).size() == 1);
  CHECK(generate_a_set(3, 3, Alphabet::base(2)).size() == 2);
  CHECK(generate_a_set(2, 2, Alphabet::base(1)).empty());
  CHECK_THROWS_AS(generate_a_set(1, 2, Alphabet::base(2)), std::invalid_argument);
  CHECK_THROWS_AS(generate_a_set(3, 2, Alphabet::base(2)), std::invalid_argument);
}

TEST_CASE("A_{2,n} keeps only left-normed words with letter components") {
  // [[x2,x1],[x3,x1]] is basic of weight 4 but its right argument has weight 2
  const std::vector<Commutator> a24 = generate_a_set(2, 4, Alphabet::base(3));
  for (const Commutator& c : a24) {
    Commutator cur = c;
    while (!cur.is_leaf()) {
      CHECK(cur.right().weight() == 1);
      cur = cur.left();
    }
  }
  const std::set<std::string> keys = keys_of(a24);
  const std::set<std::string> all = keys_of(enumerate_basic(Alphabet::base(3), 4));
  CHECK(keys.size() < all.size());
  for (const std::string& k : keys) CHECK(all.count(k) == 1);
}

TEST_CASE("B-set examples") {
  CHECK(generate_b_set(2, 3, Alphabet::base(1), 4).empty());
  CHECK(generate_b_set(2, 3, Alphabet::base(2), 2).empty());

  const std::vector<StandardInvertator> b23 = generate_b_set(2, 3, Alphabet::base(2), 3);
  REQUIRE(b23.size() == 4);  // [x2,x1,x1^+-1] and [x2,x1,x2^+-1]
  for (const StandardInvertator& word : b23) {
    CHECK(word.prefix.size() == 1);  // p = 1 forced by the weight window
    CHECK(word.tail.size() == 1);
    CHECK(is_standard_invertator(word, 2, 3, 2));
  }
  CHECK(b23[0].to_string() == "[x2,x1,x1]");
  CHECK(b23[1].to_string() == "[x2,x1,x1^-1]");

  CHECK_THROWS_AS(generate_b_set(2, 3, Alphabet::base(2), 2 + 0, EnumerationLimits{}),
                  std::invalid_argument);  // cap < n
}

TEST_CASE("B sets match the brute-force word filter") {
  for (unsigned d = 1; d <= 2; ++d) {
    for (unsigned m = 2; m <= 4; ++m) {
      for (unsigned n = m; n <= 4; ++n) {
        for (unsigned cap = n; cap <= 5; ++cap) {
          CAPTURE(d);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(cap);
          const std::vector<StandardInvertator> generated =
              generate_b_set(m, n, Alphabet::base(d), cap);
          std::set<std::string> generated_keys;
          for (const StandardInvertator& word : generated) {
            CHECK(is_standard_invertator(word, m, n, d));
            CHECK(word.weight() <= cap);
            generated_keys.insert(invertator_key(word));
          }
          CHECK(generated_keys.size() == generated.size());  // no duplicates
          CHECK(generated_keys == brute::b_set_keys(m, n, d, cap));
        }
      }
    }
  }
}

TEST_CASE("B-set output is deterministically ordered") {
  const std::vector<StandardInvertator> first = generate_b_set(2, 4, Alphabet::base(2), 5);
  const std::vector<StandardInvertator> second = generate_b_set(2, 4, Alphabet::base(2), 5);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
  for (std::size_t i = 1; i < first.size(); ++i) CHECK(first[i - 1].weight() <= first[i].weight());
}

TEST_CASE("A sets below n and the truncated B set are disjoint as written") {
  for (unsigned d = 1; d <= 2; ++d) {
    for (unsigned m = 2; m <= 4; ++m) {
      for (unsigned n = m; n <= 4; ++n) {
        std::set<std::string> seen;
        std::size_t total = 0;
        for (unsigned k = m; k < n; ++k) {
          for (const Commutator& c : generate_a_set(m, k, Alphabet::base(d))) {
            seen.insert(c.to_string());
            ++total;
          }
        }
        for (const StandardInvertator& word : generate_b_set(m, n, Alphabet::base(d), 5)) {
          seen.insert(word.to_string());
          ++total;
        }
        CHECK(seen.size() == total);
      }
    }
  }
}

TEST_CASE("iterated basic sets match the iterated Witt counts") {
  CHECK(iterated_basic_set(ClassRow({1, 1}), 3).count == 3);
  CHECK(iterated_basic_set(ClassRow({2}), 2).count == 2);
  CHECK(iterated_basic_set(ClassRow({1}), 1).count == 0);
  const std::vector<ClassRow> rows = {ClassRow({1, 1}), ClassRow({1, 2}), ClassRow({2, 1}),
                                      ClassRow({1, 1, 1})};
  for (const ClassRow& row : rows) {
    for (unsigned d = 1; d <= 3; ++d) {
      CAPTURE(row.to_string());
      CAPTURE(d);
      CHECK(iterated_basic_set(row, d).count == iterated_witt(row, d));
    }
  }
}

TEST_CASE("iterated members live over the base alphabet with uniform weight") {
  const ClassRow row({2, 1});
  const IteratedBasicSet set = iterated_basic_set(row, 3);
  CHECK(set.count == 28);  // chi2(chi3(3)) = chi2(8)
  for (const Commutator& c : set.members) {
    CHECK(c.weight() == 6);  // (2+1) * (1+1)
    // substitution is order preserving, so the members stay basic over the base
    CHECK(is_basic_commutator(c, 3));
    CHECK(max_leaf_index(c) <= 3);
  }
}

TEST_CASE("iterated members restricted to letter prefixes count the differences") {
  // members on x1..xj only are exactly the iterated set of the smaller
  // alphabet, so members mentioning x_j count f_j - f_{j-1}
  const ClassRow row({1, 1});
  const IteratedBasicSet set = iterated_basic_set(row, 4);
  REQUIRE(set.count == 15);
  for (int j = 1; j <= 4; ++j) {
    std::size_t up_to_j = 0;
    std::size_t mentioning_j = 0;
    for (const Commutator& c : set.members) {
      const int top = max_leaf_index(c);
      if (top <= j) ++up_to_j;
      if (top == j) ++mentioning_j;
    }
    CHECK(BigCount(up_to_j) == iterated_witt(row, j));
    CHECK(BigCount(mentioning_j) == iterated_witt(row, j) - iterated_witt(row, j - 1));
  }
}

TEST_CASE("iterated set trips the resource guard on oversized levels") {
  EnumerationLimits tight{100};
  CHECK_THROWS_AS(iterated_basic_set(ClassRow({2, 2}), 3, tight), ResourceLimitError);
}
