#pragma once

// Test-only reference implementations, written directly from the definitions
// and independent of the library's enumeration code. Used to freeze expected
// values and to cross-check enumerated sets.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace brute {

struct Tree {
  std::shared_ptr<const Tree> left;
  std::shared_ptr<const Tree> right;
  int index = 0;  // letter index when leaf
  int weight = 1;
};

using TreePtr = std::shared_ptr<const Tree>;

inline TreePtr make_leaf(int index) {
  auto t = std::make_shared<Tree>();
  t->index = index;
  return t;
}

inline TreePtr make_node(const TreePtr& left, const TreePtr& right) {
  auto t = std::make_shared<Tree>();
  t->left = left;
  t->right = right;
  t->weight = left->weight + right->weight;
  return t;
}

// weight first, then lexicographic on (left, right), leaves by index
inline int compare(const TreePtr& a, const TreePtr& b) {
  if (a->weight != b->weight) return a->weight < b->weight ? -1 : 1;
  if (!a->left) return a->index == b->index ? 0 : (a->index < b->index ? -1 : 1);
  const int by_left = compare(a->left, b->left);
  if (by_left != 0) return by_left;
  return compare(a->right, b->right);
}

// fully parenthesized rendering, used as a structural key
inline std::string key(const TreePtr& t) {
  if (!t->left) return "x" + std::to_string(t->index);
  return "(" + key(t->left) + " " + key(t->right) + ")";
}

// all bracketings of the given weight over d letters (no basic-ness filter)
inline std::vector<TreePtr> all_trees(int weight, int letters) {
  if (weight == 1) {
    std::vector<TreePtr> out;
    for (int i = 1; i <= letters; ++i) out.push_back(make_leaf(i));
    return out;
  }
  std::vector<TreePtr> out;
  for (int left_weight = 1; left_weight < weight; ++left_weight) {
    for (const TreePtr& l : all_trees(left_weight, letters)) {
      for (const TreePtr& r : all_trees(weight - left_weight, letters)) {
        out.push_back(make_node(l, r));
      }
    }
  }
  return out;
}

// a leaf is basic; [u,v] is basic when u, v are basic, u > v, and
// u = [u1,u2] implies u2 <= v
inline bool is_basic(const TreePtr& t) {
  if (!t->left) return true;
  if (!is_basic(t->left) || !is_basic(t->right)) return false;
  if (compare(t->left, t->right) <= 0) return false;
  if (t->left->left && compare(t->left->right, t->right) > 0) return false;
  return true;
}

inline std::set<std::string> basic_keys(int weight, int letters) {
  std::set<std::string> keys;
  for (const TreePtr& t : all_trees(weight, letters)) {
    if (is_basic(t)) keys.insert(key(t));
  }
  return keys;
}

inline std::int64_t count_basic(int weight, int letters) {
  return static_cast<std::int64_t>(basic_keys(weight, letters).size());
}

// --- standard invertators -------------------------------------------------
//
// Words are modeled as (head, [(letter, marker)...]) with marker 0 for the
// unsigned prefix and +-1 for the signed tail; the filter below is the
// membership predicate for B_{m,n} applied verbatim.

struct Word {
  TreePtr head;
  std::vector<std::pair<TreePtr, int>> letters;  // marker 0 | +1 | -1
};

inline std::string word_key(const Word& w) {
  std::string k = key(w.head);
  for (const auto& [letter, marker] : w.letters) {
    k += "|" + key(letter) + (marker == 0 ? "" : (marker > 0 ? "^+" : "^-"));
  }
  return k;
}

inline bool in_b_set(const Word& w, int m, int n) {
  if (!is_basic(w.head) || w.head->weight >= m) return false;
  int p = 0;
  bool in_tail = false;
  for (const auto& [letter, marker] : w.letters) {
    if (!is_basic(letter) || letter->weight >= m) return false;
    if (marker == 0) {
      if (in_tail) return false;  // unsigned letter after a signed one
      ++p;
    } else {
      in_tail = true;
    }
  }
  const int q = static_cast<int>(w.letters.size());
  if (!(0 <= p && p < q)) return false;
  // head > l_1 <= l_2 <= ...; head = [h1,h2] implies h2 <= l_1
  if (compare(w.head, w.letters.front().first) <= 0) return false;
  if (w.head->left && compare(w.head->right, w.letters.front().first) > 0) return false;
  for (int i = 1; i < q; ++i) {
    if (compare(w.letters[i - 1].first, w.letters[i].first) > 0) return false;
  }
  // one sign per distinct tail letter
  for (int i = p; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (compare(w.letters[i].first, w.letters[j].first) == 0 &&
          w.letters[i].second != w.letters[j].second) {
        return false;
      }
    }
  }
  // weight window: wt(head + prefix) < n <= wt(head + prefix + first tail letter)
  int before_tail = w.head->weight;
  for (int i = 0; i < p; ++i) before_tail += w.letters[i].first->weight;
  if (before_tail >= n) return false;
  if (before_tail + w.letters[p].first->weight < n) return false;
  return true;
}

// exhaustively forms every word of total weight <= weight_cap from the pool
// of basic commutators of weight < m and filters with the predicate
inline std::set<std::string> b_set_keys(int m, int n, int letters, int weight_cap) {
  std::vector<TreePtr> pool;
  for (int w = 1; w < m; ++w) {
    for (const TreePtr& t : all_trees(w, letters)) {
      if (is_basic(t)) pool.push_back(t);
    }
  }
  std::set<std::string> keys;
  Word word;
  auto extend = [&](auto&& self) -> void {
    int total = word.head->weight;
    for (const auto& [letter, marker] : word.letters) total += letter->weight;
    if (!word.letters.empty() && in_b_set(word, m, n)) keys.insert(word_key(word));
    for (const TreePtr& letter : pool) {
      if (total + letter->weight > weight_cap) continue;
      for (int marker : {0, 1, -1}) {
        word.letters.emplace_back(letter, marker);
        self(self);
        word.letters.pop_back();
      }
    }
  };
  for (const TreePtr& head : pool) {
    word.head = head;
    word.letters.clear();
    extend(extend);
  }
  return keys;
}

}  // namespace brute
