#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "autfn/errors.hpp"

namespace autfn {

// A permutation of {1, ..., size}. Cycle notation at the boundaries,
// e.g. "(1 2)(3 4)"; fixed points are omitted and the identity prints "()".
class Perm {
 public:
  explicit Perm(int size);  // identity

  // images[i-1] is the 1-based image of i; must be a bijection.
  static Perm from_mapping(const std::vector<int>& images);

  // Disjoint cycles with 1-based entries within 1..size.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles, int size);

  // Parses "(1 2)(3 4)"; "()" or "" is the identity.
  static Perm parse_cycles(std::string_view text, int size);

  int size() const { return static_cast<int>(map_.size()); }
  int image_of(int i) const;  // 1-based in, 1-based out

  bool is_identity() const;
  // Left-to-right composition: result.image_of(i) == q.image_of(image_of(i)).
  Perm then(const Perm& q) const;
  Perm inverse() const;

  std::string cycle_string() const;

  // All size! permutations in a fixed deterministic order.
  static std::vector<Perm> all(int size);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.map_ < b.map_; }

 private:
  std::vector<int> map_;  // 0-based internally
};

}  // namespace autfn
