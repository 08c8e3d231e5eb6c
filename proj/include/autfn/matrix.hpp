#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autfn/errors.hpp"

namespace autfn {

class Endo;  // endo.hpp; needed by det_sign_map only

namespace detail {

// Exact int64 arithmetic; wraparound is never silent.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in add");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in sub");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in mul");
  return r;
}

}  // namespace detail

// Exact n x n integer matrix. Entries are int64 with overflow checks.
class IntMatrix {
 public:
  explicit IntMatrix(int n);  // zero matrix
  static IntMatrix identity(int n);
  // I + c*E_ij (1-based i, j; i != j). Throws BadIndices.
  static IntMatrix elementary(int i, int j, long long c, int n);

  int dim() const { return n_; }
  long long operator()(int row, int col) const {  // 0-based
    return entries_[static_cast<std::size_t>(row * n_ + col)];
  }
  long long& operator()(int row, int col) {
    return entries_[static_cast<std::size_t>(row * n_ + col)];
  }

  bool is_identity() const;
  IntMatrix transposed() const;
  std::string str() const;  // row-major bracketed text

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_;
  std::vector<long long> entries_;
};

int compare(const IntMatrix& a, const IntMatrix& b);
inline bool operator<(const IntMatrix& a, const IntMatrix& b) { return compare(a, b) < 0; }

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);  // DimensionMismatch

// Exact determinant by fraction-free (Bareiss) elimination.
long long det(const IntMatrix& a);

// det(abelianize(f)); throws NotUnimodular unless the result is +1 or -1.
int det_sign_map(const Endo& f);

// Least k in 1..cap with A^k = I, else OrderCapExceeded.
long matrix_order_with_cap(const IntMatrix& a, long cap);

// n x n matrix over Z/m, entries reduced into 0..m-1.
class ModMatrix {
 public:
  ModMatrix(int n, unsigned modulus);  // zero matrix
  static ModMatrix identity(int n, unsigned modulus);

  int dim() const { return n_; }
  unsigned modulus() const { return m_; }
  unsigned operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * n_ + col)];
  }
  unsigned& operator()(int row, int col) {
    return entries_[static_cast<std::size_t>(row * n_ + col)];
  }

  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  int n_;
  unsigned m_;
  std::vector<unsigned> entries_;
};

int compare(const ModMatrix& a, const ModMatrix& b);
inline bool operator<(const ModMatrix& a, const ModMatrix& b) { return compare(a, b) < 0; }

ModMatrix mod_reduce(const IntMatrix& a, unsigned modulus);  // modulus >= 2
ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b);
inline bool mod_is_identity(const ModMatrix& a) { return a.is_identity(); }

}  // namespace autfn
