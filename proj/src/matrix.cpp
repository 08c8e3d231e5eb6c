#include "autfn/matrix.hpp"

#include "autfn/endo.hpp"

namespace autfn {

IntMatrix::IntMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::elementary(int i, int j, long long c, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw BadIndices("elementary: need distinct 1-based indices within 1.." + std::to_string(n));
  }
  IntMatrix m = identity(n);
  m(i - 1, j - 1) = c;
  return m;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::string IntMatrix::str() const {
  std::string out = "[";
  for (int r = 0; r < n_; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < n_; ++c) {
      if (c) out += ", ";
      out += std::to_string((*this)(r, c));
    }
    out += "]";
  }
  out += "]";
  return out;
}

int compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c) ? -1 : 1;
    }
  return 0;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mul: dimensions " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
  int n = a.dim();
  IntMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long long acc = 0;
      for (int k = 0; k < n; ++k) {
        acc = detail::checked_add(acc, detail::checked_mul(a(r, k), b(k, c)));
      }
      out(r, c) = acc;
    }
  return out;
}

long long det(const IntMatrix& a) {
  // Bareiss fraction-free elimination; all divisions are exact.
  int n = a.dim();
  IntMatrix m = a;
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        long long num = detail::checked_sub(detail::checked_mul(m(r, c), m(k, k)),
                                            detail::checked_mul(m(r, k), m(k, c)));
        m(r, c) = num / prev;
      }
      m(r, k) = 0;
    }
    prev = m(k, k);
  }
  return detail::checked_mul(sign, m(n - 1, n - 1));
}

int det_sign_map(const Endo& f) {
  long long d = det(abelianize(f));
  if (d != 1 && d != -1) {
    throw NotUnimodular("abelianization determinant is " + std::to_string(d));
  }
  return static_cast<int>(d);
}

long matrix_order_with_cap(const IntMatrix& a, long cap) {
  if (cap < 1) throw OrderCapExceeded("order cap must be >= 1");
  IntMatrix p = a;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = mul(p, a);
  }
  throw OrderCapExceeded("no order <= " + std::to_string(cap));
}

ModMatrix::ModMatrix(int n, unsigned modulus)
    : n_(n), m_(modulus), entries_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
  if (modulus < 2) throw DimensionMismatch("modulus must be >= 2");
}

ModMatrix ModMatrix::identity(int n, unsigned modulus) {
  ModMatrix m(n, modulus);
  for (int i = 0; i < n; ++i) m(i, i) = 1 % modulus;
  return m;
}

bool ModMatrix::is_identity() const { return *this == identity(n_, m_); }

std::string ModMatrix::str() const {
  std::string out = "[";
  for (int r = 0; r < n_; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < n_; ++c) {
      if (c) out += ", ";
      out += std::to_string((*this)(r, c));
    }
    out += "]";
  }
  out += "]";
  return out;
}

int compare(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus() ? -1 : 1;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c) ? -1 : 1;
    }
  return 0;
}

ModMatrix mod_reduce(const IntMatrix& a, unsigned modulus) {
  ModMatrix out(a.dim(), modulus);
  long long m = static_cast<long long>(modulus);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      long long v = a(r, c) % m;
      if (v < 0) v += m;
      out(r, c) = static_cast<unsigned>(v);
    }
  return out;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim() != b.dim() || a.modulus() != b.modulus()) {
    throw DimensionMismatch("mod_mul: incompatible matrices");
  }
  int n = a.dim();
  ModMatrix out(n, a.modulus());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      unsigned long long acc = 0;
      for (int k = 0; k < n; ++k) {
        acc += static_cast<unsigned long long>(a(r, k)) * b(k, c);
      }
      out(r, c) = static_cast<unsigned>(acc % a.modulus());
    }
  return out;
}

}  // namespace autfn
