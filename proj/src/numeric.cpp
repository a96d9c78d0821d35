#include "alc/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>

namespace alc {

static Int gcd_ll(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat::Rat(Int n, Int d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = gcd_ll(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num * b.num, a.den * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw Error("division by zero rational");
  return Rat(a.num * b.den, a.den * b.num);
}
bool operator<(const Rat& a, const Rat& b) {
  return a.num * b.den < b.num * a.den;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << '/' << den;
  return os.str();
}

VecQ to_rational(const VecZ& v) {
  VecQ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

VecZ to_integral(const VecQ& v) {
  VecZ r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer()) throw Error("vector is not integral: " + v[i].str());
    r[i] = v[i].num;
  }
  return r;
}

VecZ vec_add(const VecZ& a, const VecZ& b) {
  assert(a.size() == b.size());
  VecZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
VecZ vec_sub(const VecZ& a, const VecZ& b) {
  assert(a.size() == b.size());
  VecZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
VecZ vec_neg(const VecZ& a) {
  VecZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
VecZ vec_scale(Int c, const VecZ& a) {
  VecZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
bool vec_is_zero(const VecZ& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}
Int dot(const VecZ& a, const VecZ& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecQ vecq_add(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
VecQ vecq_sub(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Rat dotq(const VecQ& a, const VecZ& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * Rat(b[i]);
  return s;
}

std::string vec_str(const VecZ& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

MatZ mat_identity(int n) {
  MatZ m(n, VecZ(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatZ mat_mul(const MatZ& a, const MatZ& b) {
  size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  MatZ r(m, VecZ(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

VecZ mat_apply(const MatZ& a, const VecZ& x) {
  VecZ r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

/*
  Smith normal form by row/column reduction with transform tracking. Entries
  stay tiny for the matrices this library sees (Cartan-type data), so plain
  long long arithmetic is safe.
*/
SmithForm smith_normal_form(MatZ a) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  SmithForm f;
  f.U = mat_identity(m);
  f.V = mat_identity(n);

  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(f.U[i], f.U[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < n; ++r) std::swap(f.V[r][i], f.V[r][j]);
  };
  auto row_add = [&](int dst, int src, Int c) {  // row dst += c * row src
    for (int j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
    for (int j = 0; j < m; ++j) f.U[dst][j] += c * f.U[src][j];
  };
  auto col_add = [&](int dst, int src, Int c) {
    for (int r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
    for (int r = 0; r < n; ++r) f.V[r][dst] += c * f.V[r][src];
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (int j = 0; j < m; ++j) f.U[i][j] = -f.U[i][j];
  };

  int t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry of the remaining block becomes the pivot
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        Int v = std::abs(a[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (a[t][t] < 0) row_neg(t);

    // Each pass below either clears an entry or strictly shrinks |a[t][t]|.
    for (;;) {
      bool again = false;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        row_add(i, t, -q);
        if (a[i][t] != 0) {
          row_swap(t, i);
          if (a[t][t] < 0) row_neg(t);
        }
        again = true;
        break;
      }
      if (again) continue;
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_add(j, t, -q);
        if (a[t][j] != 0) {
          col_swap(t, j);
          if (a[t][t] < 0) row_neg(t);
        }
        again = true;
        break;
      }
      if (again) continue;
      // row and column are clear; enforce divisibility of the block
      for (int i = t + 1; i < m && !again; ++i)
        for (int j = t + 1; j < n && !again; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(t, i, 1);
            again = true;
          }
      if (!again) break;
    }
    ++t;
  }
  f.diag.assign(std::min(m, n), 0);
  f.rank = 0;
  for (int i = 0; i < std::min(m, n); ++i) {
    f.diag[i] = a[i][i];
    if (a[i][i] != 0) ++f.rank;
  }
  return f;
}

std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  if (m == 0) return VecZ(n, 0);
  SmithForm f = smith_normal_form(a);
  VecZ c = mat_apply(f.U, b);  // D y = U b
  VecZ y(n, 0);
  for (int i = 0; i < std::min(m, n); ++i) {
    Int d = f.diag[i];
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  for (int i = std::min(m, n); i < m; ++i)
    if (c[i] != 0) return std::nullopt;
  return mat_apply(f.V, y);
}

std::optional<VecQ> solve_rational(const MatZ& a, const VecZ& b) {
  // Gaussian elimination over Q.
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<VecQ> w(m, VecQ(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rat(a[i][j]);
    w[i][n] = Rat(b[i]);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (w[i][c].num != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(w[r], w[p]);
    Rat inv = Rat(1) / w[r][c];
    for (int j = c; j <= n; ++j) w[r][j] = w[r][j] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || w[i][c].num == 0) continue;
      Rat f = w[i][c];
      for (int j = c; j <= n; ++j) w[i][j] = w[i][j] - f * w[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (w[i][n].num != 0) return std::nullopt;
  VecQ x(n, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][n];
  return x;
}

MatZ integer_kernel(const MatZ& a) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : 0;
  if (m == 0) return mat_identity(n);
  SmithForm f = smith_normal_form(a);
  MatZ basis;
  for (int j = 0; j < n; ++j) {
    bool in_kernel = j >= std::min(m, n) || f.diag[j] == 0;
    if (!in_kernel) continue;
    VecZ col(n);
    for (int i = 0; i < n; ++i) col[i] = f.V[i][j];
    basis.push_back(col);
  }
  return basis;
}

}  // namespace alc
