#ifndef ALC_NUMERIC_HPP
#define ALC_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "alc/errors.hpp"

/*
  Exact small-scale arithmetic shared by every module: integer vectors
  (weights and coweights in coordinates), exact rationals for alcove
  geometry, and just enough integer linear algebra (Smith normal form,
  integer/rational solving) for dominance tests, component groups and the
  xi coweight. Everything here is desk scale: ranks <= 8, entries small.
*/

namespace alc {

using Int = long long;
using VecZ = std::vector<Int>;
using MatZ = std::vector<VecZ>;  // row-major

// ---------------------------------------------------------------- rationals

struct Rat {
  Int num = 0;
  Int den = 1;  // always > 0, gcd(num,den) = 1

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(Int n, Int d);

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  bool is_integer() const { return den == 1; }
  std::string str() const;
};

using VecQ = std::vector<Rat>;

VecQ to_rational(const VecZ& v);
// Throws if some entry is non-integral.
VecZ to_integral(const VecQ& v);

// ------------------------------------------------------------- vector sugar

VecZ vec_add(const VecZ& a, const VecZ& b);
VecZ vec_sub(const VecZ& a, const VecZ& b);
VecZ vec_neg(const VecZ& a);
VecZ vec_scale(Int c, const VecZ& a);
bool vec_is_zero(const VecZ& a);
Int dot(const VecZ& a, const VecZ& b);

VecQ vecq_add(const VecQ& a, const VecQ& b);
VecQ vecq_sub(const VecQ& a, const VecQ& b);
Rat dotq(const VecQ& a, const VecZ& b);

std::string vec_str(const VecZ& v);

// --------------------------------------------------- integer linear algebra

// Smith normal form: U * A * V = D with U (m x m), V (n x n) unimodular and
// D diagonal with d_1 | d_2 | ... (trailing zeros allowed).
struct SmithForm {
  MatZ U, V;
  std::vector<Int> diag;  // min(m,n) entries, nonnegative
  int rank = 0;
};

SmithForm smith_normal_form(MatZ a);

// Solve A x = b over the integers; nullopt when inconsistent or non-integral.
std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b);

// Solve A x = b over the rationals; nullopt when inconsistent.
std::optional<VecQ> solve_rational(const MatZ& a, const VecZ& b);

// Basis (as rows) of the integer kernel of A.
MatZ integer_kernel(const MatZ& a);

MatZ mat_mul(const MatZ& a, const MatZ& b);
VecZ mat_apply(const MatZ& a, const VecZ& x);
MatZ mat_identity(int n);

}  // namespace alc

#endif
