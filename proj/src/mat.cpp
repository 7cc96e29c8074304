#include "grcat/mat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "grcat/error.hpp"

namespace grcat {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) internal_error("matrix arithmetic overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) internal_error("matrix arithmetic overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) internal_error("matrix arithmetic overflow");
  return r;
}

}  // namespace

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) internal_error("mat_mul dimension mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(xv, y.at(k, j)));
    }
  return r;
}

std::vector<long long> mat_apply(const Mat& m, const std::vector<long long>& v) {
  if (static_cast<int>(v.size()) != m.cols) internal_error("mat_apply dimension mismatch");
  std::vector<long long> r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] = checked_add(r[i], checked_mul(m.at(i, j), v[j]));
  return r;
}

Mat hconcat(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) internal_error("hconcat row mismatch");
  Mat r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Mat diag_mat(const std::vector<long long>& d) {
  Mat r(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) r.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return r;
}

Mat column_mat(const std::vector<long long>& v) {
  Mat r(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) r.at(static_cast<int>(i), 0) = v[i];
  return r;
}

std::vector<long long> column_of(const Mat& m, int j) {
  std::vector<long long> v(m.rows);
  for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
  return v;
}

namespace {

// Extended gcd: returns g = gcd(|a|, |b|) >= 0 with g == a*x + b*y.
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return std::llabs(a);
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

void verify_smith(const SmithResult& s, const Mat& m) {
  if (mat_mul(mat_mul(s.u, m), s.v) != s.d) internal_error("smith factorization failed");
  if (mat_mul(s.u, s.uinv) != Mat::identity(s.u.rows)) internal_error("smith row transform inverse failed");
  if (mat_mul(s.v, s.vinv) != Mat::identity(s.v.rows)) internal_error("smith column transform inverse failed");
  for (int i = 0; i < s.d.rows; ++i)
    for (int j = 0; j < s.d.cols; ++j)
      if (i != j && s.d.at(i, j)) internal_error("smith result not diagonal");
  int mn = std::min(s.d.rows, s.d.cols);
  for (int i = 0; i + 1 < mn; ++i) {
    long long a = s.d.at(i, i), b = s.d.at(i + 1, i + 1);
    if (a < 0 || b < 0) internal_error("smith diagonal negative");
    if (a == 0 && b != 0) internal_error("smith zero diagonal out of order");
    if (a != 0 && b % a != 0) internal_error("smith divisibility chain broken");
  }
}

}  // namespace

SmithResult smith_normal_form(const Mat& m) {
  const int r = m.rows, c = m.cols;
  SmithResult s{Mat::identity(r), m, Mat::identity(c), Mat::identity(r), Mat::identity(c)};
  Mat& d = s.d;

  auto row_add = [&](int dst, int src, long long q) {
    for (int j = 0; j < c; ++j) d.at(dst, j) = checked_add(d.at(dst, j), checked_mul(q, d.at(src, j)));
    for (int j = 0; j < r; ++j) s.u.at(dst, j) = checked_add(s.u.at(dst, j), checked_mul(q, s.u.at(src, j)));
    for (int i = 0; i < r; ++i) s.uinv.at(i, src) = checked_sub(s.uinv.at(i, src), checked_mul(q, s.uinv.at(i, dst)));
  };
  auto row_swap = [&](int i, int k) {
    if (i == k) return;
    for (int j = 0; j < c; ++j) std::swap(d.at(i, j), d.at(k, j));
    for (int j = 0; j < r; ++j) std::swap(s.u.at(i, j), s.u.at(k, j));
    for (int t = 0; t < r; ++t) std::swap(s.uinv.at(t, i), s.uinv.at(t, k));
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < c; ++j) d.at(i, j) = -d.at(i, j);
    for (int j = 0; j < r; ++j) s.u.at(i, j) = -s.u.at(i, j);
    for (int t = 0; t < r; ++t) s.uinv.at(t, i) = -s.uinv.at(t, i);
  };
  auto col_add = [&](int dst, int src, long long q) {
    for (int i = 0; i < r; ++i) d.at(i, dst) = checked_add(d.at(i, dst), checked_mul(q, d.at(i, src)));
    for (int i = 0; i < c; ++i) s.v.at(i, dst) = checked_add(s.v.at(i, dst), checked_mul(q, s.v.at(i, src)));
    for (int j = 0; j < c; ++j) s.vinv.at(src, j) = checked_sub(s.vinv.at(src, j), checked_mul(q, s.vinv.at(dst, j)));
  };
  auto col_swap = [&](int i, int k) {
    if (i == k) return;
    for (int t = 0; t < r; ++t) std::swap(d.at(t, i), d.at(t, k));
    for (int t = 0; t < c; ++t) std::swap(s.v.at(t, i), s.v.at(t, k));
    for (int j = 0; j < c; ++j) std::swap(s.vinv.at(i, j), s.vinv.at(k, j));
  };

  // Unimodular 2x2 row update: (row ra, row rb) <- (a*ra + b*rb, pg*rb - eg*ra)
  // where a*p + b*e == g, pg == p/g, eg == e/g.  It puts gcd(p, e) at the
  // pivot in one step instead of iterating remainders, which keeps the
  // intermediate entries from blowing up on matrices whose smallest entry is
  // far from the gcd of its block.
  auto row_combine = [&](int ra, int rb, long long a, long long b, long long pg, long long eg) {
    for (int j = 0; j < c; ++j) {
      long long va = d.at(ra, j), vb = d.at(rb, j);
      d.at(ra, j) = checked_add(checked_mul(a, va), checked_mul(b, vb));
      d.at(rb, j) = checked_sub(checked_mul(pg, vb), checked_mul(eg, va));
    }
    for (int j = 0; j < r; ++j) {
      long long va = s.u.at(ra, j), vb = s.u.at(rb, j);
      s.u.at(ra, j) = checked_add(checked_mul(a, va), checked_mul(b, vb));
      s.u.at(rb, j) = checked_sub(checked_mul(pg, vb), checked_mul(eg, va));
    }
    for (int i = 0; i < r; ++i) {
      long long va = s.uinv.at(i, ra), vb = s.uinv.at(i, rb);
      s.uinv.at(i, ra) = checked_add(checked_mul(pg, va), checked_mul(eg, vb));
      s.uinv.at(i, rb) = checked_sub(checked_mul(a, vb), checked_mul(b, va));
    }
  };
  auto col_combine = [&](int ca, int cb, long long a, long long b, long long pg, long long eg) {
    for (int i = 0; i < r; ++i) {
      long long va = d.at(i, ca), vb = d.at(i, cb);
      d.at(i, ca) = checked_add(checked_mul(a, va), checked_mul(b, vb));
      d.at(i, cb) = checked_sub(checked_mul(pg, vb), checked_mul(eg, va));
    }
    for (int i = 0; i < c; ++i) {
      long long va = s.v.at(i, ca), vb = s.v.at(i, cb);
      s.v.at(i, ca) = checked_add(checked_mul(a, va), checked_mul(b, vb));
      s.v.at(i, cb) = checked_sub(checked_mul(pg, vb), checked_mul(eg, va));
    }
    for (int j = 0; j < c; ++j) {
      long long va = s.vinv.at(ca, j), vb = s.vinv.at(cb, j);
      s.vinv.at(ca, j) = checked_add(checked_mul(pg, va), checked_mul(eg, vb));
      s.vinv.at(cb, j) = checked_sub(checked_mul(a, vb), checked_mul(b, va));
    }
  };

  const int mn = std::min(r, c);
  for (int t = 0; t < mn; ++t) {
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        long long x = std::llabs(d.at(i, j));
        if (x && (pi < 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < r; ++i) {
        long long e = d.at(i, t);
        if (!e) continue;
        long long p = d.at(t, t);
        if (e % p == 0) {
          row_add(i, t, -(e / p));
        } else {
          long long x, y;
          long long g = egcd(p, e, x, y);
          row_combine(t, i, x, y, p / g, e / g);
        }
      }
      for (int j = t + 1; j < c; ++j) {
        long long e = d.at(t, j);
        if (!e) continue;
        long long p = d.at(t, t);
        if (e % p == 0) {
          col_add(j, t, -(e / p));
        } else {
          long long x, y;
          long long g = egcd(p, e, x, y);
          col_combine(t, j, x, y, p / g, e / g);
          // The combination mixes another column into the pivot column, so
          // entries below the pivot may reappear; clear them on the next pass.
          again = true;
        }
      }
      if (again) continue;
      long long p = d.at(t, t);
      for (int i = t + 1; i < r && !again; ++i)
        for (int j = t + 1; j < c; ++j)
          if (d.at(i, j) % p) {
            // Fold the offending column into the pivot column; the next pass
            // shrinks the pivot to a divisor of that entry, so the pivot
            // converges to the gcd of the remaining block.
            col_add(t, j, 1);
            again = true;
            break;
          }
    }
  }
  for (int i = 0; i < mn; ++i)
    if (d.at(i, i) < 0) row_neg(i);

  verify_smith(s, m);
  return s;
}

std::optional<std::vector<long long>> solve_linear(const SmithResult& s, const std::vector<long long>& b) {
  const int r = s.d.rows, c = s.d.cols;
  if (static_cast<int>(b.size()) != r) internal_error("solve_linear dimension mismatch");
  std::vector<long long> ub = mat_apply(s.u, b);
  std::vector<long long> y(c, 0);
  const int mn = std::min(r, c);
  for (int i = 0; i < r; ++i) {
    long long di = i < mn ? s.d.at(i, i) : 0;
    if (di) {
      if (ub[i] % di) return std::nullopt;
      y[i] = ub[i] / di;
    } else if (ub[i]) {
      return std::nullopt;
    }
  }
  return mat_apply(s.v, y);
}

std::optional<std::vector<long long>> solve_linear(const Mat& m, const std::vector<long long>& b) {
  return solve_linear(smith_normal_form(m), b);
}

Mat kernel_basis(const Mat& m) {
  SmithResult s = smith_normal_form(m);
  const int mn = std::min(m.rows, m.cols);
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols; ++j)
    if (j >= mn || s.d.at(j, j) == 0) free_cols.push_back(j);
  Mat k(m.cols, static_cast<int>(free_cols.size()));
  for (size_t t = 0; t < free_cols.size(); ++t)
    for (int i = 0; i < m.cols; ++i) k.at(i, static_cast<int>(t)) = s.v.at(i, free_cols[t]);
  return k;
}

Mat congruence_kernel_basis(const Mat& m, const std::vector<long long>& row_moduli) {
  if (static_cast<int>(row_moduli.size()) != m.rows) internal_error("congruence kernel moduli mismatch");
  for (long long mod : row_moduli)
    if (mod < 1) internal_error("congruence kernel modulus < 1");
  Mat full = hconcat(m, diag_mat(row_moduli));
  Mat k2 = kernel_basis(full);
  if (k2.cols != m.cols) internal_error("congruence kernel rank unexpected");
  Mat k(m.cols, k2.cols);
  for (int i = 0; i < m.cols; ++i)
    for (int j = 0; j < k2.cols; ++j) k.at(i, j) = k2.at(i, j);
  return k;
}

std::optional<std::vector<long long>> solve_congruence(const Mat& m,
                                                       const std::vector<long long>& row_moduli,
                                                       const std::vector<long long>& b) {
  if (static_cast<int>(row_moduli.size()) != m.rows) internal_error("solve_congruence moduli mismatch");
  for (long long mod : row_moduli)
    if (mod < 1) internal_error("solve_congruence modulus < 1");
  Mat full = hconcat(m, diag_mat(row_moduli));
  auto z = solve_linear(full, b);
  if (!z) return std::nullopt;
  return std::vector<long long>(z->begin(), z->begin() + m.cols);
}

long long LatticeQuotient::order() const {
  long long o = 1;
  for (long long f : factors) o *= f;
  return o;
}

std::vector<long long> LatticeQuotient::project(const std::vector<long long>& v) const {
  auto x = solve_linear(basis_snf, v);
  if (!x) internal_error("lattice quotient: vector outside lattice");
  std::vector<long long> y = mat_apply(ux, *x);
  std::vector<long long> coords(factors.size());
  for (size_t t = 0; t < kept.size(); ++t) {
    long long m = factors[t];
    coords[t] = ((y[kept[t]] % m) + m) % m;
  }
  return coords;
}

std::vector<std::vector<long long>> LatticeQuotient::all_classes(long long cap) const {
  if (order() > cap) throw Error(Errc::CapExceeded, "class enumeration exceeds cap", {order(), cap});
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(factors.size(), 0);
  out.push_back(cur);
  while (true) {
    size_t i = 0;
    while (i < factors.size()) {
      if (++cur[i] < factors[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == factors.size()) break;
    out.push_back(cur);
  }
  if (static_cast<long long>(out.size()) != order()) internal_error("class enumeration count mismatch");
  return out;
}

Mat scale_rows_to_modulus(const Mat& a, const std::vector<long long>& row_moduli, long long L) {
  if (static_cast<int>(row_moduli.size()) != a.rows) internal_error("row scaling moduli mismatch");
  if (L < 1) internal_error("row scaling modulus < 1");
  Mat out(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    if (row_moduli[i] < 1 || L % row_moduli[i] != 0)
      internal_error("row modulus does not divide the scaling target");
    long long s = L / row_moduli[i];
    for (int j = 0; j < a.cols; ++j) out.at(i, j) = (((a.at(i, j) % L) + L) % L) * s % L;
  }
  return out;
}

std::vector<long long> scale_to_modulus(const std::vector<long long>& b,
                                        const std::vector<long long>& row_moduli, long long L) {
  if (b.size() != row_moduli.size()) internal_error("vector scaling moduli mismatch");
  if (L < 1) internal_error("vector scaling modulus < 1");
  std::vector<long long> out(b.size());
  for (size_t i = 0; i < b.size(); ++i) {
    if (row_moduli[i] < 1 || L % row_moduli[i] != 0)
      internal_error("row modulus does not divide the scaling target");
    out[i] = (((b[i] % L) + L) % L) * (L / row_moduli[i]) % L;
  }
  return out;
}

/// Column echelon of a matrix over Z/L with the column transform tracked: the
/// work columns w and transform columns v keep w[j] = a * v[j] (mod L).  When
/// a pivot with value g (a proper divisor of L) is placed, the column scaled
/// by L/g is appended and processed like any other, so at the end the columns
/// with w[j] ≡ 0 generate the whole kernel, not just its torsion-free part.
struct ModEchelon {
  long long L = 1;
  int rows = 0;
  int gens = 0;  // length of the transform columns
  std::vector<std::vector<long long>> w, v;
  struct PivotRef {
    int row = 0, col = 0;
    long long g = 1;  // divisor of L at (row, col); zeros above and to the left
  };
  std::vector<PivotRef> pivots;
};

namespace {

long long reduce_mod(long long x, long long L) { return ((x % L) + L) % L; }

/// A unit u mod L with u * a ≡ gcd(a, L) (mod L).
long long unit_for(long long a, long long L) {
  a = reduce_mod(a, L);
  long long g = std::gcd(a, L);
  if (g == L) return 1 % L;  // a ≡ 0 already
  long long m = L / g;
  long long x, y;
  egcd(a / g, m, x, y);  // (a/g) x ≡ 1 (mod m)
  long long u0 = reduce_mod(x, m);
  // Lift to a unit mod L: u0 is coprime to m, and some u0 + k m with
  // 0 <= k <= g is also coprime to every prime of L missing from m.
  for (long long k = 0; k <= g; ++k) {
    long long u = u0 + k * m;
    if (std::gcd(u, L) == 1) return u % L;
  }
  internal_error("unit lift not found");
}

ModEchelon mod_echelon(const Mat& a, long long L) {
  if (L < 1) internal_error("echelon modulus < 1");
  ModEchelon e;
  e.L = L;
  e.rows = a.rows;
  e.gens = a.cols;
  e.w.resize(a.cols);
  e.v.resize(a.cols);
  for (int j = 0; j < a.cols; ++j) {
    e.w[j].resize(a.rows);
    for (int i = 0; i < a.rows; ++i) e.w[j][i] = reduce_mod(a.at(i, j), L);
    e.v[j].assign(a.cols, 0);
    e.v[j][j] = 1 % L;
  }

  auto combine = [&](size_t ca, size_t cb, long long x, long long y, long long pg, long long qg) {
    // (col ca, col cb) <- (x ca + y cb, pg cb - qg ca): invertible over Z.
    for (int i = 0; i < e.rows; ++i) {
      long long va = e.w[ca][i], vb = e.w[cb][i];
      e.w[ca][i] = reduce_mod(x * va + y * vb, L);
      e.w[cb][i] = reduce_mod(pg * vb - qg * va, L);
    }
    for (int i = 0; i < e.gens; ++i) {
      long long va = e.v[ca][i], vb = e.v[cb][i];
      e.v[ca][i] = reduce_mod(x * va + y * vb, L);
      e.v[cb][i] = reduce_mod(pg * vb - qg * va, L);
    }
  };

  size_t next = 0;
  for (int r = 0; r < a.rows; ++r) {
    size_t pc = e.w.size();
    for (size_t j = next; j < e.w.size(); ++j) {
      if (e.w[j][r] == 0) continue;
      if (pc == e.w.size()) {
        pc = j;
        continue;
      }
      long long p = e.w[pc][r], q = e.w[j][r], x, y;
      long long g = egcd(p, q, x, y);
      combine(pc, j, x, y, p / g, q / g);  // drops the row-r entry of column j
    }
    if (pc == e.w.size()) continue;
    std::swap(e.w[pc], e.w[next]);
    std::swap(e.v[pc], e.v[next]);
    long long u = unit_for(e.w[next][r], L);
    for (int i = 0; i < e.rows; ++i) e.w[next][i] = reduce_mod(u * e.w[next][i], L);
    for (int i = 0; i < e.gens; ++i) e.v[next][i] = reduce_mod(u * e.v[next][i], L);
    long long g = e.w[next][r];
    if (g < 1 || L % g != 0) internal_error("echelon pivot not a divisor of the modulus");
    if (g > 1) {
      // The annihilator of the pivot: L/g times the column kills row r.
      long long s = L / g;
      std::vector<long long> wa(e.rows), va(e.gens);
      for (int i = 0; i < e.rows; ++i) wa[i] = reduce_mod(s * e.w[next][i], L);
      for (int i = 0; i < e.gens; ++i) va[i] = reduce_mod(s * e.v[next][i], L);
      e.w.push_back(std::move(wa));
      e.v.push_back(std::move(va));
    }
    e.pivots.push_back({r, static_cast<int>(next), g});
    ++next;
  }
  return e;
}

Mat echelon_kernel(const ModEchelon& e) {
  auto zero = [](const std::vector<long long>& c) {
    return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
  };
  std::vector<size_t> keep;
  for (size_t j = 0; j < e.w.size(); ++j)
    if (zero(e.w[j]) && !zero(e.v[j])) keep.push_back(j);
  Mat k(e.gens, static_cast<int>(keep.size()));
  for (size_t t = 0; t < keep.size(); ++t)
    for (int i = 0; i < e.gens; ++i) k.at(i, static_cast<int>(t)) = e.v[keep[t]][i];
  return k;
}

std::optional<std::vector<long long>> echelon_solve(const ModEchelon& e,
                                                    const std::vector<long long>& b) {
  if (static_cast<int>(b.size()) != e.rows) internal_error("solve_mod dimension mismatch");
  std::vector<long long> rem(e.rows);
  for (int i = 0; i < e.rows; ++i) rem[i] = reduce_mod(b[i], e.L);
  std::vector<long long> x(e.gens, 0);
  size_t pi = 0;
  for (int r = 0; r < e.rows; ++r) {
    if (pi < e.pivots.size() && e.pivots[pi].row == r) {
      const auto& p = e.pivots[pi++];
      if (rem[r] % p.g) return std::nullopt;
      long long t = rem[r] / p.g;
      if (t) {
        for (int i = 0; i < e.rows; ++i) rem[i] = reduce_mod(rem[i] - t * e.w[p.col][i], e.L);
        for (int i = 0; i < e.gens; ++i) x[i] = reduce_mod(x[i] + t * e.v[p.col][i], e.L);
      }
    } else if (rem[r]) {
      return std::nullopt;  // no pivot left for this row
    }
  }
  return x;
}

/// Invertible row and column operations over Z/L diagonalizing `rel`, with the
/// row transform and its inverse tracked.  The quotient (Z/L)^k by the column
/// span of `rel` is then cyclic of order gcd(diagonal, L) in each transformed
/// coordinate, and those orders form a divisibility chain.
struct ModDiagonal {
  Mat u, uinv;
  std::vector<long long> factors;  // gcd(diagonal, L) per coordinate, full length k
};

ModDiagonal diagonalize_mod(const Mat& rel, long long L) {
  const int k = rel.rows, s = rel.cols;
  Mat w(k, s);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < s; ++j) w.at(i, j) = reduce_mod(rel.at(i, j), L);
  Mat u = Mat::identity(k), uinv = Mat::identity(k);
  for (int i = 0; i < k; ++i) u.at(i, i) = uinv.at(i, i) = 1 % L;

  auto row_add = [&](int dst, int src, long long q) {
    for (int j = 0; j < s; ++j) w.at(dst, j) = reduce_mod(w.at(dst, j) + q * w.at(src, j), L);
    for (int j = 0; j < k; ++j) u.at(dst, j) = reduce_mod(u.at(dst, j) + q * u.at(src, j), L);
    for (int i = 0; i < k; ++i)
      uinv.at(i, src) = reduce_mod(uinv.at(i, src) - q * uinv.at(i, dst), L);
  };
  auto row_swap = [&](int i, int t) {
    if (i == t) return;
    for (int j = 0; j < s; ++j) std::swap(w.at(i, j), w.at(t, j));
    for (int j = 0; j < k; ++j) std::swap(u.at(i, j), u.at(t, j));
    for (int j = 0; j < k; ++j) std::swap(uinv.at(j, i), uinv.at(j, t));
  };
  auto row_combine = [&](int ra, int rb, long long x, long long y, long long pg, long long eg) {
    for (int j = 0; j < s; ++j) {
      long long va = w.at(ra, j), vb = w.at(rb, j);
      w.at(ra, j) = reduce_mod(x * va + y * vb, L);
      w.at(rb, j) = reduce_mod(pg * vb - eg * va, L);
    }
    for (int j = 0; j < k; ++j) {
      long long va = u.at(ra, j), vb = u.at(rb, j);
      u.at(ra, j) = reduce_mod(x * va + y * vb, L);
      u.at(rb, j) = reduce_mod(pg * vb - eg * va, L);
    }
    for (int i = 0; i < k; ++i) {
      long long va = uinv.at(i, ra), vb = uinv.at(i, rb);
      uinv.at(i, ra) = reduce_mod(pg * va + eg * vb, L);
      uinv.at(i, rb) = reduce_mod(x * vb - y * va, L);
    }
  };
  auto col_add = [&](int dst, int src, long long q) {
    for (int i = 0; i < k; ++i) w.at(i, dst) = reduce_mod(w.at(i, dst) + q * w.at(i, src), L);
  };
  auto col_swap = [&](int j, int t) {
    if (j == t) return;
    for (int i = 0; i < k; ++i) std::swap(w.at(i, j), w.at(i, t));
  };
  auto col_combine = [&](int ca, int cb, long long x, long long y, long long pg, long long eg) {
    for (int i = 0; i < k; ++i) {
      long long va = w.at(i, ca), vb = w.at(i, cb);
      w.at(i, ca) = reduce_mod(x * va + y * vb, L);
      w.at(i, cb) = reduce_mod(pg * vb - eg * va, L);
    }
  };

  const int mn = std::min(k, s);
  for (int t = 0; t < mn; ++t) {
    int pi = -1, pj = -1;
    long long best = L + 1;
    for (int i = t; i < k; ++i)
      for (int j = t; j < s; ++j) {
        long long e = w.at(i, j);
        if (!e) continue;
        long long g = std::gcd(e, L);
        if (g < best) {
          best = g;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool again = true;
    int guard = 0;
    while (again) {
      if (++guard > 128) internal_error("residue diagonalization failed to settle");
      again = false;
      for (int i = t + 1; i < k; ++i) {
        long long e = w.at(i, t);
        if (!e) continue;
        long long p = w.at(t, t);
        if (e % p == 0) {
          row_add(i, t, -(e / p));
        } else {
          long long x, y;
          long long g = egcd(p, e, x, y);
          row_combine(t, i, x, y, p / g, e / g);
        }
      }
      for (int j = t + 1; j < s; ++j) {
        long long e = w.at(t, j);
        if (!e) continue;
        long long p = w.at(t, t);
        if (e % p == 0) {
          col_add(j, t, -(e / p));
        } else {
          long long x, y;
          long long g = egcd(p, e, x, y);
          col_combine(t, j, x, y, p / g, e / g);
          again = true;  // the pivot column may pick entries back up below
        }
      }
      if (again) continue;
      long long gp = std::gcd(w.at(t, t), L);
      for (int i = t + 1; i < k && !again; ++i)
        for (int j = t + 1; j < s; ++j)
          if (w.at(i, j) % gp) {
            col_add(t, j, 1);  // fold in; the next pass shrinks the pivot gcd
            again = true;
            break;
          }
    }
  }

  ModDiagonal out;
  out.factors.resize(k);
  for (int i = 0; i < k; ++i) out.factors[i] = std::gcd(i < mn ? w.at(i, i) : 0, L);
  for (int i = 0; i + 1 < k; ++i)
    if (out.factors[i + 1] % out.factors[i] != 0)
      internal_error("residue diagonal chain broken");
  Mat check = mat_mul(u, uinv);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (reduce_mod(check.at(i, j), L) != (i == j ? 1 % L : 0))
        internal_error("residue transform inverse failed");
  out.u = std::move(u);
  out.uinv = std::move(uinv);
  return out;
}

}  // namespace

Mat kernel_mod(const Mat& a, long long L) { return echelon_kernel(mod_echelon(a, L)); }

std::optional<std::vector<long long>> solve_mod(const Mat& a, const std::vector<long long>& b,
                                                long long L) {
  return echelon_solve(mod_echelon(a, L), b);
}

long long ModQuotient::order() const {
  long long o = 1;
  for (long long f : factors) o = checked_mul(o, f);
  return o;
}

std::vector<long long> ModQuotient::project(const std::vector<long long>& v) const {
  auto x = echelon_solve(*solver, v);
  if (!x) internal_error("mod quotient: vector outside the span");
  std::vector<long long> y = mat_apply(u, *x);
  std::vector<long long> coords(factors.size());
  for (size_t t = 0; t < kept.size(); ++t) coords[t] = reduce_mod(y[kept[t]], factors[t]);
  return coords;
}

std::vector<long long> ModQuotient::representative(const std::vector<long long>& cls) const {
  if (cls.size() != factors.size()) internal_error("mod quotient class coordinate mismatch");
  std::vector<long long> y(gen.cols, 0);
  for (size_t t = 0; t < kept.size(); ++t) y[kept[t]] = reduce_mod(cls[t], factors[t]);
  std::vector<long long> x = mat_apply(uinv, y);
  std::vector<long long> v = mat_apply(gen, x);
  for (long long& e : v) e = reduce_mod(e, modulus);
  return v;
}

std::vector<std::vector<long long>> ModQuotient::all_classes(long long cap) const {
  if (order() > cap) throw Error(Errc::CapExceeded, "class enumeration exceeds cap", {order(), cap});
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(factors.size(), 0);
  out.push_back(cur);
  while (true) {
    size_t i = 0;
    while (i < factors.size()) {
      if (++cur[i] < factors[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == factors.size()) break;
    out.push_back(cur);
  }
  if (static_cast<long long>(out.size()) != order()) internal_error("class enumeration count mismatch");
  return out;
}

ModQuotient mod_quotient(const Mat& gen, const Mat& sub, long long L) {
  if (gen.rows != sub.rows) internal_error("mod quotient ambient mismatch");
  ModQuotient q;
  q.modulus = L;
  q.gen = Mat(gen.rows, gen.cols);
  for (int i = 0; i < gen.rows; ++i)
    for (int j = 0; j < gen.cols; ++j) q.gen.at(i, j) = reduce_mod(gen.at(i, j), L);
  auto ech = std::make_shared<ModEchelon>(mod_echelon(q.gen, L));

  // Relations among generator coordinates: the subgroup columns rewritten in
  // those coordinates, plus the internal relations of the generators.
  Mat kg = echelon_kernel(*ech);
  const int k = gen.cols;
  Mat rel(k, sub.cols + kg.cols);
  for (int j = 0; j < sub.cols; ++j) {
    auto x = echelon_solve(*ech, column_of(sub, j));
    if (!x) internal_error("mod quotient: subgroup generator outside the span");
    for (int i = 0; i < k; ++i) rel.at(i, j) = (*x)[i];
  }
  for (int j = 0; j < kg.cols; ++j)
    for (int i = 0; i < k; ++i) rel.at(i, sub.cols + j) = kg.at(i, j);

  ModDiagonal dg = diagonalize_mod(rel, L);
  q.u = std::move(dg.u);
  q.uinv = std::move(dg.uinv);
  for (int i = 0; i < k; ++i)
    if (dg.factors[i] >= 2) {
      q.factors.push_back(dg.factors[i]);
      q.kept.push_back(i);
    }
  q.solver = std::move(ech);
  return q;
}

LatticeQuotient lattice_quotient(const Mat& basis, const Mat& sub) {
  if (basis.rows != sub.rows) internal_error("lattice quotient ambient mismatch");
  LatticeQuotient q;
  q.basis = basis;
  q.basis_snf = smith_normal_form(basis);
  const int r = basis.cols;
  Mat x(r, sub.cols);
  for (int j = 0; j < sub.cols; ++j) {
    auto col = solve_linear(q.basis_snf, column_of(sub, j));
    if (!col) internal_error("lattice quotient: sublattice not contained in lattice");
    for (int i = 0; i < r; ++i) x.at(i, j) = (*col)[i];
  }
  SmithResult sx = smith_normal_form(x);
  q.ux = sx.u;
  const int mn = std::min(x.rows, x.cols);
  std::vector<std::vector<long long>> rep_cols;
  for (int i = 0; i < r; ++i) {
    long long di = i < mn ? sx.d.at(i, i) : 0;
    if (di == 0) internal_error("lattice quotient not finite");
    if (di >= 2) {
      q.factors.push_back(di);
      q.kept.push_back(i);
      rep_cols.push_back(mat_apply(basis, column_of(sx.uinv, i)));
    }
  }
  q.reps = Mat(basis.rows, static_cast<int>(rep_cols.size()));
  for (size_t j = 0; j < rep_cols.size(); ++j)
    for (int i = 0; i < basis.rows; ++i) q.reps.at(i, static_cast<int>(j)) = rep_cols[j][i];
  return q;
}

}  // namespace grcat
