#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace grcat {

/// Dense integer matrix, row-major.  Dimensions are kept explicit so that
/// zero-row and zero-column matrices stay well formed.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
std::vector<long long> mat_apply(const Mat& m, const std::vector<long long>& v);
Mat hconcat(const Mat& x, const Mat& y);
Mat diag_mat(const std::vector<long long>& d);
Mat column_mat(const std::vector<long long>& v);
std::vector<long long> column_of(const Mat& m, int j);

/// u * m * v = d with u, v unimodular and d diagonal, d1 | d2 | ... >= 0.
/// The inverse transforms are tracked exactly; the factorization is verified
/// before returning.
struct SmithResult {
  Mat u, d, v, uinv, vinv;
};

SmithResult smith_normal_form(const Mat& m);

/// Solve m x = b over the integers (any one solution).
std::optional<std::vector<long long>> solve_linear(const SmithResult& s, const std::vector<long long>& b);
std::optional<std::vector<long long>> solve_linear(const Mat& m, const std::vector<long long>& b);

/// Columns generate { x : m x = 0 }.
Mat kernel_basis(const Mat& m);

/// Columns generate the full-rank lattice { x : (m x)_i ≡ 0 mod row_moduli[i] }.
/// Every modulus must be >= 1.
Mat congruence_kernel_basis(const Mat& m, const std::vector<long long>& row_moduli);

/// One x with (m x)_i ≡ b_i mod row_moduli[i], if any.
std::optional<std::vector<long long>> solve_congruence(const Mat& m,
                                                       const std::vector<long long>& row_moduli,
                                                       const std::vector<long long>& b);

/// Finite quotient K/L of the lattice K spanned by the columns of `basis`
/// (full column rank) by the sublattice L spanned by the columns of `sub`.
class LatticeQuotient {
 public:
  Mat basis;                          // ambient x r
  std::vector<long long> factors;     // invariant factors, each >= 2
  Mat reps;                           // ambient representative per factor

  long long order() const;
  /// Class coordinates of an ambient vector lying in K.
  std::vector<long long> project(const std::vector<long long>& v) const;
  /// All class coordinate tuples, odometer order (first coordinate fastest).
  std::vector<std::vector<long long>> all_classes(long long cap) const;

  SmithResult basis_snf;  // of `basis`
  Mat ux;                 // row transform of the relation matrix
  std::vector<int> kept;  // diagonal positions with factor >= 2
};

LatticeQuotient lattice_quotient(const Mat& basis, const Mat& sub);

/// Residue linear algebra mod L >= 1, for systems whose lattices all have
/// exponent dividing L.  Entries are kept reduced into [0, L) after every
/// elimination step, so unlike exact integer elimination the intermediate
/// values are bounded no matter how the input is structured.

/// The congruence system (a x)_i ≡ b_i (mod row_moduli[i]) rewritten with the
/// single modulus L: row i is scaled by L / row_moduli[i] (every modulus must
/// divide L) and reduced into [0, L).
Mat scale_rows_to_modulus(const Mat& a, const std::vector<long long>& row_moduli, long long L);
std::vector<long long> scale_to_modulus(const std::vector<long long>& b,
                                        const std::vector<long long>& row_moduli, long long L);

/// Columns generate { x in (Z/L)^cols : a x ≡ 0 (mod L) }.
Mat kernel_mod(const Mat& a, long long L);

/// One x in [0, L)^cols with a x ≡ b (mod L), if any.
std::optional<std::vector<long long>> solve_mod(const Mat& a, const std::vector<long long>& b,
                                                long long L);

struct ModEchelon;

/// Finite quotient span(gen) / span(sub) of column spans inside (Z/L)^n; every
/// column of `sub` must lie in span(gen).
class ModQuotient {
 public:
  long long modulus = 1;
  Mat gen;                         // n x k generator columns, entries in [0, L)
  std::vector<long long> factors;  // invariant factors, each >= 2

  long long order() const;
  /// Class coordinates of an ambient vector lying in span(gen).
  std::vector<long long> project(const std::vector<long long>& v) const;
  /// An ambient representative of the class, entries in [0, L).
  std::vector<long long> representative(const std::vector<long long>& cls) const;
  /// All class coordinate tuples, odometer order (first coordinate fastest).
  std::vector<std::vector<long long>> all_classes(long long cap) const;

  Mat u, uinv;            // generator-coordinate transform and inverse, mod L
  std::vector<int> kept;  // transformed coordinates with factor >= 2
  std::shared_ptr<const ModEchelon> solver;  // echelon of `gen`, reused by project
};

ModQuotient mod_quotient(const Mat& gen, const Mat& sub, long long L);

}  // namespace grcat
