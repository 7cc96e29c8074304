#include "grcat/cohomology.hpp"

#include <algorithm>

namespace grcat {

namespace {

long long pow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Calls fn once per identity-free tuple of the given length, lexicographic.
template <class F>
void for_each_free_tuple(int n, int len, F&& fn) {
  if (len == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (n <= 1) return;
  std::vector<int> t(len, 1);
  for (;;) {
    fn(t);
    int i = len - 1;
    for (;;) {
      if (++t[i] < n) break;
      t[i] = 1;
      if (--i < 0) return;
    }
  }
}

long long free_tuple_index(int n, const std::vector<int>& t) {
  long long k = 0;
  for (int x : t) k = k * (n - 1) + (x - 1);
  return k;
}

}  // namespace

std::vector<long long> coboundary_at(const Cochain& c, const std::vector<int>& tuple) {
  const int d = c.degree;
  if (static_cast<int>(tuple.size()) != d + 1)
    internal_error("coboundary evaluated at tuple of wrong length");
  const FiniteGroup& pi = c.module->pi;
  const FiniteAbelianGroup& a = c.module->coeff;

  std::vector<int> rest(tuple.begin() + 1, tuple.end());
  std::vector<long long> acc = c.module->act(tuple[0], c.at(rest));
  int sign = -1;
  std::vector<int> s;
  for (int i = 1; i <= d; ++i) {
    s.assign(tuple.begin(), tuple.begin() + (i - 1));
    s.push_back(pi.op(tuple[i - 1], tuple[i]));
    s.insert(s.end(), tuple.begin() + i + 1, tuple.end());
    acc = sign > 0 ? a.add(acc, c.at(s)) : a.sub(acc, c.at(s));
    sign = -sign;
  }
  std::vector<int> pre(tuple.begin(), tuple.end() - 1);
  acc = sign > 0 ? a.add(acc, c.at(pre)) : a.sub(acc, c.at(pre));
  return acc;
}

Cochain coboundary(const Cochain& c) {
  if (c.degree > 2)
    throw Error(Errc::DegreeTooHigh, "stored coboundaries stop at degree 3 cochains");
  Cochain out = zero_cochain(c.module, c.degree + 1);
  for_each_free_tuple(c.module->pi.order(), c.degree + 1,
                      [&](const std::vector<int>& t) { out.set(t, coboundary_at(c, t)); });
  return out;
}

std::optional<std::vector<int>> cocycle_check(const Cochain& c) {
  if (c.is_zero()) return std::nullopt;  // the zero cochain is a cocycle in every degree
  const int n = c.module->pi.order();
  if (n <= 1) return std::nullopt;
  std::vector<int> t(c.degree + 1, 1);
  for (;;) {
    auto v = coboundary_at(c, t);
    if (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) return t;
    int i = c.degree;
    for (;;) {
      if (++t[i] < n) break;
      t[i] = 1;
      if (--i < 0) return std::nullopt;
    }
  }
}

long long cochain_dim(const PiModule& m, int degree) {
  return pow_ll(m.pi.order() - 1, degree) * m.coeff.rank();
}

std::vector<long long> level_moduli(const PiModule& m, int degree) {
  long long tuples = pow_ll(m.pi.order() - 1, degree);
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(tuples) * m.coeff.rank());
  for (long long t = 0; t < tuples; ++t)
    out.insert(out.end(), m.coeff.factors.begin(), m.coeff.factors.end());
  return out;
}

std::vector<int> tuple_at(const PiModule& m, int degree, long long t) {
  const int n = m.pi.order();
  std::vector<int> tuple(degree, 1);
  for (int i = degree - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(t % (n - 1)) + 1;
    t /= (n - 1);
  }
  return tuple;
}

Mat lift_cochain(const Cochain& c) {
  const PiModule& m = *c.module;
  const int n = m.pi.order();
  const int rank = m.coeff.rank();
  Mat col(static_cast<int>(cochain_dim(m, c.degree)), 1);
  for (const auto& [k, v] : c.entries) {
    long long ti = free_tuple_index(n, c.tuple_of(k));
    for (int j = 0; j < rank; ++j) col.at(static_cast<int>(ti * rank + j), 0) = v[j];
  }
  return col;
}

Cochain unlift_cochain(ModulePtr module, int degree, const Mat& column) {
  if (column.rows != static_cast<int>(cochain_dim(*module, degree)) || column.cols != 1)
    internal_error("cochain vector has wrong dimension");
  const int rank = module->coeff.rank();
  long long tuples = rank == 0 ? 0 : column.rows / std::max(rank, 1);
  Cochain c = zero_cochain(module, degree);
  for (long long t = 0; t < tuples; ++t) {
    std::vector<long long> v(rank);
    for (int j = 0; j < rank; ++j) v[j] = column.at(static_cast<int>(t * rank + j), 0);
    c.set(tuple_at(*module, degree, t), std::move(v));
  }
  return c;
}

Mat coboundary_matrix(const PiModule& m, int degree) {
  if (degree < 0 || degree > 3)
    throw Error(Errc::DegreeTooHigh, "coboundary matrices cover degrees 0 through 3");
  const int n = m.pi.order();
  const int rank = m.coeff.rank();
  Mat D(static_cast<int>(cochain_dim(m, degree + 1)), static_cast<int>(cochain_dim(m, degree)));

  for_each_free_tuple(n, degree + 1, [&](const std::vector<int>& T) {
    long long ti = free_tuple_index(n, T);
    auto add_block = [&](const std::vector<int>& S, int sign, const Mat* action) {
      for (int x : S)
        if (x == 0) return;  // normalized cochains vanish there
      long long si = free_tuple_index(n, S);
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
          long long e = action ? action->at(i, j) : (i == j ? 1 : 0);
          D.at(static_cast<int>(ti * rank + i), static_cast<int>(si * rank + j)) += sign * e;
        }
    };

    std::vector<int> rest(T.begin() + 1, T.end());
    add_block(rest, +1, &m.action[T[0]].m);
    int sign = -1;
    std::vector<int> s;
    for (int i = 1; i <= degree; ++i) {
      s.assign(T.begin(), T.begin() + (i - 1));
      s.push_back(m.pi.op(T[i - 1], T[i]));
      s.insert(s.end(), T.begin() + i + 1, T.end());
      add_block(s, sign, nullptr);
      sign = -sign;
    }
    std::vector<int> pre(T.begin(), T.end() - 1);
    add_block(pre, sign, nullptr);
  });
  return D;
}

std::vector<long long> CohomologyGroup::class_of(const Cochain& z) const {
  if (z.degree != degree || !modules_equal(*z.module, *module))
    throw Error(Errc::SourceTargetMismatch, "cochain does not live in this cohomology");
  if (auto w = cocycle_check(z))
    throw Error(Errc::NotACocycle, "class of a non-cocycle requested",
                std::vector<long long>(w->begin(), w->end()));
  return quotient.project(column_of(lift_cochain(z), 0));
}

Cochain CohomologyGroup::representative(const std::vector<long long>& cls) const {
  return unlift_cochain(module, degree, column_mat(quotient.representative(cls)));
}

std::vector<Cochain> CohomologyGroup::class_representatives(long long cap) const {
  std::vector<Cochain> out;
  for (const auto& cls : quotient.all_classes(cap)) out.push_back(representative(cls));
  return out;
}

namespace {

// Cochain coordinates all have order dividing the coefficient exponent, so the
// cocycle kernel and the quotient by boundaries can be computed entirely in
// residues mod that exponent: the per-row conditions become uniform after row
// scaling, and no intermediate entry ever leaves [0, exponent).
Mat cocycle_generators(const PiModule& m, int degree, long long L) {
  Mat d_up = coboundary_matrix(m, degree);
  return kernel_mod(scale_rows_to_modulus(d_up, level_moduli(m, degree + 1), L), L);
}

}  // namespace

CohomologyGroup cohomology_group(ModulePtr module, int degree) {
  if (degree < 1 || degree > 3)
    throw Error(Errc::DegreeTooHigh, "cohomology groups cover degrees 1 through 3");
  const long long L = module->coeff.exponent();
  Mat z = cocycle_generators(*module, degree, L);
  Mat d_down = coboundary_matrix(*module, degree - 1);
  Mat b = hconcat(d_down, diag_mat(level_moduli(*module, degree)));
  CohomologyGroup h;
  h.module = std::move(module);
  h.degree = degree;
  h.quotient = mod_quotient(z, b, L);
  return h;
}

std::optional<Cochain> bounding_cochain(const Cochain& target) {
  if (target.degree < 1) internal_error("a bounding cochain needs target degree >= 1");
  const PiModule& m = *target.module;
  const long long L = m.coeff.exponent();
  const std::vector<long long> moduli = level_moduli(m, target.degree);
  Mat d_down = coboundary_matrix(m, target.degree - 1);
  auto x = solve_mod(scale_rows_to_modulus(d_down, moduli, L),
                     scale_to_modulus(column_of(lift_cochain(target), 0), moduli, L), L);
  if (!x) return std::nullopt;
  Cochain g = unlift_cochain(target.module, target.degree - 1, column_mat(*x));
  if (!coboundary(g).same_values(target)) internal_error("bounding cochain verification failed");
  return g;
}

std::vector<Cochain> all_cocycles(ModulePtr module, int degree, long long cap) {
  if (degree < 1 || degree > 3)
    throw Error(Errc::DegreeTooHigh, "cocycle enumeration covers degrees 1 through 3");
  const long long L = module->coeff.exponent();
  Mat z = cocycle_generators(*module, degree, L);
  ModQuotient q = mod_quotient(z, diag_mat(level_moduli(*module, degree)), L);
  std::vector<Cochain> out;
  for (const auto& cls : q.all_classes(cap))
    out.push_back(unlift_cochain(module, degree, column_mat(q.representative(cls))));
  return out;
}

Cochain pushforward(const AbelianHom& f, const ModulePtr& target_module, const Cochain& c) {
  if (!(target_module->pi == c.module->pi))
    throw Error(Errc::SourceTargetMismatch, "pushforward requires the same acting group");
  if (!(f.source == c.module->coeff) || !(f.target == target_module->coeff))
    throw Error(Errc::SourceTargetMismatch, "coefficient map does not match the modules");
  for (int s = 0; s < c.module->pi.order(); ++s)
    if (!(compose_abelian(f, c.module->action[s]) == compose_abelian(target_module->action[s], f)))
      throw Error(Errc::NotEquivariant, "coefficient map does not commute with the action", {s});
  Cochain out = zero_cochain(target_module, c.degree);
  for (const auto& [k, v] : c.entries) out.set(c.tuple_of(k), f.apply(v));
  return out;
}

Cochain pullback(const GroupHom& phi, const Cochain& c) {
  if (!(phi.target == c.module->pi))
    throw Error(Errc::SourceTargetMismatch, "pullback map must land in the acting group");
  ModulePtr restricted = restrict_along(phi, c.module);
  Cochain out = zero_cochain(restricted, c.degree);
  const int n = phi.source.order();
  std::vector<int> mapped(c.degree);
  for_each_free_tuple(n, c.degree, [&](const std::vector<int>& t) {
    for (int i = 0; i < c.degree; ++i) mapped[i] = phi.map[t[i]];
    out.set(t, c.at(mapped));
  });
  return out;
}

}  // namespace grcat
