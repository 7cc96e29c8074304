#include "grcat/cochain.hpp"

#include <algorithm>

namespace grcat {

long long Cochain::key(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != degree) internal_error("tuple length != cochain degree");
  const int n = module->pi.order();
  long long k = 0;
  for (int x : tuple) {
    if (x < 0 || x >= n) internal_error("tuple entry outside the group");
    k = k * n + x;
  }
  return k;
}

std::vector<int> Cochain::tuple_of(long long key) const {
  const int n = module->pi.order();
  std::vector<int> tuple(degree, 0);
  for (int i = degree - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(key % n);
    key /= n;
  }
  return tuple;
}

std::vector<long long> Cochain::at(const std::vector<int>& tuple) const {
  auto it = entries.find(key(tuple));
  if (it == entries.end()) return module->coeff.zero();
  return it->second;
}

void Cochain::set(const std::vector<int>& tuple, std::vector<long long> value) {
  long long k = key(tuple);
  std::vector<long long> v = module->coeff.reduce(std::move(value));
  bool zero = std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  bool has_identity = std::any_of(tuple.begin(), tuple.end(), [](int x) { return x == 0; });
  if (has_identity) {
    if (!zero)
      throw Error(Errc::NotNormalized, "nonzero value on a tuple containing the identity",
                  std::vector<long long>(tuple.begin(), tuple.end()));
    return;
  }
  if (zero)
    entries.erase(k);
  else
    entries[k] = std::move(v);
}

Cochain& Cochain::add(const Cochain& o) {
  if (degree != o.degree || !modules_equal(*module, *o.module))
    throw Error(Errc::SourceTargetMismatch, "cochain addition needs matching module and degree");
  for (const auto& [k, v] : o.entries) {
    auto it = entries.find(k);
    if (it == entries.end()) {
      entries.emplace(k, v);
    } else {
      it->second = module->coeff.add(it->second, v);
      if (std::all_of(it->second.begin(), it->second.end(), [](long long x) { return x == 0; }))
        entries.erase(it);
    }
  }
  return *this;
}

Cochain& Cochain::sub(const Cochain& o) {
  if (degree != o.degree || !modules_equal(*module, *o.module))
    throw Error(Errc::SourceTargetMismatch, "cochain subtraction needs matching module and degree");
  for (const auto& [k, v] : o.entries) {
    auto it = entries.find(k);
    if (it == entries.end()) {
      entries.emplace(k, module->coeff.neg(v));
    } else {
      it->second = module->coeff.sub(it->second, v);
      if (std::all_of(it->second.begin(), it->second.end(), [](long long x) { return x == 0; }))
        entries.erase(it);
    }
  }
  return *this;
}

Cochain& Cochain::negate() {
  for (auto& [k, v] : entries) v = module->coeff.neg(v);
  return *this;
}

Cochain zero_cochain(ModulePtr module, int degree) {
  if (degree < 0 || degree > 3)
    throw Error(Errc::DegreeTooHigh, "cochains are supported in degrees 0 through 3");
  Cochain c;
  c.module = std::move(module);
  c.degree = degree;
  return c;
}

}  // namespace grcat
