#include "grcat/pimodule.hpp"

namespace grcat {

ModulePtr make_module(FiniteGroup pi, FiniteAbelianGroup coeff, std::vector<AbelianHom> action) {
  const int n = pi.order();
  if (static_cast<int>(action.size()) != n)
    throw Error(Errc::NotAHomomorphism, "one action map per group element is required");
  for (int s = 0; s < n; ++s) {
    if (!(action[s].source == coeff) || !(action[s].target == coeff))
      throw Error(Errc::NotAHomomorphism, "action map has wrong source or target", {s});
    if (!is_abelian_iso(action[s]))
      throw Error(Errc::NotAHomomorphism, "action map is not an automorphism", {s});
  }
  if (!(action[0] == identity_abelian_hom(coeff)))
    throw Error(Errc::NotAHomomorphism, "identity element must act as the identity");
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (!(action[pi.op(s, t)] == compose_abelian(action[s], action[t])))
        throw Error(Errc::NotAHomomorphism, "action is not multiplicative", {s, t});
  auto m = std::make_shared<PiModule>();
  m->pi = std::move(pi);
  m->coeff = std::move(coeff);
  m->action = std::move(action);
  return m;
}

ModulePtr trivial_module(FiniteGroup pi, FiniteAbelianGroup coeff) {
  std::vector<AbelianHom> action(pi.order(), identity_abelian_hom(coeff));
  return make_module(std::move(pi), std::move(coeff), std::move(action));
}

ModulePtr restrict_along(const GroupHom& phi, const ModulePtr& m) {
  if (!(phi.target == m->pi))
    throw Error(Errc::SourceTargetMismatch, "restriction map does not land in the acting group");
  std::vector<AbelianHom> action;
  action.reserve(phi.source.order());
  for (int s = 0; s < phi.source.order(); ++s) action.push_back(m->action[phi.map[s]]);
  return make_module(phi.source, m->coeff, std::move(action));
}

bool modules_equal(const PiModule& a, const PiModule& b) {
  return a.pi == b.pi && a.coeff == b.coeff && a.action == b.action;
}

bool action_is_trivial(const PiModule& m) {
  AbelianHom id = identity_abelian_hom(m.coeff);
  for (const auto& f : m.action)
    if (!(f == id)) return false;
  return true;
}

}  // namespace grcat
