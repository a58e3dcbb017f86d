// Liftings of Z4 -> Z2 (reduction mod 2, trivial action), end to end.
#include <cstdio>

#include "xmodkit/xmodkit.hpp"

using namespace xmodkit;

int main() {
  FiniteGroup z4 = cyclic(4), z2 = cyclic(2);
  GroupHom mod2 = GroupHom::make(z4, z2, {0, 1, 0, 1});
  CrossedModule base = xmod_trivial_action(mod2);

  std::printf("base %s, Ker alpha = {0,2}\n", base.describe().c_str());
  for (const auto& row : enumerate_liftings(base)) {
    const Lifting& l = row.lifting;
    std::printf("  C of order %zu: X = %s, degree %zu, flags %s\n", row.kernel.size(),
                l.x().label().c_str(), *row.degree, row.flags.to_string().c_str());

    // the same lifting seen as an action of the group-groupoid η(base)
    GGAction act = action_from_lifting(l);
    std::printf("    acts on X through %zu morphisms; theta(psi(L)) = L: %s\n",
                act.groupoid().base().num_morphisms(), theta_psi_roundtrip(l) ? "yes" : "no");
  }

  UniversalLifting u = universal_lifting(base);
  std::printf("universal lifting (1_A, A, alpha) maps to %zu liftings\n", u.to_enumerated.size());

  // (1_A, A, alpha) is a lifting of the natural lifting, not conversely
  Lifting nat = natural_lifting(base);
  std::printf("universal is a lifting of natural: %s; natural is a lifting of universal: %s\n",
              is_lifting_of_lifting(nat, u.lifting).verdict ? "yes" : "no",
              is_lifting_of_lifting(u.lifting, nat).verdict ? "yes" : "no");

  std::vector<FiniteGroup> xs = catalog_groups(8);
  LiftingSearch s = search_liftings(base, xs, 8);
  std::printf("exhaustive search over groups of order <= 8: %zu liftings, %zu classes, %zu transitive\n",
              s.liftings.size(), s.classes(), s.transitive_classes());
}
