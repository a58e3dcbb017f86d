#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "xmodkit/group.hpp"

// Constructors for the named families the catalog is generated from.

namespace xmodkit {

inline FiniteGroup cyclic(std::size_t n) {
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::from_flat(n, std::move(flat), "Z" + std::to_string(n));
}

/// Permutations of {0..k-1} in lexicographic order; (p∘q)(i) = p(q(i)).
inline std::vector<std::vector<Elem>> permutations_lex(std::size_t k) {
  std::vector<Elem> p(k);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<std::vector<Elem>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

inline FiniteGroup symmetric(std::size_t k) {
  const auto perms = permutations_lex(k);
  const std::size_t n = perms.size();
  std::vector<Elem> flat(n * n);
  std::vector<Elem> tmp(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < k; ++x) tmp[x] = perms[i][perms[j][x]];
      flat[i * n + j] =
          static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), tmp) - perms.begin());
    }
  return FiniteGroup::from_flat(n, std::move(flat), "S" + std::to_string(k));
}

/// Symmetries of the n-gon, order 2n. Element f*n + k is r^k s^f.
inline FiniteGroup dihedral(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<Elem> flat(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t f = x / n, a = x % n, g = y / n, b = y % n;
      const std::size_t k = f == 0 ? (a + b) % n : (a + n - b) % n;
      flat[x * m + y] = static_cast<Elem>(((f + g) % 2) * n + k);
    }
  std::string label = n == 2 ? "V4" : "D" + std::to_string(n);
  return FiniteGroup::from_flat(m, std::move(flat), std::move(label));
}

/// Dicyclic group of order 4m: <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>.
/// Element f*2m + k is a^k x^f. Order 8 is the quaternion group Q8.
inline FiniteGroup dicyclic(std::size_t m) {
  const std::size_t h = 2 * m, n = 4 * m;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t f = x / h, k = x % h, g = y / h, l = y % h;
      std::size_t e, ff;
      if (f == 0) {
        e = (k + l) % h;
        ff = g;
      } else if (g == 0) {
        e = (k + h - l) % h;
        ff = 1;
      } else {
        e = (k + h - l + m) % h;
        ff = 0;
      }
      flat[x * n + y] = static_cast<Elem>(ff * h + e);
    }
  return FiniteGroup::from_flat(n, std::move(flat), "Q" + std::to_string(n));
}

/// Element g*|H| + h is (g, h).
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  std::string label = {}) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      flat[x * n + y] = static_cast<Elem>(g.op(x / nh, y / nh) * nh + h.op(x % nh, y % nh));
  if (label.empty() && !g.label().empty() && !h.label().empty())
    label = g.label() + "x" + h.label();
  return FiniteGroup::from_flat(n, std::move(flat), std::move(label));
}

/// A ⋊ X for an action of X on A: (a1,x1)+(a,x) = (a1 + x1·a, x1+x).
/// Element a*|X| + x is (a, x).
inline FiniteGroup semidirect_product(const GroupAction& act, std::string label = {}) {
  const FiniteGroup& a = act.target();
  const FiniteGroup& x = act.actor();
  const std::size_t nx = x.order(), n = a.order() * nx;
  std::vector<Elem> flat(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Elem a1 = static_cast<Elem>(p / nx), x1 = static_cast<Elem>(p % nx);
      const Elem a2 = static_cast<Elem>(q / nx), x2 = static_cast<Elem>(q % nx);
      flat[p * n + q] = static_cast<Elem>(a.op(a1, act(x1, a2)) * nx + x.op(x1, x2));
    }
  return FiniteGroup::from_flat(n, std::move(flat), std::move(label));
}

}  // namespace xmodkit
