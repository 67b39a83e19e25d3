#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace signil {

inline constexpr std::uint32_t kMaxOrder = 8192;

struct Provenance {
  std::string construction;  // "table", "perm", "cyclic", ...
  std::string assoc_check;   // "full", "light+random", "by-construction"
};

class Group;

namespace detail {
Group make_group(std::uint32_t n, std::vector<std::uint16_t> mul,
                 std::string name, Provenance prov, bool assume_valid);
}

class Group {
public:
  std::uint32_t order() const { return _n; }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const
  {
    return _mul[static_cast<std::size_t>(a) * _n + b];
  }

  std::uint16_t inv(std::uint16_t a) const { return _inv[a]; }

  std::uint32_t elt_order(std::uint16_t a) const { return _ord[a]; }

  // g^-1 x g
  std::uint16_t conj(std::uint16_t x, std::uint16_t g) const
  {
    return mul(mul(inv(g), x), g);
  }

  // a^-1 b^-1 a b
  std::uint16_t comm(std::uint16_t a, std::uint16_t b) const
  {
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }

  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const
  {
    std::uint16_t r = 0;
    for (std::uint64_t i = 0; i < e % elt_order(a); ++i)
      r = mul(r, a);
    return r;
  }

  const std::vector<std::uint16_t> &gens() const { return _gens; }

  const std::string &name() const { return _name; }
  void set_name(std::string n) { _name = std::move(n); }

  const Provenance &provenance() const { return _prov; }

  std::uint64_t exponent_lcm() const
  {
    std::uint64_t e = 1;
    for (std::uint32_t a = 0; a < _n; ++a)
      e = std::lcm(e, static_cast<std::uint64_t>(_ord[a]));
    return e;
  }

private:
  friend Group detail::make_group(std::uint32_t, std::vector<std::uint16_t>,
                                  std::string, Provenance, bool);

  std::uint32_t _n = 0;
  std::vector<std::uint16_t> _mul;  // row-major n*n
  std::vector<std::uint16_t> _inv;
  std::vector<std::uint32_t> _ord;
  std::vector<std::uint16_t> _gens;
  std::string _name;
  Provenance _prov;
};

// image[x] is the image of source element x
struct Homomorphism {
  std::uint32_t source_order = 0;
  std::uint32_t target_order = 0;
  std::vector<std::uint16_t> image;

  std::uint16_t operator()(std::uint16_t x) const { return image[x]; }
};

namespace detail {

inline std::vector<std::uint16_t> closure_under(
    std::uint32_t n, const std::vector<std::uint16_t> &mul,
    const std::vector<std::uint16_t> &seed)
{
  // magma closure: all products of seed elements (no identity assumed)
  std::vector<char> in(n, 0);
  std::vector<std::uint16_t> out;
  for (auto s : seed)
    if (!in[s]) {
      in[s] = 1;
      out.push_back(s);
    }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) {
      std::uint16_t p =
          mul[static_cast<std::size_t>(out[i]) * n + out[j]];
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  return out;
}

inline Group make_group(std::uint32_t n, std::vector<std::uint16_t> mul,
                        std::string name, Provenance prov, bool assume_valid)
{
  if (n == 0 || mul.size() != static_cast<std::size_t>(n) * n)
    fail(errc::malformed_table, "table size does not match declared order");
  if (n > kMaxOrder)
    throw CapExceeded("order " + std::to_string(n) + " exceeds cap "
                          + std::to_string(kMaxOrder),
                      n);
  for (auto v : mul)
    if (v >= n)
      fail(errc::malformed_table,
           "table entry " + std::to_string(v) + " out of range");

  auto at = [&](std::uint32_t a, std::uint32_t b) {
    return mul[static_cast<std::size_t>(a) * n + b];
  };

  if (!assume_valid) {
    // locate the identity, relabel it to 0 if needed
    std::uint32_t e = n;
    for (std::uint32_t c = 0; c < n && e == n; ++c) {
      bool ok = true;
      for (std::uint32_t a = 0; a < n && ok; ++a)
        ok = at(c, a) == a && at(a, c) == a;
      if (ok)
        e = c;
    }
    if (e == n)
      fail(errc::no_identity, "no two-sided identity element");
    if (e != 0) {
      std::vector<std::uint16_t> relab(n);
      std::iota(relab.begin(), relab.end(), 0);
      std::swap(relab[0], relab[e]);
      std::vector<std::uint16_t> m2(mul.size());
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          m2[static_cast<std::size_t>(relab[a]) * n + relab[b]] =
              relab[at(a, b)];
      mul = std::move(m2);
    }

    for (std::uint32_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::uint32_t b = 0; b < n && !found; ++b)
        found = at(a, b) == 0 && at(b, a) == 0;
      if (!found)
        fail(errc::no_inverse,
             "element " + std::to_string(a) + " has no two-sided inverse");
    }

    if (n <= 512) {
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          for (std::uint32_t c = 0; c < n; ++c)
            if (at(at(a, b), c) != at(a, at(b, c)))
              fail(errc::not_associative,
                   "associativity fails at (" + std::to_string(a) + ","
                       + std::to_string(b) + "," + std::to_string(c) + ")");
      prov.assoc_check = "full";
    } else {
      // Light's test on a generating set proves associativity outright;
      // the random triples are a cheap independent spot check
      std::vector<std::uint16_t> gens;
      std::vector<std::uint16_t> closed;
      while (closed.size() < n) {
        std::vector<char> in(n, 0);
        for (auto x : closed)
          in[x] = 1;
        std::uint16_t pick = 0;
        for (std::uint32_t a = 0; a < n; ++a)
          if (!in[a]) {
            pick = static_cast<std::uint16_t>(a);
            break;
          }
        gens.push_back(pick);
        closed = closure_under(n, mul, gens);
      }
      for (auto g : gens)
        for (std::uint32_t a = 0; a < n; ++a)
          for (std::uint32_t b = 0; b < n; ++b)
            if (at(at(a, g), b) != at(a, at(g, b)))
              fail(errc::not_associative,
                   "associativity fails at (" + std::to_string(a) + ","
                       + std::to_string(g) + "," + std::to_string(b) + ")");
      std::mt19937 rng(0x51671u);
      std::uniform_int_distribution<std::uint32_t> d(0, n - 1);
      for (int i = 0; i < 100000; ++i) {
        std::uint32_t a = d(rng), b = d(rng), c = d(rng);
        if (at(at(a, b), c) != at(a, at(b, c)))
          fail(errc::not_associative, "associativity fails (sampled)");
      }
      prov.assoc_check = "light+random";
    }
  }

  Group g;
  g._n = n;
  g._mul = std::move(mul);
  g._name = std::move(name);
  g._prov = std::move(prov);

  g._inv.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (g.mul(static_cast<std::uint16_t>(a),
                static_cast<std::uint16_t>(b)) == 0) {
        g._inv[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    if (!found)
      fail(errc::no_inverse, "element has no inverse");
  }

  g._ord.assign(n, 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    std::uint16_t x = static_cast<std::uint16_t>(a);
    while (x != 0) {
      x = g.mul(x, static_cast<std::uint16_t>(a));
      ++k;
    }
    g._ord[a] = k;
  }

  // greedy: highest-order element not yet generated
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::uint32_t covered = 1;
  std::vector<std::uint16_t> frontier = {0};
  while (covered < n) {
    std::uint16_t best = 0;
    std::uint32_t best_ord = 0;
    for (std::uint32_t a = 0; a < n; ++a)
      if (!in[a] && g._ord[a] > best_ord) {
        best_ord = g._ord[a];
        best = static_cast<std::uint16_t>(a);
      }
    g._gens.push_back(best);
    // extend the generated set by right multiplication
    std::vector<std::uint16_t> work = frontier;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (auto s : g._gens) {
        std::uint16_t p = g.mul(work[i], s);
        if (!in[p]) {
          in[p] = 1;
          ++covered;
          work.push_back(p);
        }
      }
    frontier = std::move(work);
  }
  if (g._gens.empty())
    g._gens.push_back(0);  // trivial group

  return g;
}

inline std::vector<std::uint16_t> compose_perm(
    const std::vector<std::uint16_t> &a, const std::vector<std::uint16_t> &b)
{
  std::vector<std::uint16_t> r(a.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    r[p] = a[b[p]];
  return r;
}

}  // namespace detail

inline Group from_cayley_table(std::uint32_t order,
                               std::vector<std::uint16_t> table,
                               std::string name = "table")
{
  return detail::make_group(order, std::move(table), std::move(name),
                            {"table", ""}, false);
}

inline Group from_permutations(std::uint32_t degree,
                               std::vector<std::vector<std::uint16_t>> gens,
                               std::uint32_t cap = kMaxOrder,
                               std::string name = "perm")
{
  for (const auto &p : gens) {
    if (p.size() != degree)
      throw Error(errc::not_bijection, "generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (auto v : p) {
      if (v >= degree || seen[v])
        throw Error(errc::not_bijection, "generator is not a bijection");
      seen[v] = 1;
    }
  }

  std::vector<std::uint16_t> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);

  std::vector<std::vector<std::uint16_t>> elts = {ident};
  std::map<std::vector<std::uint16_t>, std::uint16_t> index = {{ident, 0}};
  for (std::size_t i = 0; i < elts.size(); ++i)
    for (const auto &gp : gens) {
      auto next = detail::compose_perm(elts[i], gp);
      if (!index.contains(next)) {
        if (elts.size() >= cap)
          throw CapExceeded("permutation closure exceeds cap "
                                + std::to_string(cap),
                            elts.size());
        index[next] = static_cast<std::uint16_t>(elts.size());
        elts.push_back(std::move(next));
      }
    }

  std::uint32_t n = static_cast<std::uint32_t>(elts.size());
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          index.at(detail::compose_perm(elts[a], elts[b]));
  return detail::make_group(n, std::move(mul), std::move(name),
                            {"perm", "by-construction"}, true);
}

inline Group cyclic(std::uint32_t n)
{
  if (n == 0 || n > kMaxOrder)
    fail(errc::semantic_error, "bad cyclic order " + std::to_string(n));
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>((a + b) % n);
  return detail::make_group(n, std::move(mul), "C" + std::to_string(n),
                            {"cyclic", "by-construction"}, true);
}

// order n, rotation r = 1, reflection s = n/2; element k + (n/2)*e is r^k s^e
inline Group dihedral(std::uint32_t n)
{
  if (n < 4 || n % 2 || n > kMaxOrder)
    fail(errc::semantic_error, "dihedral order must be even and >= 4");
  std::uint32_t m = n / 2;
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  auto idx = [m](std::uint32_t k, std::uint32_t e) {
    return static_cast<std::uint16_t>(k + m * e);
  };
  for (std::uint32_t k1 = 0; k1 < m; ++k1)
    for (std::uint32_t e1 = 0; e1 < 2; ++e1)
      for (std::uint32_t k2 = 0; k2 < m; ++k2)
        for (std::uint32_t e2 = 0; e2 < 2; ++e2) {
          std::uint32_t k = e1 ? (k1 + m - k2) % m : (k1 + k2) % m;
          mul[static_cast<std::size_t>(idx(k1, e1)) * n + idx(k2, e2)] =
              idx(k, e1 ^ e2);
        }
  return detail::make_group(n, std::move(mul), "D" + std::to_string(n),
                            {"dihedral", "by-construction"}, true);
}

// elements 1,i,j,k,-1,-i,-j,-k in that order
inline Group quaternion8()
{
  static constexpr int B[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int S[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::uint16_t> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int b1 = a & 3, s1 = a >> 2, b2 = b & 3, s2 = b >> 2;
      mul[a * 8 + b] =
          static_cast<std::uint16_t>(B[b1][b2] + 4 * (s1 ^ s2 ^ S[b1][b2]));
    }
  return detail::make_group(8, std::move(mul), "Q8",
                            {"quaternion", "by-construction"}, true);
}

// dicyclic of 2-power order n = 4m: a of order 2m, b^2 = a^m, bab^-1 = a^-1
inline Group generalized_quaternion(std::uint32_t n)
{
  if (n < 8 || (n & (n - 1)) || n > kMaxOrder)
    fail(errc::semantic_error,
         "generalized quaternion order must be a power of 2, >= 8");
  std::uint32_t m2 = n / 2;  // order of a
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  auto idx = [m2](std::uint32_t k, std::uint32_t e) {
    return static_cast<std::uint16_t>(k + m2 * e);
  };
  for (std::uint32_t k1 = 0; k1 < m2; ++k1)
    for (std::uint32_t e1 = 0; e1 < 2; ++e1)
      for (std::uint32_t k2 = 0; k2 < m2; ++k2)
        for (std::uint32_t e2 = 0; e2 < 2; ++e2) {
          std::uint32_t k = e1 ? (k1 + m2 - k2) % m2 : (k1 + k2) % m2;
          if (e1 && e2)
            k = (k + m2 / 2) % m2;  // b^2 = a^m
          mul[static_cast<std::size_t>(idx(k1, e1)) * n + idx(k2, e2)] =
              idx(k, e1 ^ e2);
        }
  return detail::make_group(n, std::move(mul), "GQ" + std::to_string(n),
                            {"generalized-quaternion", "by-construction"},
                            true);
}

inline Group symmetric(std::uint32_t deg)
{
  if (deg < 1)
    fail(errc::semantic_error, "symmetric degree must be >= 1");
  std::vector<std::vector<std::uint16_t>> gens;
  if (deg >= 2) {
    std::vector<std::uint16_t> t(deg), c(deg);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (std::uint32_t p = 0; p < deg; ++p)
      c[p] = static_cast<std::uint16_t>((p + 1) % deg);
    gens = {t, c};
  }
  return from_permutations(deg, std::move(gens), kMaxOrder,
                           "S" + std::to_string(deg));
}

inline Group alternating(std::uint32_t deg)
{
  if (deg < 1)
    fail(errc::semantic_error, "alternating degree must be >= 1");
  std::vector<std::vector<std::uint16_t>> gens;
  if (deg >= 3) {
    std::vector<std::uint16_t> a(deg), b(deg);
    std::iota(a.begin(), a.end(), 0);
    a[0] = 1;
    a[1] = 2;
    a[2] = 0;
    std::iota(b.begin(), b.end(), 0);
    if (deg % 2) {
      for (std::uint32_t p = 0; p < deg; ++p)
        b[p] = static_cast<std::uint16_t>((p + 1) % deg);
    } else {
      for (std::uint32_t p = 1; p < deg; ++p)
        b[p] = static_cast<std::uint16_t>(p % (deg - 1) + 1);
    }
    gens = {a, b};
  }
  return from_permutations(deg, std::move(gens), kMaxOrder,
                           "A" + std::to_string(deg));
}

// (a, b) at index a*|B| + b
inline Group direct_product(const Group &A, const Group &B)
{
  std::uint64_t n64 = static_cast<std::uint64_t>(A.order()) * B.order();
  if (n64 > kMaxOrder)
    throw CapExceeded("product order " + std::to_string(n64) + " exceeds cap",
                      n64);
  std::uint32_t n = static_cast<std::uint32_t>(n64), nb = B.order();
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint16_t a = A.mul(static_cast<std::uint16_t>(x / nb),
                              static_cast<std::uint16_t>(y / nb));
      std::uint16_t b = B.mul(static_cast<std::uint16_t>(x % nb),
                              static_cast<std::uint16_t>(y % nb));
      mul[static_cast<std::size_t>(x) * n + y] =
          static_cast<std::uint16_t>(a * nb + b);
    }
  return detail::make_group(n, std::move(mul),
                            A.name() + " x " + B.name(),
                            {"direct-product", "by-construction"}, true);
}

// how chosen generators of H act on N, each as a permutation of N's elements
struct Action {
  std::vector<std::pair<std::uint16_t, std::vector<std::uint16_t>>>
      generator_maps;
};

// (n, h) at index n*|H| + h;  (n1,h1)(n2,h2) = (n1 * phi_h1(n2), h1 h2)
inline Group semidirect_product(const Group &N, const Group &H,
                                const Action &act,
                                std::string name = "")
{
  std::uint32_t nn = N.order(), nh = H.order();
  std::uint64_t n64 = static_cast<std::uint64_t>(nn) * nh;
  if (n64 > kMaxOrder)
    throw CapExceeded("product order " + std::to_string(n64) + " exceeds cap",
                      n64);

  for (const auto &[hg, p] : act.generator_maps) {
    if (hg >= nh)
      fail(errc::precondition_violated, "action generator outside H");
    if (p.size() != nn)
      throw Error(errc::not_bijection, "action map has wrong degree");
    std::vector<char> seen(nn, 0);
    for (auto v : p) {
      if (v >= nn || seen[v])
        throw Error(errc::not_bijection, "action map is not a bijection");
      seen[v] = 1;
    }
    if (p[0] != 0)
      throw Error(errc::not_automorphism, "action map moves the identity");
    for (std::uint32_t a = 0; a < nn; ++a)
      for (std::uint32_t b = 0; b < nn; ++b)
        if (p[N.mul(static_cast<std::uint16_t>(a),
                    static_cast<std::uint16_t>(b))]
            != N.mul(p[a], p[b]))
          throw Error(errc::not_automorphism,
                      "action map is not an automorphism of N");
  }

  // extend to all of H along its Cayley graph
  std::vector<std::uint16_t> ident(nn);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<std::uint16_t>> phi(nh);
  std::vector<char> known(nh, 0);
  phi[0] = ident;
  known[0] = 1;
  std::vector<std::uint16_t> work = {0};
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto &[hg, p] : act.generator_maps) {
      std::uint16_t h2 = H.mul(work[i], hg);
      auto ext = detail::compose_perm(phi[work[i]], p);
      if (!known[h2]) {
        phi[h2] = std::move(ext);
        known[h2] = 1;
        work.push_back(h2);
      } else if (phi[h2] != ext) {
        throw Error(errc::not_homomorphism,
                    "action does not respect the relations of H");
      }
    }
  for (std::uint32_t h = 0; h < nh; ++h)
    if (!known[h])
      fail(errc::precondition_violated,
           "action generators do not generate H");

  // consistency across all products, not just the tree edges
  for (std::uint32_t h1 = 0; h1 < nh; ++h1)
    for (const auto &[hg, p] : act.generator_maps)
      if (phi[H.mul(static_cast<std::uint16_t>(h1), hg)]
          != detail::compose_perm(phi[h1], p))
        throw Error(errc::not_homomorphism,
                    "action does not respect the relations of H");

  std::uint32_t n = static_cast<std::uint32_t>(n64);
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint16_t n1 = static_cast<std::uint16_t>(x / nh);
    std::uint16_t h1 = static_cast<std::uint16_t>(x % nh);
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint16_t n2 = static_cast<std::uint16_t>(y / nh);
      std::uint16_t h2 = static_cast<std::uint16_t>(y % nh);
      mul[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(
          N.mul(n1, phi[h1][n2]) * nh + H.mul(h1, h2));
    }
  }
  if (name.empty())
    name = "sd(" + N.name() + ", " + H.name() + ")";
  return detail::make_group(n, std::move(mul), std::move(name),
                            {"semidirect-product", "by-construction"}, true);
}

// materialize the subgroup on elements of S as its own group; the
// homomorphism is the inclusion (new index -> parent element)
inline std::pair<Group, Homomorphism> materialize(const Group &G,
                                                  const Bitset &S)
{
  auto elts = S.elements();
  if (elts.empty() || elts[0] != 0)
    fail(errc::precondition_violated, "subgroup must contain the identity");
  std::uint32_t m = static_cast<std::uint32_t>(elts.size());
  std::vector<std::uint16_t> back(G.order(), 0);
  for (std::uint32_t i = 0; i < m; ++i)
    back[elts[i]] = static_cast<std::uint16_t>(i);
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(m) * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      std::uint16_t p = G.mul(elts[a], elts[b]);
      if (!S.test(p))
        fail(errc::precondition_violated, "set is not closed under product");
      mul[static_cast<std::size_t>(a) * m + b] = back[p];
    }
  Homomorphism inc{m, G.order(), std::vector<std::uint16_t>(elts.begin(),
                                                            elts.end())};
  return {detail::make_group(m, std::move(mul),
                             G.name() + "|" + std::to_string(m),
                             {"subgroup", "by-construction"}, true),
          std::move(inc)};
}

// quotient by a normal subgroup; the homomorphism is the natural projection
inline std::pair<Group, Homomorphism> quotient(const Group &G,
                                               const Bitset &N)
{
  auto nelts = N.elements();
  if (nelts.empty() || nelts[0] != 0)
    fail(errc::precondition_violated, "kernel must contain the identity");
  for (auto x : nelts)
    for (auto g : G.gens())
      if (!N.test(G.conj(x, g)))
        fail(errc::not_normal, "kernel is not normal");

  std::uint32_t n = G.order();
  constexpr std::uint16_t kUnset = 0xffff;
  std::vector<std::uint16_t> coset(n, kUnset);
  std::vector<std::uint16_t> rep;
  for (std::uint32_t g = 0; g < n; ++g)
    if (coset[g] == kUnset) {
      std::uint16_t c = static_cast<std::uint16_t>(rep.size());
      rep.push_back(static_cast<std::uint16_t>(g));
      for (auto x : nelts)
        coset[G.mul(x, static_cast<std::uint16_t>(g))] = c;
    }
  std::uint32_t q = static_cast<std::uint32_t>(rep.size());
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      mul[static_cast<std::size_t>(a) * q + b] = coset[G.mul(rep[a], rep[b])];
  Homomorphism proj{n, q, coset};
  return {detail::make_group(q, std::move(mul),
                             G.name() + "/" + std::to_string(nelts.size()),
                             {"quotient", "by-construction"}, true),
          std::move(proj)};
}

}  // namespace signil
