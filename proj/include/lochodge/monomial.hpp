#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lochodge {

// A multidegree in Z^n. Entries may be negative when the vector is the degree
// of a graded piece of local cohomology.
using ExpVec = std::vector<int>;

// Subsets of variables / generators as bitmasks. Everything in this library
// lives at n <= 16 variables and a similar cap on generator counts, so 32 bits
// of mask are plenty for variables; generator subsets use 64 bits.
using VarMask = uint32_t;
using GenMask = uint64_t;

inline VarMask neg_mask(const ExpVec& u) {
  VarMask m = 0;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] < 0) m |= VarMask(1) << i;
  return m;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExpVec exp_max(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool exp_leq(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool exp_nonneg(const ExpVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

inline int exp_total(const ExpVec& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

// Level of a multidegree: sum of (-u_i - 1) over the negative coordinates.
// This is the quantity that cuts out the Hodge filtration on graded pieces.
inline int hodge_level(const ExpVec& u) {
  int l = 0;
  for (int x : u)
    if (x < 0) l += -x - 1;
  return l;
}

// A monomial x^e with nonnegative exponents.
struct Monomial {
  ExpVec e;

  Monomial() = default;
  explicit Monomial(ExpVec v) : e(std::move(v)) {
    for (int x : e)
      if (x < 0) throw std::invalid_argument("monomial exponent is negative");
  }

  size_t nvars() const { return e.size(); }
  int degree() const { return exp_total(e); }
  bool is_one() const { return degree() == 0; }

  VarMask support() const {
    VarMask m = 0;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) m |= VarMask(1) << i;
    return m;
  }

  bool divides(const Monomial& o) const { return exp_leq(e, o.e); }

  Monomial operator*(const Monomial& o) const { return Monomial(exp_add(e, o.e)); }

  Monomial pow(int t) const {
    ExpVec r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r[i] = e[i] * t;
    return Monomial(r);
  }

  Monomial squarefree_part() const {
    ExpVec r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r[i] = e[i] > 0 ? 1 : 0;
    return Monomial(r);
  }

  bool is_squarefree() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }  // lex on exponents
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  return Monomial(exp_max(a.e, b.e));
}

// Divisibility-minimal subset generating the same ideal. Duplicates collapse.
inline std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  if (!gens.empty()) {
    size_t n = gens.front().nvars();
    for (const auto& g : gens)
      if (g.nvars() != n)
        throw std::invalid_argument("minimal_generators: mismatched variable counts");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i]) && !(gens[i] == gens[j])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// A monomial ideal, stored by its unique minimal monomial generating set.
// The `reduced` flag records whether downstream scheme-sensitive filtrations
// should replace the ideal by its radical first.
struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> gens;  // minimal, sorted lex
  bool reduced = false;

  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> g, bool red = false)
      : n(nvars), reduced(red) {
    for (const auto& m : g)
      if ((int)m.nvars() != n)
        throw std::invalid_argument("ideal generator has wrong variable count");
    gens = minimal_generators(std::move(g));
  }

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  size_t ngens() const { return gens.size(); }

  // Membership of a monomial: divisible by some generator.
  bool contains(const Monomial& m) const {
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  }

  // Ideal containment: other subseteq this.
  bool contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens)
      if (!contains(g)) return false;
    return true;
  }

  VarMask total_support() const {
    VarMask m = 0;
    for (const auto& g : gens) m |= g.support();
    return m;
  }

  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
  }

  bool operator==(const MonomialIdeal& o) const {
    return n == o.n && gens == o.gens && reduced == o.reduced;
  }
};

inline MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<Monomial> g;
  g.reserve(I.gens.size());
  for (const auto& m : I.gens) g.push_back(m.squarefree_part());
  return MonomialIdeal(I.n, std::move(g), /*reduced=*/true);
}

// Sum of two ideals in the same ring.
inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return MonomialIdeal(a.n, std::move(g), a.reduced && b.reduced);
}

inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::set<Monomial> prods;
  for (const auto& x : a.gens)
    for (const auto& y : b.gens) prods.insert(x * y);
  return MonomialIdeal(a.n, std::vector<Monomial>(prods.begin(), prods.end()));
}

inline MonomialIdeal ideal_power(const MonomialIdeal& I, int m) {
  if (m < 1) throw std::invalid_argument("ideal_power: exponent must be >= 1");
  MonomialIdeal P = I;
  for (int j = 1; j < m; ++j) P = ideal_product(P, I);
  P.reduced = false;
  return P;
}

// Minimal coordinate primes of rad(I): inclusion-minimal variable sets meeting
// the support of every generator. Exhaustive over subsets, by popcount.
inline std::vector<VarMask> minimal_primes(const MonomialIdeal& I) {
  if (I.is_zero() || !I.is_proper())
    throw std::invalid_argument("minimal_primes: ideal must be proper and nonzero");
  std::vector<VarMask> supports;
  for (const auto& g : I.gens) supports.push_back(g.support());

  std::vector<VarMask> subsets;
  subsets.reserve(size_t(1) << I.n);
  for (VarMask s = 0; s < (VarMask(1) << I.n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(), [](VarMask a, VarMask b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<VarMask> minimal;
  for (VarMask s : subsets) {
    bool transversal = true;
    for (VarMask sup : supports)
      if ((sup & s) == 0) {
        transversal = false;
        break;
      }
    if (!transversal) continue;
    bool dominated = false;
    for (VarMask t : minimal)
      if ((t & ~s) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

inline int codim(const MonomialIdeal& I) {
  int c = I.n + 1;
  for (VarMask p : minimal_primes(I)) c = std::min(c, __builtin_popcount(p));
  return c;
}

// J_k(f_1,...,f_r): generated by the products f^b with 0 <= b_i <= k and
// sum(b) = k(r-1).
inline MonomialIdeal jk_ideal(const std::vector<Monomial>& f, int k) {
  if (f.empty()) throw std::invalid_argument("jk_ideal: need at least one monomial");
  if (k < 0) throw std::invalid_argument("jk_ideal: k must be >= 0");
  int r = (int)f.size();
  int n = (int)f[0].nvars();
  int target = k * (r - 1);
  std::vector<Monomial> gens;
  std::vector<int> b(r, 0);
  // enumerate b_1..b_r with 0 <= b_i <= k summing to k(r-1)
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == r) {
      if (remaining == 0) {
        Monomial prod{ExpVec(n, 0)};
        for (int j = 0; j < r; ++j)
          for (int t = 0; t < b[j]; ++t) prod = prod * f[j];
        gens.push_back(prod);
      }
      return;
    }
    int lo = std::max(0, remaining - k * (r - 1 - i));
    int hi = std::min(k, remaining);
    for (int v = lo; v <= hi; ++v) {
      b[i] = v;
      self(self, i + 1, remaining - v);
    }
    b[i] = 0;
  };
  rec(rec, 0, target);
  return MonomialIdeal(n, std::move(gens));
}

// Monomial complete intersections are exactly the ideals whose minimal
// generators have pairwise disjoint supports.
inline bool is_complete_intersection(const MonomialIdeal& I) {
  for (size_t i = 0; i < I.gens.size(); ++i)
    for (size_t j = i + 1; j < I.gens.size(); ++j)
      if (I.gens[i].support() & I.gens[j].support()) return false;
  return true;
}

}  // namespace lochodge
