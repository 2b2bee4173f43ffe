#pragma once

// Finite bounded lattices as proposition systems: exhaustive checking of the
// poset/lattice/orthocomplement/orthomodular/atomistic/covering axioms, the
// order-reversal property of the negation, and the brute-force search showing
// that order reversal does not follow from the other complement laws.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "starlat/report.hpp"

namespace starlat {

class NotLatticeError : public std::runtime_error {
 public:
  NotLatticeError(const std::string& op, int a, int b)
      : std::runtime_error("not a lattice: " + op + " of elements " + std::to_string(a) + ", " +
                           std::to_string(b) + " does not exist"),
        a(a), b(b) {}
  int a, b;
};

struct FiniteOrtholattice {
  int size = 0;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq;  // row-major: leq[a*size + b] != 0  <=>  a <= b
  std::optional<std::vector<int>> complement;
  int bottom = 0, top = 0;

  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * size + b] != 0; }
  void set_le(int a, int b, bool v = true) { leq[static_cast<size_t>(a) * size + b] = v ? 1 : 0; }
};

inline void reflexive_transitive_closure(FiniteOrtholattice& l) {
  for (int a = 0; a < l.size; ++a) l.set_le(a, a);
  for (int k = 0; k < l.size; ++k)
    for (int a = 0; a < l.size; ++a)
      if (l.le(a, k))
        for (int b = 0; b < l.size; ++b)
          if (l.le(k, b)) l.set_le(a, b);
}

inline FiniteOrtholattice lattice_from_pairs(int size, const std::vector<std::pair<int, int>>& pairs,
                                             int bottom, int top) {
  FiniteOrtholattice l;
  l.size = size;
  l.leq.assign(static_cast<size_t>(size) * size, 0);
  l.bottom = bottom;
  l.top = top;
  l.labels.reserve(size);
  for (int i = 0; i < size; ++i) l.labels.push_back("p" + std::to_string(i));
  for (auto [a, b] : pairs) l.set_le(a, b);
  reflexive_transitive_closure(l);
  return l;
}

// ---------------------------------------------------------------------------
// axiom I: partial order

inline Report verify_poset(const FiniteOrtholattice& l) {
  Report rep;
  rep.suite = "poset";
  bool refl = true;
  std::optional<std::vector<double>> wr;
  for (int a = 0; a < l.size && refl; ++a)
    if (!l.le(a, a)) {
      refl = false;
      wr = std::vector<double>{double(a)};
    }
  rep.add("reflexive", refl, refl ? 0.0 : 1.0, wr);

  bool antisym = true;
  std::optional<std::vector<double>> wa;
  for (int a = 0; a < l.size && antisym; ++a)
    for (int b = 0; b < l.size && antisym; ++b)
      if (a != b && l.le(a, b) && l.le(b, a)) {
        antisym = false;
        wa = std::vector<double>{double(a), double(b)};
      }
  rep.add("antisymmetric", antisym, antisym ? 0.0 : 1.0, wa);

  bool trans = true;
  std::optional<std::vector<double>> wt;
  for (int a = 0; a < l.size && trans; ++a)
    for (int b = 0; b < l.size && trans; ++b)
      if (l.le(a, b))
        for (int c = 0; c < l.size && trans; ++c)
          if (l.le(b, c) && !l.le(a, c)) {
            trans = false;
            wt = std::vector<double>{double(a), double(b), double(c)};
          }
  rep.add("transitive", trans, trans ? 0.0 : 1.0, wt);
  return rep;
}

// ---------------------------------------------------------------------------
// axiom II: meets and joins

inline std::optional<int> try_meet(const FiniteOrtholattice& l, int a, int b) {
  std::vector<int> lower;
  for (int c = 0; c < l.size; ++c)
    if (l.le(c, a) && l.le(c, b)) lower.push_back(c);
  for (int c : lower) {
    bool greatest = true;
    for (int d : lower)
      if (!l.le(d, c)) {
        greatest = false;
        break;
      }
    if (greatest) return c;
  }
  return std::nullopt;
}

inline std::optional<int> try_join(const FiniteOrtholattice& l, int a, int b) {
  std::vector<int> upper;
  for (int c = 0; c < l.size; ++c)
    if (l.le(a, c) && l.le(b, c)) upper.push_back(c);
  for (int c : upper) {
    bool least = true;
    for (int d : upper)
      if (!l.le(c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

inline int meet(const FiniteOrtholattice& l, int a, int b) {
  auto m = try_meet(l, a, b);
  if (!m) throw NotLatticeError("meet", a, b);
  return *m;
}

inline int join(const FiniteOrtholattice& l, int a, int b) {
  auto j = try_join(l, a, b);
  if (!j) throw NotLatticeError("join", a, b);
  return *j;
}

inline Report verify_lattice(const FiniteOrtholattice& l) {
  Report rep;
  rep.suite = "lattice";
  bool meets = true, joins = true;
  std::optional<std::vector<double>> wm, wj;
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      if (meets && !try_meet(l, a, b)) {
        meets = false;
        wm = std::vector<double>{double(a), double(b)};
      }
      if (joins && !try_join(l, a, b)) {
        joins = false;
        wj = std::vector<double>{double(a), double(b)};
      }
    }
  rep.add("meets_exist", meets, meets ? 0.0 : 1.0, wm);
  rep.add("joins_exist", joins, joins ? 0.0 : 1.0, wj);

  bool bounded = true;
  for (int a = 0; a < l.size; ++a)
    bounded = bounded && l.le(l.bottom, a) && l.le(a, l.top);
  rep.add("bounded", bounded, bounded ? 0.0 : 1.0);
  return rep;
}

// ---------------------------------------------------------------------------
// axiom III: orthocomplement; the order-reversal clause is reported separately
// so its failures are distinguishable from the complement laws.

inline Report verify_orthocomplement(const FiniteOrtholattice& l) {
  Report rep;
  rep.suite = "orthocomplement";
  if (!l.complement) {
    rep.add("complement_present", false, 1.0);
    return rep;
  }
  rep.add("complement_present", true, 0.0);
  const std::vector<int>& c = *l.complement;

  bool invol = true;
  std::optional<std::vector<double>> wi;
  for (int a = 0; a < l.size && invol; ++a)
    if (c[a] < 0 || c[a] >= l.size || c[c[a]] != a) {
      invol = false;
      wi = std::vector<double>{double(a)};
    }
  rep.add("involutive", invol, invol ? 0.0 : 1.0, wi);

  bool law = true;
  std::optional<std::vector<double>> wl;
  for (int a = 0; a < l.size && law; ++a) {
    auto m = try_meet(l, a, c[a]);
    if (!m || *m != l.bottom) {
      law = false;
      wl = std::vector<double>{double(a)};
    }
  }
  rep.add("complement_law", law, law ? 0.0 : 1.0, wl);

  bool rev = true;
  std::optional<std::vector<double>> wrv;
  for (int a = 0; a < l.size && rev; ++a)
    for (int b = 0; b < l.size && rev; ++b)
      if (l.le(a, b) != l.le(c[b], c[a])) {
        rev = false;
        wrv = std::vector<double>{double(a), double(b)};
      }
  rep.add("order_reversal", rev, rev ? 0.0 : 1.0, wrv);
  return rep;
}

// ---------------------------------------------------------------------------
// helpers for the exhaustive searches

// visit every involutive self-map of {0..n-1}; f gets the map, returns
// false to stop the enumeration early
inline bool enumerate_involutions(int n, std::vector<int>& map,
                                  const std::function<bool(const std::vector<int>&)>& f,
                                  int from = 0) {
  int a = from;
  while (a < n && map[a] >= 0) ++a;
  if (a == n) return f(map);
  map[a] = a;  // fixed point
  if (!enumerate_involutions(n, map, f, a + 1)) {
    map[a] = -1;
    return false;
  }
  for (int b = a + 1; b < n; ++b) {
    if (map[b] >= 0) continue;
    map[a] = b;
    map[b] = a;
    bool keep = enumerate_involutions(n, map, f, a + 1);
    map[b] = -1;
    if (!keep) {
      map[a] = -1;
      return false;
    }
  }
  map[a] = -1;
  return true;
}

inline bool complement_law_holds(const FiniteOrtholattice& l, const std::vector<int>& c) {
  // a and c[a] may only share the bottom as a common lower bound
  for (int a = 0; a < l.size; ++a)
    for (int d = 0; d < l.size; ++d)
      if (d != l.bottom && l.le(d, a) && l.le(d, c[a])) return false;
  return true;
}

inline bool order_reversal_holds(const FiniteOrtholattice& l, const std::vector<int>& c) {
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      if (l.le(a, b) != l.le(c[b], c[a])) return false;
  return true;
}

inline bool orthomodular_law_holds(const FiniteOrtholattice& l, const std::vector<int>& c,
                                   std::array<int, 2>* witness = nullptr) {
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      if (!l.le(a, b)) continue;
      auto m = try_meet(l, b, c[a]);
      if (!m) return false;
      auto j = try_join(l, a, *m);
      if (!j || *j != b) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  return true;
}

// all order automorphisms, by backtracking with degree pruning
inline std::vector<std::vector<int>> lattice_automorphisms(const FiniteOrtholattice& l) {
  std::vector<std::pair<int, int>> degree(l.size);
  for (int a = 0; a < l.size; ++a) {
    int down = 0, up = 0;
    for (int b = 0; b < l.size; ++b) {
      if (l.le(b, a)) ++down;
      if (l.le(a, b)) ++up;
    }
    degree[a] = {down, up};
  }
  std::vector<std::vector<int>> autos;
  std::vector<int> perm(l.size, -1);
  std::vector<bool> used(l.size, false);
  std::function<void(int)> rec = [&](int a) {
    if (a == l.size) {
      autos.push_back(perm);
      return;
    }
    for (int img = 0; img < l.size; ++img) {
      if (used[img] || degree[a] != degree[img]) continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b)
        ok = (l.le(a, b) == l.le(img, perm[b])) && (l.le(b, a) == l.le(perm[b], img));
      if (!ok) continue;
      perm[a] = img;
      used[img] = true;
      rec(a + 1);
      used[img] = false;
      perm[a] = -1;
    }
  };
  rec(0);
  return autos;
}

// ---------------------------------------------------------------------------
// axiom IV: orthomodularity; size <= 10 lattices additionally get a census of
// all valid orthocomplementations and the count of their classes under the
// automorphism group

inline Report verify_orthomodular(const FiniteOrtholattice& l) {
  Report rep;
  rep.suite = "orthomodular";
  Report ortho = verify_orthocomplement(l);
  bool pre = ortho.all_pass();
  rep.add("orthocomplement_precondition", pre, pre ? 0.0 : 1.0);
  if (!pre) return rep;

  const std::vector<int>& c = *l.complement;
  std::array<int, 2> w{};
  bool oml = orthomodular_law_holds(l, c, &w);
  rep.add("orthomodular_law", oml, oml ? 0.0 : 1.0,
          oml ? std::nullopt : std::make_optional(std::vector<double>{double(w[0]), double(w[1])}));

  if (oml && l.size <= 10) {
    std::vector<std::vector<int>> valid;
    std::vector<int> map(l.size, -1);
    enumerate_involutions(l.size, map, [&](const std::vector<int>& m) {
      if (complement_law_holds(l, m) && order_reversal_holds(l, m) && orthomodular_law_holds(l, m))
        valid.push_back(m);
      return true;
    });
    rep.add("orthocomplement_map_count", !valid.empty(), double(valid.size()));

    std::vector<std::vector<int>> autos = lattice_automorphisms(l);
    std::vector<bool> seen(valid.size(), false);
    int classes = 0;
    for (size_t i = 0; i < valid.size(); ++i) {
      if (seen[i]) continue;
      ++classes;
      for (const auto& g : autos) {
        std::vector<int> conj(l.size);
        std::vector<int> ginv(l.size);
        for (int a = 0; a < l.size; ++a) ginv[g[a]] = a;
        for (int a = 0; a < l.size; ++a) conj[a] = g[valid[i][ginv[a]]];
        for (size_t j = 0; j < valid.size(); ++j)
          if (valid[j] == conj) seen[j] = true;
      }
    }
    rep.add("orthocomplement_unique_up_to_automorphism", classes == 1, double(classes));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// axiom V: atoms, atomisticity, covering

inline std::vector<int> atoms(const FiniteOrtholattice& l) {
  std::vector<int> out;
  for (int a = 0; a < l.size; ++a) {
    if (a == l.bottom) continue;
    bool minimal = true;
    for (int b = 0; b < l.size; ++b)
      if (b != l.bottom && b != a && l.le(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

// least upper bound of a set (all of which must lie in the lattice)
inline std::optional<int> join_of_set(const FiniteOrtholattice& l, const std::vector<int>& xs) {
  std::vector<int> upper;
  for (int c = 0; c < l.size; ++c) {
    bool ub = true;
    for (int x : xs)
      if (!l.le(x, c)) {
        ub = false;
        break;
      }
    if (ub) upper.push_back(c);
  }
  for (int c : upper) {
    bool least = true;
    for (int d : upper)
      if (!l.le(c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

inline Report verify_atomistic(const FiniteOrtholattice& l) {
  Report rep;
  rep.suite = "atomistic";
  std::vector<int> at = atoms(l);
  bool ok = true;
  std::optional<std::vector<double>> w;
  for (int x = 0; x < l.size && ok; ++x) {
    std::vector<int> below;
    for (int p : at)
      if (l.le(p, x)) below.push_back(p);
    std::optional<int> j = below.empty() ? std::optional<int>(l.bottom) : join_of_set(l, below);
    if (!j || *j != x) {
      ok = false;
      w = std::vector<double>{double(x)};
    }
  }
  rep.add("atomistic", ok, ok ? 0.0 : 1.0, w);
  return rep;
}

inline bool covers(const FiniteOrtholattice& l, int upper, int lower) {
  if (upper == lower || !l.le(lower, upper)) return false;
  for (int z = 0; z < l.size; ++z)
    if (z != lower && z != upper && l.le(lower, z) && l.le(z, upper)) return false;
  return true;
}

inline Report verify_covering(const FiniteOrtholattice& l) {
  Report rep;
  rep.suite = "covering";
  bool ok = true;
  std::optional<std::vector<double>> w;
  for (int p : atoms(l)) {
    for (int b = 0; b < l.size && ok; ++b) {
      auto m = try_meet(l, p, b);
      if (!m || *m != l.bottom) continue;
      auto j = try_join(l, b, p);
      if (!j || !covers(l, *j, b)) {
        ok = false;
        w = std::vector<double>{double(p), double(b)};
      }
    }
    if (!ok) break;
  }
  rep.add("covering_property", ok, ok ? 0.0 : 1.0, w);
  return rep;
}

// ---------------------------------------------------------------------------
// the mutually-orthogonal family b_alpha = a_alpha AND (meet of NOT a_beta)

struct SolerFamily {
  std::vector<int> elements;
  int nonzero = 0;
  Report report;
};

inline bool is_orthogonal(const FiniteOrtholattice& l, int a, int b) {
  return l.complement && l.le(a, (*l.complement)[b]);
}

inline SolerFamily soler_family(const FiniteOrtholattice& l, const std::vector<int>& generators) {
  if (!l.complement) throw std::invalid_argument("soler_family: lattice has no complement");
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (generators[i] == generators[j])
        throw std::invalid_argument("soler_family: generators must be pairwise distinct");

  SolerFamily out;
  out.report.suite = "soler-family";
  const std::vector<int>& c = *l.complement;
  for (size_t alpha = 0; alpha < generators.size(); ++alpha) {
    int acc = generators[alpha];
    for (size_t beta = 0; beta < generators.size(); ++beta) {
      if (beta == alpha) continue;
      acc = meet(l, acc, c[generators[beta]]);
    }
    out.elements.push_back(acc);
    if (acc != l.bottom) ++out.nonzero;
  }

  bool orth = true;
  std::optional<std::vector<double>> w;
  for (size_t i = 0; i < out.elements.size() && orth; ++i)
    for (size_t j = 0; j < out.elements.size() && orth; ++j)
      if (i != j && !is_orthogonal(l, out.elements[i], out.elements[j])) {
        orth = false;
        w = std::vector<double>{double(out.elements[i]), double(out.elements[j])};
      }
  out.report.add("pairwise_orthogonal", orth, orth ? 0.0 : 1.0, w);
  out.report.add("nonzero_members", true, double(out.nonzero));
  return out;
}

// smallest-index atom below x (the deterministic tie-break for extracting
// atoms from the nonzero family members); bottom has none
inline std::optional<int> extract_atom(const FiniteOrtholattice& l, int x) {
  if (x == l.bottom) return std::nullopt;
  for (int p : atoms(l))
    if (l.le(p, x)) return p;
  return std::nullopt;
}

inline std::pair<bool, std::optional<std::array<int, 3>>> is_distributive(
    const FiniteOrtholattice& l) {
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      for (int c = 0; c < l.size; ++c) {
        auto bc = try_join(l, b, c);
        auto ab = try_meet(l, a, b);
        auto ac = try_meet(l, a, c);
        if (!bc || !ab || !ac) return {false, std::array<int, 3>{a, b, c}};
        auto lhs = try_meet(l, a, *bc);
        auto rhs = try_join(l, *ab, *ac);
        if (!lhs || !rhs || *lhs != *rhs) return {false, std::array<int, 3>{a, b, c}};
      }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// brute-force search for a bounded poset plus involutive complement map that
// satisfies a AND NOT a = 0 but violates order reversal; posets are generated
// by adding elements as maximal points over down-closed subsets

inline std::optional<FiniteOrtholattice> find_nonreversing_complement(int max_size) {
  if (max_size > 8) throw std::invalid_argument("find_nonreversing_complement: max_size > 8");

  std::optional<FiniteOrtholattice> found;

  for (int total = 2; total <= max_size && !found; ++total) {
    const int mid = total - 2;
    // strict order among middle elements, generated topologically
    std::vector<std::vector<std::uint8_t>> below(mid,
                                                 std::vector<std::uint8_t>(mid, 0));
    std::function<void(int)> rec = [&](int k) {
      if (found) return;
      if (k == mid) {
        FiniteOrtholattice l;
        l.size = total;
        l.leq.assign(static_cast<size_t>(total) * total, 0);
        l.bottom = 0;
        l.top = total - 1;
        for (int i = 0; i < total; ++i) {
          l.labels.push_back(i == 0 ? "0" : i == total - 1 ? "1" : "p" + std::to_string(i));
          l.set_le(0, i);
          l.set_le(i, total - 1);
          l.set_le(i, i);
        }
        for (int a = 0; a < mid; ++a)
          for (int b = 0; b < mid; ++b)
            if (below[b][a]) l.set_le(a + 1, b + 1);  // a below b
        reflexive_transitive_closure(l);

        // involutions: bottom <-> top is forced, middles pair without fixed points
        std::vector<int> map(total, -1);
        map[0] = total - 1;
        map[total - 1] = 0;
        std::function<bool(int)> pair_rec = [&](int from) -> bool {
          int a = from;
          while (a < total && map[a] >= 0) ++a;
          if (a == total) {
            if (!complement_law_holds(l, map)) return true;
            if (!order_reversal_holds(l, map)) {
              FiniteOrtholattice witness = l;
              witness.complement = map;
              found = witness;
              return false;
            }
            return true;
          }
          for (int b = a + 1; b < total; ++b) {
            if (map[b] >= 0) continue;
            map[a] = b;
            map[b] = a;
            bool keep = pair_rec(a + 1);
            map[a] = -1;
            map[b] = -1;
            if (!keep) return false;
          }
          return true;
        };
        pair_rec(0);
        return;
      }
      // choose the down-set of element k among 0..k-1 (must be down-closed)
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool closed = true;
        for (int d = 0; d < k && closed; ++d)
          if (mask & (1u << d))
            for (int e = 0; e < k && closed; ++e)
              if (below[d][e] && !(mask & (1u << e))) closed = false;
        if (!closed) continue;
        for (int d = 0; d < k; ++d) {
          below[k][d] = (mask & (1u << d)) ? 1 : 0;
          if (below[k][d])
            for (int e = 0; e < k; ++e)
              if (below[d][e]) below[k][e] = 1;
        }
        rec(k + 1);
        for (int d = 0; d < k; ++d) below[k][d] = 0;
        if (found) return;
      }
    };
    rec(0);
  }
  return found;
}

// ---------------------------------------------------------------------------
// fixture constructors

inline FiniteOrtholattice boolean_lattice(int n) {
  const int size = 1 << n;
  FiniteOrtholattice l;
  l.size = size;
  l.leq.assign(static_cast<size_t>(size) * size, 0);
  l.bottom = 0;
  l.top = size - 1;
  std::vector<int> comp(size);
  for (int a = 0; a < size; ++a) {
    std::string lab = "{";
    for (int i = 0; i < n; ++i)
      if (a & (1 << i)) lab += (lab.size() > 1 ? "," : "") + std::to_string(i + 1);
    l.labels.push_back(lab + "}");
    comp[a] = (size - 1) ^ a;
    for (int b = 0; b < size; ++b) l.set_le(a, b, (a & b) == a);
  }
  l.complement = comp;
  return l;
}

// 0, npairs complement-paired incomparable atoms, 1 ("Chinese lantern" at 2)
inline FiniteOrtholattice mo_lattice(int npairs) {
  const int size = 2 * npairs + 2;
  FiniteOrtholattice l;
  l.size = size;
  l.leq.assign(static_cast<size_t>(size) * size, 0);
  l.bottom = 0;
  l.top = size - 1;
  std::vector<int> comp(size);
  comp[0] = size - 1;
  comp[size - 1] = 0;
  l.labels.push_back("0");
  for (int p = 0; p < npairs; ++p) {
    l.labels.push_back("a" + std::to_string(p + 1));
    l.labels.push_back("a" + std::to_string(p + 1) + "'");
    comp[2 * p + 1] = 2 * p + 2;
    comp[2 * p + 2] = 2 * p + 1;
  }
  l.labels.push_back("1");
  for (int a = 0; a < size; ++a) {
    l.set_le(a, a);
    l.set_le(0, a);
    l.set_le(a, size - 1);
  }
  l.complement = comp;
  return l;
}

// benzene ring: 0 < a < b < 1 and 0 < b' < a' < 1; passes orthocomplementation
// (including order reversal) and fails the orthomodular law at (a, b)
inline FiniteOrtholattice o6_lattice() {
  FiniteOrtholattice l = lattice_from_pairs(
      6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}}, 0, 5);
  l.labels = {"0", "a", "b", "b'", "a'", "1"};
  l.complement = std::vector<int>{5, 4, 3, 2, 1, 0};
  return l;
}

inline FiniteOrtholattice chain_lattice(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  FiniteOrtholattice l = lattice_from_pairs(n, pairs, 0, n - 1);
  for (int i = 0; i < n; ++i) l.labels[i] = "c" + std::to_string(i);
  return l;
}

// three incomparable midpoints; the canonical non-distributive modular lattice
inline FiniteOrtholattice diamond_m3() {
  FiniteOrtholattice l =
      lattice_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, 0, 4);
  l.labels = {"0", "x", "y", "z", "1"};
  return l;
}

// ---------------------------------------------------------------------------
// JSON schema:
// { "size": int, "labels": [string], "leq": [[i, j]...] (pairs; closure applied
//   on load), "complement": [int] or absent, "bottom": int, "top": int }

inline nlohmann::ordered_json lattice_to_json(const FiniteOrtholattice& l) {
  nlohmann::ordered_json j;
  j["size"] = l.size;
  j["labels"] = l.labels;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      if (covers(l, b, a)) pairs.push_back(nlohmann::ordered_json::array({a, b}));
  j["leq"] = std::move(pairs);
  if (l.complement) j["complement"] = *l.complement;
  j["bottom"] = l.bottom;
  j["top"] = l.top;
  return j;
}

inline FiniteOrtholattice lattice_from_json(const nlohmann::json& j) {
  try {
    int size = j.at("size").get<int>();
    if (size < 1) throw ParseError("lattice size must be >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("leq")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("leq entries must be [i, j] pairs");
      int a = p[0].get<int>(), b = p[1].get<int>();
      if (a < 0 || a >= size || b < 0 || b >= size) throw ParseError("leq index out of range");
      pairs.emplace_back(a, b);
    }
    FiniteOrtholattice l =
        lattice_from_pairs(size, pairs, j.at("bottom").get<int>(), j.at("top").get<int>());
    if (l.bottom < 0 || l.bottom >= size || l.top < 0 || l.top >= size)
      throw ParseError("bottom/top out of range");
    l.labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(l.labels.size()) != size) throw ParseError("labels length != size");
    if (j.contains("complement")) {
      std::vector<int> c = j.at("complement").get<std::vector<int>>();
      if (static_cast<int>(c.size()) != size) throw ParseError("complement length != size");
      for (int v : c)
        if (v < 0 || v >= size) throw ParseError("complement index out of range");
      l.complement = std::move(c);
    }
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lattice file does not match schema: ") + e.what());
  }
}

// Hasse diagram (covering edges only), bottom at the bottom
inline std::string lattice_to_dot(const FiniteOrtholattice& l) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int a = 0; a < l.size; ++a)
    out += "  n" + std::to_string(a) + " [label=\"" + l.labels[a] + "\"];\n";
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b)
      if (covers(l, b, a)) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace starlat
