#pragma once

#include "kanforge/traversal.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace kanforge {

// A simplex of some finite simplicial set, carried with its home.
struct Pt {
  const FiniteSimplicialSet* space = nullptr;
  SimplexRef ref;
  bool operator==(const Pt&) const = default;
};

inline Pt act_value(const Pt& v, const SimplicialOperator& alpha) {
  return Pt{v.space, act(*v.space, v.ref, alpha)};
}
inline int dim_of_value(const Pt& v) { return v.ref.dim(); }
std::string value_to_string(const Pt& v);

// An n-simplex of M^k X: a traversal together with a value of level k-1 for
// every simplex of its realization (stored on non-degenerate cells).
template <class V>
struct PathOf {
  Traversal tr;
  std::shared_ptr<const Realization> real;
  std::vector<V> vals; // indexed by non-degenerate cell id of real->space()

  V at(const SimplicialOperator& alpha, int position) const {
    SimplexRef r = real->ref_of(alpha, position);
    return act_value(vals[r.cell], r.epi);
  }
  bool operator==(const PathOf& o) const { return tr == o.tr && vals == o.vals; }
};

using MoorePath = PathOf<Pt>;
using MoorePath2 = PathOf<MoorePath>;
using MoorePath3 = PathOf<MoorePath2>;

template <class V>
PathOf<V> act_value(const PathOf<V>& p, const SimplicialOperator& alpha) {
  PathOf<V> q;
  q.tr = act(p.tr, alpha);
  q.real = realize(q.tr);
  for (int id = 0; id < q.real->space().cell_count(); ++id) {
    auto [beta, pos] = q.real->index_of(ref_of_cell(q.real->space(), id));
    q.vals.push_back(p.at(compose_ops(beta, alpha), pos));
  }
  return q;
}
template <class V>
int dim_of_value(const PathOf<V>& p) { return p.tr.dim; }
template <class V>
std::string value_to_string(const PathOf<V>& p) {
  std::string s = "(" + traversal_to_string(p.tr) + ";";
  for (size_t i = 0; i < p.vals.size(); ++i) {
    if (i) s += ",";
    s += value_to_string(p.vals[i]);
  }
  return s + ")";
}

// Rebuild a path from a value assignment on the cells of realize(tr).
template <class V>
PathOf<V> path_make(const Traversal& tr, std::function<V(const SimplicialOperator&, int)> f) {
  PathOf<V> p;
  p.tr = tr;
  p.real = realize(tr);
  for (int id = 0; id < p.real->space().cell_count(); ++id) {
    auto [alpha, pos] = p.real->index_of(ref_of_cell(p.real->space(), id));
    p.vals.push_back(f(alpha, pos));
  }
  return p;
}

// r : X -> MX, the path with empty traversal.
template <class V>
PathOf<V> path_r(const V& v) {
  Traversal tr;
  tr.dim = dim_of_value(v);
  return path_make<V>(tr, [&](const SimplicialOperator& a, int) {
    return act_value(v, a);
  });
}

template <class V>
V path_s(const PathOf<V>& p) { return p.at(identity_op(p.tr.dim), 0); }
template <class V>
V path_t(const PathOf<V>& p) { return p.at(identity_op(p.tr.dim), p.tr.length()); }

// mu : concatenation, p before q; requires t(p) = s(q).
template <class V>
PathOf<V> path_mu(const PathOf<V>& p, const PathOf<V>& q) {
  if (!(path_t(p) == path_s(q)))
    throw std::invalid_argument("path_mu: endpoint mismatch");
  Traversal tr = concat(p.tr, q.tr);
  return path_make<V>(tr, [&](const SimplicialOperator& a, int pos) {
    int cut = act(p.tr, a).length();
    return pos <= cut ? p.at(a, pos) : q.at(a, pos - cut);
  });
}

// Gamma : M -> MM, contraction onto the endpoint via final segments.
template <class V>
PathOf<PathOf<V>> path_gamma(const PathOf<V>& p) {
  return path_make<PathOf<V>>(p.tr, [&](const SimplicialOperator& a, int pos) {
    Traversal restricted = act(p.tr, a);
    Traversal suffix = dom_segment({restricted, pos});
    return path_make<V>(suffix, [&](const SimplicialOperator& b, int q) {
      int shift = act(codom_segment({restricted, pos}), b).length();
      return p.at(compose_ops(b, a), q + shift);
    });
  });
}

// Gamma* : dual contraction via initial segments.
template <class V>
PathOf<PathOf<V>> path_gamma_star(const PathOf<V>& p) {
  return path_make<PathOf<V>>(p.tr, [&](const SimplicialOperator& a, int pos) {
    Traversal restricted = act(p.tr, a);
    Traversal prefix = codom_segment({restricted, pos});
    return path_make<V>(prefix, [&](const SimplicialOperator& b, int q) {
      return p.at(compose_ops(b, a), q);
    });
  });
}

// tau : reverses order and orientation.
template <class V>
PathOf<V> path_twist(const PathOf<V>& p) {
  Traversal tr = reverse(p.tr);
  return path_make<V>(tr, [&](const SimplicialOperator& a, int pos) {
    return p.at(a, act(p.tr, a).length() - pos);
  });
}

// strength alpha : (x, theta) -> the constant path of that shape.
template <class V>
PathOf<V> path_strength(const V& v, const Traversal& tr) {
  if (dim_of_value(v) != tr.dim)
    throw std::invalid_argument("path_strength: dimension mismatch");
  return path_make<V>(tr, [&](const SimplicialOperator& a, int) {
    return act_value(v, a);
  });
}

template <class V, class W>
PathOf<W> path_map(const PathOf<V>& p, const std::function<W(const V&)>& f) {
  PathOf<W> q;
  q.tr = p.tr;
  q.real = p.real;
  for (const V& v : p.vals) q.vals.push_back(f(v));
  return q;
}

// nu composed with a binary operation: components are combined pointwise.
template <class V>
PathOf<PathOf<V>> path_zip(
    const PathOf<PathOf<V>>& a, const PathOf<PathOf<V>>& b,
    const std::function<PathOf<V>(const PathOf<V>&, const PathOf<V>&)>& f) {
  if (!(a.tr == b.tr)) throw std::invalid_argument("path_zip: traversal mismatch");
  PathOf<PathOf<V>> out;
  out.tr = a.tr;
  out.real = a.real;
  for (size_t i = 0; i < a.vals.size(); ++i)
    out.vals.push_back(f(a.vals[i], b.vals[i]));
  return out;
}

// ---- spec-facing Moore path API --------------------------------------------

MoorePath moore_from_map(const Traversal& tr, const SimplicialMap& map);
SimplicialMap moore_to_map(const MoorePath& p);

MoorePath unit_r(const FiniteSimplicialSet& X, const SimplexRef& x, int level_dim);
SimplexRef src_s(const MoorePath& p);
SimplexRef tgt_t(const MoorePath& p);
MoorePath mu(const MoorePath& p, const MoorePath& q);
MoorePath2 gamma(const MoorePath& p);
MoorePath2 gamma_star(const MoorePath& p);
MoorePath twist(const MoorePath& p);
MoorePath strength_alpha(const FiniteSimplicialSet& X, const SimplexRef& x,
                         const Traversal& tr);
// pairing through a materialized pullback
MoorePath pair_nu(const MoorePath& p, const MoorePath& q, const PullbackSSet& pb);

enum class MooreVariant { Both, PositiveOnly, NegativeOnly };

struct LawResult {
  std::string law;
  long instances = 0;
  bool passed = true;
  std::string counterexample;
};

struct AxiomReport {
  std::string suite;
  std::map<std::string, int> bounds;
  std::vector<LawResult> laws;
  bool passed = true;
};

// Exhaustively checks the two-sided/symmetric Moore structure axioms on
// Moore paths over X with dim <= dim_max and traversal length <= len_max
// (concatenations bounded by combined length).
AxiomReport axiom_suite(const FiniteSimplicialSet& X, int dim_max, int len_max,
                        MooreVariant variant);

std::vector<MoorePath> enumerate_moore_paths(const FiniteSimplicialSet& X,
                                             int dim, int len_max,
                                             MooreVariant variant);

} // namespace kanforge
