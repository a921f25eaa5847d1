#pragma once

#include "kanforge/levelwise.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kanforge {

// A finite signed label sequence over [dim] x {+,-}; an n-simplex of T0.
struct Traversal {
  int dim = 0;
  std::vector<std::pair<int, bool>> entries; // (label, positive?)

  int length() const { return static_cast<int>(entries.size()); }
  bool operator==(const Traversal&) const = default;
  bool operator<(const Traversal& o) const {
    if (dim != o.dim) return dim < o.dim;
    return entries < o.entries;
  }
};

struct PointedTraversal {
  Traversal traversal;
  int position = 0; // 0..length
  bool operator==(const PointedTraversal&) const = default;
};

Traversal make_traversal(int dim, std::initializer_list<std::pair<int, bool>> es);
std::string traversal_to_string(const Traversal& t);
Traversal traversal_from_string(int dim, const std::string& s); // "1+,0-"

// Simplicial action: each edge labelled i is replaced by the labels in
// alpha^{-1}(i), decreasing for +, increasing for -.
Traversal act(const Traversal& t, const SimplicialOperator& alpha);
PointedTraversal act(const PointedTraversal& p, const SimplicialOperator& alpha);

Traversal concat(const Traversal& a, const Traversal& b);
Traversal dom_segment(const PointedTraversal& p);   // drop entries before position
Traversal codom_segment(const PointedTraversal& p); // drop entries after position
Traversal reverse(const Traversal& t);

// The geometric realization, with its pullback index: m-simplices of the
// space correspond to pairs (alpha : [m] -> [n], position in t.alpha).
class Realization {
public:
  Traversal traversal;
  MaterializedSSet mat;
  SimplicialMap to_base;    // j : space -> Delta^n
  SimplicialMap source_sec; // s : Delta^n -> space
  SimplicialMap target_sec; // t : Delta^n -> space

  const FiniteSimplicialSet& space() const { return *mat.space; }
  const FiniteSimplicialSet& base() const { return *base_; }

  SimplexRef ref_of(const SimplicialOperator& alpha, int position) const;
  // inverse of the index bijection, for any simplex (possibly degenerate)
  std::pair<SimplicialOperator, int> index_of(const SimplexRef& r) const;

  std::shared_ptr<const FiniteSimplicialSet> base_;
};

// Memoized; realizations are immutable and shared.
std::shared_ptr<const Realization> realize(const Traversal& t);

// Functorial map  realize(t.alpha) -> realize(t)  over alpha.
SimplicialMap realization_map(const Realization& sub, const Realization& whole,
                              const SimplicialOperator& alpha);
// Inclusions of a concatenation: whole = a * b.
SimplicialMap concat_incl_first(const Realization& ra, const Realization& rwhole);
SimplicialMap concat_incl_second(const Realization& rb, const Realization& rwhole);
// Reversal isomorphism  realize(reverse(t)) -> realize(t).
SimplicialMap reversal_iso(const Realization& rrev, const Realization& rt);

// Complete enumerations of T0 / T1 at level n with length <= max_len.
std::vector<Traversal> t_levels0(int n, int max_len);
std::vector<PointedTraversal> t_levels1(int n, int max_len);

std::string traversal_dot(const Traversal& t);
std::string realization_dot(const Realization& r);

} // namespace kanforge
