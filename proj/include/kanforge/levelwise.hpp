#pragma once

#include "kanforge/sset.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>

namespace kanforge {

// A presheaf presented levelwise by canonical keys with an operator action.
// Materialization recovers the normal-form presentation up to a level bound:
// a key is degenerate iff it arises as k'.s_i from the level below, and the
// Eilenberg-Zilber lemma makes the resulting (cell, epi) form unique.
struct LevelwiseSpec {
  int max_level = 0;
  std::function<std::vector<std::string>(int)> elems;
  // act(n, key, alpha) with alpha : [m] -> [n]; returns a key at level m.
  std::function<std::string(int, const std::string&, const SimplicialOperator&)> act;
  std::string name_prefix = "c";
};

struct MaterializedSSet {
  std::shared_ptr<FiniteSimplicialSet> space;
  std::vector<std::map<std::string, SimplexRef>> ref_of_key; // by level
  std::vector<std::string> key_of_cell;                      // by cell id
  int bound = 0;

  SimplexRef ref(int level, const std::string& key) const {
    return ref_of_key.at(level).at(key);
  }
};

MaterializedSSet materialize(const LevelwiseSpec& spec);

// A map out of a materialized sset described on keys.
SimplicialMap map_from_keys(
    const MaterializedSSet& A, const FiniteSimplicialSet* B,
    const std::function<SimplexRef(int, const std::string&)>& on_key);

// ---- standard objects ----------------------------------------------------

enum class StandardKind { Simplex, Boundary, Horn };

// Delta^n / boundary / horn with cells the monotone injections, named by
// their vertex lists ("02" for the edge 0->2).
FiniteSimplicialSet standard_object(StandardKind kind, int n, int k = -1);

std::shared_ptr<const FiniteSimplicialSet> standard_simplex(int n); // cached
// The cell id in Delta^n (or any full complex built by standard_object)
// corresponding to a mono, looked up by vertex-list name.
int cell_of_mono(const FiniteSimplicialSet& X, const SimplicialOperator& mono);
SimplexRef ref_of_op(const FiniteSimplicialSet& simplex_n,
                     const SimplicialOperator& alpha);
// Delta^m -> Delta^n induced by alpha : [m] -> [n].
SimplicialMap operator_map(const FiniteSimplicialSet* sm,
                           const FiniteSimplicialSet* sn,
                           const SimplicialOperator& alpha);
// Inclusion of a standard subcomplex (boundary, horn, sieve) whose cell
// names are dot-separated vertex lists into the full complex on [n].
SimplicialMap subcomplex_inclusion(const FiniteSimplicialSet* sub,
                                   const FiniteSimplicialSet* ambient);
SimplicialOperator mono_of_cell_name(const std::string& name, int ambient_dim);

// ---- finite (co)limits ----------------------------------------------------

struct PullbackSSet {
  MaterializedSSet along;                 // the pullback, materialized
  SimplicialMap proj1, proj2;             // projections
  // pair lookup: refs (a, b) at the same level -> ref in the pullback
  SimplexRef pair_ref(const SimplexRef& a, const SimplexRef& b) const;
};

// Levelwise pullback of f : A -> X and g : B -> X up to dim_bound. Throws
// if the bound truncates non-degenerate cells.
PullbackSSet pullback_ssets(const SimplicialMap& f, const SimplicialMap& g,
                            int dim_bound);

PullbackSSet product_ssets(const FiniteSimplicialSet* A,
                           const FiniteSimplicialSet* B, int dim_bound);

struct PushoutSSet {
  std::shared_ptr<FiniteSimplicialSet> space;
  SimplicialMap inj_from_f_target; // C -> P
  SimplicialMap inj_from_m_target; // B -> P
};

// Pushout of f : A -> C along a levelwise-decidable mono m : A -> B.
PushoutSSet pushout_along_mono(const SimplicialMap& m, const SimplicialMap& f);

// 1-coskeleton: n-simplices above dim 1 are compatible vertex/edge tuples,
// materialized to dim_bound.
MaterializedSSet coskeleton1(const FiniteSimplicialSet& X, int dim_bound);

SimplicialMap terminal_map(const FiniteSimplicialSet* X);

} // namespace kanforge
