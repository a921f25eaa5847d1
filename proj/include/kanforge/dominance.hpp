#pragma once

#include "kanforge/json_io.hpp"
#include "kanforge/levelwise.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace kanforge {

// A cofibrant sieve on Delta^n: a family of nonempty subsets of {0..n}
// closed under nonempty subsets.
struct CofibrantSieve {
  int dim = 0;
  std::set<std::vector<int>> members; // each sorted ascending, nonempty

  bool contains(const std::vector<int>& subset) const {
    return members.count(subset) > 0;
  }
  // membership of an arbitrary operator: alpha in S iff image(alpha) in S
  bool contains_op(const SimplicialOperator& alpha) const;
  bool operator==(const CofibrantSieve&) const = default;
  bool operator<(const CofibrantSieve& o) const {
    if (dim != o.dim) return dim < o.dim;
    return members < o.members;
  }
};

bool is_cofibrant(const CofibrantSieve& s); // downward closure check
CofibrantSieve max_sieve(int n);
CofibrantSieve empty_sieve(int n);
CofibrantSieve boundary_sieve(int n);
CofibrantSieve horn_sieve(int n, int k);
CofibrantSieve meet(const CofibrantSieve& a, const CofibrantSieve& b);
CofibrantSieve join(const CofibrantSieve& a, const CofibrantSieve& b);
CofibrantSieve implication(const CofibrantSieve& a, const CofibrantSieve& b);
CofibrantSieve act(const CofibrantSieve& s, const SimplicialOperator& alpha);
std::vector<CofibrantSieve> enumerate_sieves(int n);
std::string sieve_to_string(const CofibrantSieve& s);

// The subcomplex of Delta^n spanned by a sieve, with its inclusion.
struct SieveComplex {
  std::shared_ptr<FiniteSimplicialSet> space;
  SimplicialMap inclusion; // into standard_simplex(n)
};
SieveComplex sieve_subcomplex(const CofibrantSieve& s);

// ---- the classifier --------------------------------------------------------

// A levelwise map A -> Sigma, stored to a bound.
struct ClassifyingMap {
  const FiniteSimplicialSet* domain = nullptr;
  int bound = 0;
  std::map<std::string, CofibrantSieve> value; // keyed by canonical ref key

  const CofibrantSieve& at(const SimplexRef& a) const;
};

std::string simplex_key(const SimplexRef& r);

// classify a levelwise decidable mono m : B -> A; verified levelwise.
ClassifyingMap classify_mono(const SimplicialMap& m, int dim_bound);

// Sigma-partial-map classifier Mf (levelwise to dim_bound) with unit Lf
// and counit Rf; mu_f and delta_f act on decoded elements.
struct PartialElement {
  SimplexRef base;      // a in A
  CofibrantSieve sieve; // sigma
  std::map<std::vector<int>, SimplexRef> partial; // member -> element of B
};

struct PartialMapClassifier {
  const FiniteSimplicialSet* A = nullptr;
  const FiniteSimplicialSet* B = nullptr;
  int bound = 0;
  MaterializedSSet Mf;
  SimplicialMap Lf; // B -> Mf
  SimplicialMap Rf; // Mf -> A

  SimplexRef encode(int level, const PartialElement& el) const;
  PartialElement decode(const SimplexRef& r) const; // identity-epi refs
};
PartialMapClassifier partial_map_classifier(const SimplicialMap& f, int dim_bound);

// ---- effective trivial fibration structures ---------------------------------

// A boundary lifting problem for p : Y -> X.
struct BoundaryProblem {
  int n = 0;
  std::vector<SimplexRef> y; // n+1 faces in Y_{n-1}; empty when n = 0
  SimplexRef x;              // in X_n
};
std::string boundary_problem_key(const BoundaryProblem& pr);
bool boundary_problem_valid(const SimplicialMap& p, const BoundaryProblem& pr);
std::vector<SimplexRef> boundary_problem_solutions(const SimplicialMap& p,
                                                   const BoundaryProblem& pr);

class BoundaryLiftTable {
public:
  BoundaryLiftTable() = default;
  BoundaryLiftTable(const SimplicialMap* p, int bound)
      : p_(p), bound_(bound) {}

  const SimplicialMap& map() const { return *p_; }
  int bound() const { return bound_; }

  void store(const BoundaryProblem& pr, const SimplexRef& filler);
  std::optional<SimplexRef> lookup(const BoundaryProblem& pr) const;
  const std::map<std::string, std::pair<BoundaryProblem, SimplexRef>>& entries() const {
    return entries_;
  }

  // fillers above the stored bound are produced on demand
  std::function<std::optional<SimplexRef>(const BoundaryProblem&)> generator;

private:
  const SimplicialMap* p_ = nullptr;
  int bound_ = 0;
  std::map<std::string, std::pair<BoundaryProblem, SimplexRef>> entries_;
};

struct CheckFailure {
  std::string what;
  std::string witness;
};

struct CheckReport {
  std::string suite;
  std::map<std::string, int> bounds;
  long instances = 0;
  bool passed = true;
  std::vector<CheckFailure> failures;

  void fail(const std::string& what, const std::string& witness) {
    passed = false;
    if (failures.size() < 8) failures.push_back({what, witness});
  }
};

std::vector<BoundaryProblem> enumerate_boundary_problems(const SimplicialMap& p,
                                                         int n);

// Checks solution property, completeness and the degeneracy condition:
// the filler of the s_i-degenerated problem must be f.s_i.
CheckReport verify_trivfib(const SimplicialMap& p, const BoundaryLiftTable& table);

struct TrivFibBuildResult {
  std::optional<BoundaryLiftTable> table;
  std::optional<BoundaryProblem> unfillable; // witness when not a trivial fibration
};
TrivFibBuildResult build_trivfib_classical(const SimplicialMap& p, int D);

// A lifting problem over an inclusion of sieves S <= T on Delta^n.
struct SieveProblem {
  CofibrantSieve S, T;
  SimplicialMap u; // sieve_subcomplex(S) -> Y
  SimplicialMap x; // sieve_subcomplex(T) -> X
};

// Fills T by one-simplex steps through boundary fillers; the result is
// independent of the decomposition order.
SimplicialMap extend_to_sieve(const SimplicialMap& p,
                              const BoundaryLiftTable& table,
                              const SieveProblem& problem,
                              const SieveComplex& Tcx,
                              const std::vector<std::vector<int>>* order = nullptr);

// trivfib.v1
nlohmann::json trivfib_to_json(const BoundaryLiftTable& t);
BoundaryLiftTable trivfib_from_json(const SimplicialMap* p, const nlohmann::json& j);

} // namespace kanforge
