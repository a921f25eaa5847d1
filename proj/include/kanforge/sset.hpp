#pragma once

#include "kanforge/simplicial_op.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kanforge {

// A simplex in Eilenberg-Zilber normal form: a non-degenerate cell acted on
// by an epi. dim of the reference = epi.dom().
struct SimplexRef {
  int cell = -1;
  SimplicialOperator epi;

  int dim() const { return epi.dom(); }
  bool is_nondegenerate() const { return is_mono(epi); } // epi mono <=> identity
  bool operator==(const SimplexRef&) const = default;
  bool operator<(const SimplexRef& o) const {
    if (cell != o.cell) return cell < o.cell;
    return epi.values < o.epi.values;
  }
};

// Finitely many non-degenerate simplices with face data in normal form.
// Simplicial identities are validated at construction.
class FiniteSimplicialSet {
public:
  struct Cell {
    std::string name;
    int dim = 0;
    std::vector<SimplexRef> faces; // dim+1 faces for dim > 0
    bool operator==(const Cell&) const = default;
  };

  static FiniteSimplicialSet build(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int id) const { return cells_.at(id); }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  int dim_of(int id) const { return cells_.at(id).dim; }
  int max_dim() const { return max_dim_; }
  const std::vector<int>& cells_of_dim(int d) const;
  std::optional<int> cell_by_name(const std::string& name) const;

  bool operator==(const FiniteSimplicialSet&) const = default;

private:
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> by_dim_;
  int max_dim_ = -1;
  void validate() const;
};

// x . alpha in normal form.
SimplexRef act(const FiniteSimplicialSet& X, const SimplexRef& x,
               const SimplicialOperator& alpha);
SimplexRef ez_normalize(const FiniteSimplicialSet& X, const SimplexRef& x,
                        const SimplicialOperator& alpha);
SimplexRef ref_of_cell(const FiniteSimplicialSet& X, int cell);
SimplexRef face_of(const FiniteSimplicialSet& X, const SimplexRef& x, int i);

// All simplices at level n, duplicate-free, in canonical order.
std::vector<SimplexRef> enumerate_level(const FiniteSimplicialSet& X, int n);

// A map given on non-degenerate simplices; naturality validated.
class SimplicialMap {
public:
  SimplicialMap() = default;
  SimplicialMap(const FiniteSimplicialSet* src, const FiniteSimplicialSet* dst,
                std::vector<SimplexRef> assign, bool validate = true);

  static SimplicialMap identity(const FiniteSimplicialSet* X);

  const FiniteSimplicialSet& source() const { return *src_; }
  const FiniteSimplicialSet& target() const { return *dst_; }
  const FiniteSimplicialSet* source_ptr() const { return src_; }
  const FiniteSimplicialSet* target_ptr() const { return dst_; }
  const std::vector<SimplexRef>& assignment() const { return assign_; }

  SimplexRef apply(const SimplexRef& x) const;
  bool is_mono_levelwise(int up_to_dim) const;

  bool operator==(const SimplicialMap& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && assign_ == o.assign_;
  }

private:
  const FiniteSimplicialSet* src_ = nullptr;
  const FiniteSimplicialSet* dst_ = nullptr;
  std::vector<SimplexRef> assign_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f); // g o f

// Backtracking enumeration of all simplicial maps A -> B. dim_bound must be
// at least the top non-degenerate dimension of A.
std::vector<SimplicialMap> enumerate_maps(const FiniteSimplicialSet& A,
                                          const FiniteSimplicialSet& B,
                                          int dim_bound);

std::optional<SimplicialMap> find_iso(const FiniteSimplicialSet& A,
                                      const FiniteSimplicialSet& B);

std::string ref_to_string(const FiniteSimplicialSet& X, const SimplexRef& r);

} // namespace kanforge
