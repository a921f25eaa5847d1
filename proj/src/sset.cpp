#include "kanforge/sset.hpp"

#include <algorithm>

namespace kanforge {

FiniteSimplicialSet FiniteSimplicialSet::build(std::vector<Cell> cells) {
  FiniteSimplicialSet X;
  X.cells_ = std::move(cells);
  for (int id = 0; id < X.cell_count(); ++id) {
    int d = X.cells_[id].dim;
    if (d > X.max_dim_) X.max_dim_ = d;
  }
  X.by_dim_.assign(X.max_dim_ + 1, {});
  for (int id = 0; id < X.cell_count(); ++id)
    X.by_dim_[X.cells_[id].dim].push_back(id);
  X.validate();
  return X;
}

const std::vector<int>& FiniteSimplicialSet::cells_of_dim(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d > max_dim_) return empty;
  return by_dim_[d];
}

std::optional<int> FiniteSimplicialSet::cell_by_name(const std::string& name) const {
  for (int id = 0; id < cell_count(); ++id)
    if (cells_[id].name == name) return id;
  return std::nullopt;
}

void FiniteSimplicialSet::validate() const {
  for (int id = 0; id < cell_count(); ++id) {
    const Cell& c = cells_[id];
    if (c.dim > 0 && static_cast<int>(c.faces.size()) != c.dim + 1)
      throw std::invalid_argument("sset: cell " + c.name + " has wrong face count");
    for (const SimplexRef& f : c.faces) {
      if (f.cell < 0 || f.cell >= cell_count())
        throw std::invalid_argument("sset: dangling face in " + c.name);
      if (!is_epi(f.epi) || f.epi.dom() != c.dim - 1 ||
          f.epi.cod != cells_[f.cell].dim)
        throw std::invalid_argument("sset: face of " + c.name + " not in normal form");
    }
  }
  // Simplicial identities on normalized composites: x.d_j.d_i = x.d_i.d_{j-1}
  // for i < j. Malformed inputs are rejected, never repaired.
  for (int id = 0; id < cell_count(); ++id) {
    const Cell& c = cells_[id];
    if (c.dim < 2) continue;
    SimplexRef x{id, identity_op(c.dim)};
    for (int j = 1; j <= c.dim; ++j)
      for (int i = 0; i < j; ++i) {
        SimplexRef a = act(*this, face_of(*this, x, j), face_op(c.dim - 1, i));
        SimplexRef b = act(*this, face_of(*this, x, i), face_op(c.dim - 1, j - 1));
        if (!(a == b))
          throw std::invalid_argument("sset: simplicial identity fails at " + c.name);
      }
  }
}

SimplexRef ref_of_cell(const FiniteSimplicialSet& X, int cell) {
  return SimplexRef{cell, identity_op(X.dim_of(cell))};
}

SimplexRef face_of(const FiniteSimplicialSet& X, const SimplexRef& x, int i) {
  return act(X, x, face_op(x.dim(), i));
}

namespace {

// Resolve x . mono, x non-degenerate presented by its cell id.
SimplexRef resolve_mono(const FiniteSimplicialSet& X, int cell,
                        const SimplicialOperator& mono) {
  if (static_cast<int>(mono.values.size()) == mono.cod + 1)
    return SimplexRef{cell, identity_op(mono.cod)}; // identity
  // Pick the largest missing value i; mono = d_i o mono'.
  int missing = -1;
  {
    std::vector<bool> hit(mono.cod + 1, false);
    for (int v : mono.values) hit[v] = true;
    for (int v = mono.cod; v >= 0; --v)
      if (!hit[v]) { missing = v; break; }
  }
  SimplicialOperator rest;          // mono' into [cod-1]
  rest.cod = mono.cod - 1;
  for (int v : mono.values) rest.values.push_back(v < missing ? v : v - 1);
  const SimplexRef& f = X.cell(cell).faces.at(missing);
  // x.d_missing = f.cell . f.epi ; then continue with rest through f.epi.
  return act(X, SimplexRef{f.cell, f.epi}, rest);
}

} // namespace

SimplexRef act(const FiniteSimplicialSet& X, const SimplexRef& x,
               const SimplicialOperator& alpha) {
  if (alpha.cod != x.dim())
    throw std::invalid_argument("act: dimension mismatch");
  SimplicialOperator total = compose_ops(alpha, x.epi);
  auto [e, m] = epi_mono_factor(total);
  SimplexRef down = resolve_mono(X, x.cell, m);
  // down = (cell', epi'); result = cell' . (epi' o e)
  return SimplexRef{down.cell, compose_ops(e, down.epi)};
}

SimplexRef ez_normalize(const FiniteSimplicialSet& X, const SimplexRef& x,
                        const SimplicialOperator& alpha) {
  return act(X, x, alpha);
}

std::vector<SimplexRef> enumerate_level(const FiniteSimplicialSet& X, int n) {
  std::vector<SimplexRef> out;
  for (int id = 0; id < X.cell_count(); ++id) {
    int k = X.dim_of(id);
    if (k > n) continue;
    for (const auto& e : enumerate_ops(n, k))
      if (is_epi(e)) out.push_back(SimplexRef{id, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialMap::SimplicialMap(const FiniteSimplicialSet* src,
                             const FiniteSimplicialSet* dst,
                             std::vector<SimplexRef> assign, bool validate)
    : src_(src), dst_(dst), assign_(std::move(assign)) {
  if (static_cast<int>(assign_.size()) != src_->cell_count())
    throw std::invalid_argument("map: assignment size mismatch");
  for (int id = 0; id < src_->cell_count(); ++id)
    if (assign_[id].dim() != src_->dim_of(id))
      throw std::invalid_argument("map: assignment dim mismatch at " +
                                  src_->cell(id).name);
  if (!validate) return;
  for (int id = 0; id < src_->cell_count(); ++id) {
    const auto& c = src_->cell(id);
    for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
      SimplexRef lhs = act(*dst_, assign_[id], face_op(c.dim, i));
      SimplexRef rhs = apply(c.faces[i]);
      if (!(lhs == rhs))
        throw std::invalid_argument("map: not natural at " + c.name);
    }
  }
}

SimplicialMap SimplicialMap::identity(const FiniteSimplicialSet* X) {
  std::vector<SimplexRef> a;
  for (int id = 0; id < X->cell_count(); ++id) a.push_back(ref_of_cell(*X, id));
  return SimplicialMap(X, X, std::move(a), false);
}

SimplexRef SimplicialMap::apply(const SimplexRef& x) const {
  return act(*dst_, assign_[x.cell], x.epi);
}

bool SimplicialMap::is_mono_levelwise(int up_to_dim) const {
  for (int n = 0; n <= up_to_dim; ++n) {
    auto lvl = enumerate_level(*src_, n);
    std::vector<SimplexRef> img;
    for (const auto& x : lvl) img.push_back(apply(x));
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source()))
    throw std::invalid_argument("compose: target/source mismatch");
  std::vector<SimplexRef> a;
  for (int id = 0; id < f.source().cell_count(); ++id)
    a.push_back(g.apply(f.assignment()[id]));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(a), false);
}

std::vector<SimplicialMap> enumerate_maps(const FiniteSimplicialSet& A,
                                          const FiniteSimplicialSet& B,
                                          int dim_bound) {
  if (A.max_dim() > dim_bound)
    throw std::invalid_argument("enumerate_maps: bound below source dimension");
  // Assign cells in order of dimension; faces constrain each choice.
  std::vector<int> order;
  for (int d = 0; d <= A.max_dim(); ++d)
    for (int id : A.cells_of_dim(d)) order.push_back(id);
  std::vector<SimplexRef> assign(A.cell_count());
  std::vector<SimplicialMap> out;
  std::vector<std::vector<SimplexRef>> level_cache(A.max_dim() + 1);
  for (int d = 0; d <= A.max_dim(); ++d) level_cache[d] = enumerate_level(B, d);

  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == order.size()) {
      out.emplace_back(&A, &B, assign, false);
      return;
    }
    int id = order[k];
    const auto& c = A.cell(id);
    for (const auto& cand : level_cache[c.dim]) {
      bool ok = true;
      for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
        SimplexRef want = act(B, assign[c.faces[i].cell], c.faces[i].epi);
        SimplexRef got = act(B, cand, face_op(c.dim, i));
        if (!(want == got)) { ok = false; break; }
      }
      if (!ok) continue;
      assign[id] = cand;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<SimplicialMap> find_iso(const FiniteSimplicialSet& A,
                                      const FiniteSimplicialSet& B) {
  if (A.max_dim() != B.max_dim()) return std::nullopt;
  for (int d = 0; d <= A.max_dim(); ++d)
    if (A.cells_of_dim(d).size() != B.cells_of_dim(d).size()) return std::nullopt;
  // Backtracking over non-degenerate cells, dimension by dimension, images
  // forced to be non-degenerate of the same dimension.
  std::vector<int> order;
  for (int d = 0; d <= A.max_dim(); ++d)
    for (int id : A.cells_of_dim(d)) order.push_back(id);
  std::vector<SimplexRef> assign(A.cell_count());
  std::vector<bool> used(B.cell_count(), false);
  std::optional<SimplicialMap> found;

  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == order.size()) {
      found = SimplicialMap(&A, &B, assign, false);
      return true;
    }
    int id = order[k];
    const auto& c = A.cell(id);
    for (int bid : B.cells_of_dim(c.dim)) {
      if (used[bid]) continue;
      SimplexRef cand = ref_of_cell(B, bid);
      bool ok = true;
      for (int i = 0; i <= c.dim && c.dim > 0; ++i) {
        SimplexRef want = act(B, assign[c.faces[i].cell], c.faces[i].epi);
        SimplexRef got = act(B, cand, face_op(c.dim, i));
        if (!(want == got)) { ok = false; break; }
      }
      if (!ok) continue;
      used[bid] = true;
      assign[id] = cand;
      if (self(self, k + 1)) return true;
      used[bid] = false;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

std::string ref_to_string(const FiniteSimplicialSet& X, const SimplexRef& r) {
  return X.cell(r.cell).name + "." + op_to_string(r.epi);
}

} // namespace kanforge
