#include "kanforge/levelwise.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace kanforge {

MaterializedSSet materialize(const LevelwiseSpec& spec) {
  MaterializedSSet out;
  out.bound = spec.max_level;
  out.ref_of_key.resize(spec.max_level + 1);
  std::vector<FiniteSimplicialSet::Cell> cells;

  for (int n = 0; n <= spec.max_level; ++n) {
    std::vector<std::string> keys = spec.elems(n);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    // Keys hit by a degeneracy from the level below are degenerate; their
    // normal form is forced by the witness (unique by Eilenberg-Zilber).
    std::map<std::string, SimplexRef> degenerate;
    if (n > 0) {
      for (const auto& [key1, ref1] : out.ref_of_key[n - 1]) {
        for (int i = 0; i <= n - 1; ++i) {
          std::string dk = spec.act(n - 1, key1, degen_op(n - 1, i));
          SimplexRef r{ref1.cell, compose_ops(degen_op(n - 1, i), ref1.epi)};
          auto [it, inserted] = degenerate.emplace(dk, r);
          if (!inserted && !(it->second == r))
            throw std::runtime_error(
                "materialize: Eilenberg-Zilber witnesses disagree at " + dk);
        }
      }
    }

    std::vector<std::string> fresh;
    for (const auto& key : keys) {
      auto it = degenerate.find(key);
      if (it != degenerate.end()) {
        out.ref_of_key[n].emplace(key, it->second);
      } else {
        fresh.push_back(key);
      }
    }
    for (const auto& key : fresh) {
      int id = static_cast<int>(cells.size());
      FiniteSimplicialSet::Cell c;
      c.name = spec.name_prefix + std::to_string(n) + "_" +
               std::to_string(out.key_of_cell.size());
      c.dim = n;
      cells.push_back(c);
      out.key_of_cell.push_back(key);
      out.ref_of_key[n].emplace(key, SimplexRef{id, identity_op(n)});
    }
    // Faces of the fresh cells point one level down.
    for (const auto& key : fresh) {
      SimplexRef self = out.ref_of_key[n].at(key);
      if (n == 0) continue;
      auto& c = cells[self.cell];
      for (int i = 0; i <= n; ++i) {
        std::string fk = spec.act(n, key, face_op(n, i));
        auto it = out.ref_of_key[n - 1].find(fk);
        if (it == out.ref_of_key[n - 1].end())
          throw std::runtime_error("materialize: face key missing at level " +
                                   std::to_string(n - 1) + ": " + fk);
        c.faces.push_back(it->second);
      }
    }
  }
  out.space = std::make_shared<FiniteSimplicialSet>(
      FiniteSimplicialSet::build(std::move(cells)));
  return out;
}

SimplicialMap map_from_keys(
    const MaterializedSSet& A, const FiniteSimplicialSet* B,
    const std::function<SimplexRef(int, const std::string&)>& on_key) {
  std::vector<SimplexRef> assign;
  for (int id = 0; id < A.space->cell_count(); ++id)
    assign.push_back(on_key(A.space->dim_of(id), A.key_of_cell[id]));
  return SimplicialMap(A.space.get(), B, std::move(assign));
}

// ---- standard objects ------------------------------------------------------

namespace {

std::string subset_name(const std::vector<int>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(vs[i]);
  }
  return s;
}

void subsets_rec(int n, int from, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, v + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

FiniteSimplicialSet standard_object(StandardKind kind, int n, int k) {
  if (n < 0) throw std::invalid_argument("standard_object: negative dimension");
  if (kind == StandardKind::Horn && (k < 0 || k > n))
    throw std::invalid_argument("standard_object: bad horn index");
  std::vector<std::vector<int>> subs;
  std::vector<int> cur;
  subsets_rec(n, 0, cur, subs);

  std::vector<std::vector<int>> keep;
  for (auto& s : subs) {
    bool full = static_cast<int>(s.size()) == n + 1;
    if (kind == StandardKind::Simplex) {
      keep.push_back(s);
    } else if (kind == StandardKind::Boundary) {
      if (!full) keep.push_back(s);
    } else {
      if (full) continue;
      if (static_cast<int>(s.size()) == n) {
        // the face opposite vertex k is excluded from the horn
        bool misses_k = std::find(s.begin(), s.end(), k) == s.end();
        if (misses_k) continue;
      }
      keep.push_back(s);
    }
  }
  std::sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::string, int> id_of;
  std::vector<FiniteSimplicialSet::Cell> cells;
  for (const auto& s : keep) {
    FiniteSimplicialSet::Cell c;
    c.name = subset_name(s);
    c.dim = static_cast<int>(s.size()) - 1;
    if (c.dim > 0)
      for (size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + i);
        c.faces.push_back(SimplexRef{id_of.at(subset_name(f)),
                                     identity_op(c.dim - 1)});
      }
    id_of.emplace(c.name, static_cast<int>(cells.size()));
    cells.push_back(std::move(c));
  }
  return FiniteSimplicialSet::build(std::move(cells));
}

std::shared_ptr<const FiniteSimplicialSet> standard_simplex(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FiniteSimplicialSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto sp = std::make_shared<const FiniteSimplicialSet>(
      standard_object(StandardKind::Simplex, n));
  cache.emplace(n, sp);
  return sp;
}

int cell_of_mono(const FiniteSimplicialSet& X, const SimplicialOperator& mono) {
  auto id = X.cell_by_name(subset_name(mono.values));
  if (!id) throw std::invalid_argument("cell_of_mono: no cell " +
                                       subset_name(mono.values));
  return *id;
}

SimplexRef ref_of_op(const FiniteSimplicialSet& simplex_n,
                     const SimplicialOperator& alpha) {
  auto [e, m] = epi_mono_factor(alpha);
  return SimplexRef{cell_of_mono(simplex_n, m), e};
}

SimplicialMap operator_map(const FiniteSimplicialSet* sm,
                           const FiniteSimplicialSet* sn,
                           const SimplicialOperator& alpha) {
  std::vector<SimplexRef> assign;
  for (int id = 0; id < sm->cell_count(); ++id) {
    // cell names in a standard object are dot-separated vertex lists
    SimplicialOperator mono;
    mono.cod = sm->max_dim();
    const std::string& nm = sm->cell(id).name;
    size_t pos = 0;
    while (pos < nm.size()) {
      size_t dot = nm.find('.', pos);
      if (dot == std::string::npos) dot = nm.size();
      mono.values.push_back(std::stoi(nm.substr(pos, dot - pos)));
      pos = dot + 1;
    }
    assign.push_back(ref_of_op(*sn, compose_ops(mono, alpha)));
  }
  return SimplicialMap(sm, sn, std::move(assign));
}

SimplicialOperator mono_of_cell_name(const std::string& name, int ambient_dim) {
  SimplicialOperator mono;
  mono.cod = ambient_dim;
  size_t pos = 0;
  while (pos < name.size()) {
    size_t dot = name.find('.', pos);
    if (dot == std::string::npos) dot = name.size();
    mono.values.push_back(std::stoi(name.substr(pos, dot - pos)));
    pos = dot + 1;
  }
  return mono;
}

SimplicialMap subcomplex_inclusion(const FiniteSimplicialSet* sub,
                                   const FiniteSimplicialSet* ambient) {
  std::vector<SimplexRef> assign;
  for (int id = 0; id < sub->cell_count(); ++id)
    assign.push_back(ref_of_op(
        *ambient, mono_of_cell_name(sub->cell(id).name, ambient->max_dim())));
  return SimplicialMap(sub, ambient, std::move(assign));
}

SimplicialMap terminal_map(const FiniteSimplicialSet* X) {
  const FiniteSimplicialSet* pt = standard_simplex(0).get();
  std::vector<SimplexRef> assign;
  for (int id = 0; id < X->cell_count(); ++id)
    assign.push_back(SimplexRef{0, terminal_op(X->dim_of(id))});
  return SimplicialMap(X, pt, std::move(assign), false);
}

// ---- pullbacks -------------------------------------------------------------

namespace {

std::string ref_key(const SimplexRef& r) {
  std::string s = std::to_string(r.cell) + ":";
  for (int v : r.epi.values) s += std::to_string(v) + ",";
  return s;
}

SimplexRef parse_ref_key(const std::string& key, const FiniteSimplicialSet& X) {
  size_t colon = key.find(':');
  SimplexRef r;
  r.cell = std::stoi(key.substr(0, colon));
  r.epi.cod = X.dim_of(r.cell);
  size_t pos = colon + 1;
  while (pos < key.size()) {
    size_t c = key.find(',', pos);
    r.epi.values.push_back(std::stoi(key.substr(pos, c - pos)));
    pos = c + 1;
  }
  return r;
}

} // namespace

SimplexRef PullbackSSet::pair_ref(const SimplexRef& a, const SimplexRef& b) const {
  std::string key = ref_key(a) + "|" + ref_key(b);
  return along.ref(a.dim(), key);
}

PullbackSSet pullback_ssets(const SimplicialMap& f, const SimplicialMap& g,
                            int dim_bound) {
  if (!(f.target() == g.target()))
    throw std::invalid_argument("pullback: no common target");
  const FiniteSimplicialSet& A = f.source();
  const FiniteSimplicialSet& B = g.source();
  int needed = std::max(0, A.max_dim()) + std::max(0, B.max_dim());
  int level = std::max(dim_bound, needed);

  LevelwiseSpec spec;
  spec.max_level = level;
  spec.name_prefix = "p";
  spec.elems = [&A, &B, &f, &g](int n) {
    std::vector<std::string> keys;
    for (const auto& a : enumerate_level(A, n))
      for (const auto& b : enumerate_level(B, n))
        if (f.apply(a) == g.apply(b)) keys.push_back(ref_key(a) + "|" + ref_key(b));
    return keys;
  };
  spec.act = [&A, &B](int, const std::string& key, const SimplicialOperator& al) {
    size_t bar = key.find('|');
    SimplexRef a = parse_ref_key(key.substr(0, bar), A);
    SimplexRef b = parse_ref_key(key.substr(bar + 1), B);
    return ref_key(act(A, a, al)) + "|" + ref_key(act(B, b, al));
  };

  PullbackSSet out;
  out.along = materialize(spec);
  for (int id = 0; id < out.along.space->cell_count(); ++id) {
    int d = out.along.space->dim_of(id);
    if (d > dim_bound)
      throw std::runtime_error(
          "pullback: non-degenerate cell above requested bound at dim " +
          std::to_string(d));
  }
  auto on1 = [&](int, const std::string& key) {
    return parse_ref_key(key.substr(0, key.find('|')), A);
  };
  auto on2 = [&](int, const std::string& key) {
    return parse_ref_key(key.substr(key.find('|') + 1), B);
  };
  out.proj1 = map_from_keys(out.along, &A, on1);
  out.proj2 = map_from_keys(out.along, &B, on2);
  return out;
}

PullbackSSet product_ssets(const FiniteSimplicialSet* A,
                           const FiniteSimplicialSet* B, int dim_bound) {
  // Products are pullbacks over the point; the terminal maps share the cached
  // Delta^0, so the common-target requirement holds on the nose.
  return pullback_ssets(terminal_map(A), terminal_map(B), dim_bound);
}

// ---- pushout along a mono --------------------------------------------------

PushoutSSet pushout_along_mono(const SimplicialMap& m, const SimplicialMap& f) {
  if (!(m.source() == f.source()))
    throw std::invalid_argument("pushout: sources differ");
  const FiniteSimplicialSet& A = m.source();
  const FiniteSimplicialSet& B = m.target();
  const FiniteSimplicialSet& C = f.target();
  if (!m.is_mono_levelwise(std::max(A.max_dim(), B.max_dim()) + 1))
    throw std::invalid_argument("pushout: m is not a levelwise decidable mono");

  // Image cells of m (nondegenerate cells of B hit by nondegenerate cells of
  // A) and their witnesses.
  std::map<int, int> witness; // B cell -> A cell
  for (int a = 0; a < A.cell_count(); ++a) {
    SimplexRef im = m.apply(ref_of_cell(A, a));
    if (!is_mono(im.epi))
      throw std::runtime_error("pushout: mono image degenerate");
    witness.emplace(im.cell, a);
  }

  std::vector<int> b_fresh; // B cells not in the image, in order
  std::map<int, int> p_of_b;
  for (int b = 0; b < B.cell_count(); ++b)
    if (!witness.count(b)) b_fresh.push_back(b);

  // P cells: all of C first, then the fresh B cells. Order by dimension so
  // faces always point at already-created cells.
  struct Origin { bool from_c; int id; };
  std::vector<Origin> origins;
  for (int c = 0; c < C.cell_count(); ++c) origins.push_back({true, c});
  for (int b : b_fresh) origins.push_back({false, b});
  std::stable_sort(origins.begin(), origins.end(), [&](const Origin& x, const Origin& y) {
    int dx = x.from_c ? C.dim_of(x.id) : B.dim_of(x.id);
    int dy = y.from_c ? C.dim_of(y.id) : B.dim_of(y.id);
    return dx < dy;
  });
  std::map<int, int> p_of_c;
  for (size_t k = 0; k < origins.size(); ++k) {
    if (origins[k].from_c) p_of_c[origins[k].id] = static_cast<int>(k);
    else p_of_b[origins[k].id] = static_cast<int>(k);
  }

  // Translate a B-ref to a P-ref (collapsing the image through f).
  std::function<SimplexRef(const SimplexRef&)> b_to_p = [&](const SimplexRef& r) {
    auto w = witness.find(r.cell);
    if (w == witness.end())
      return SimplexRef{p_of_b.at(r.cell), r.epi};
    SimplexRef c = f.apply(ref_of_cell(A, w->second)); // in C
    SimplexRef down{p_of_c.at(c.cell), compose_ops(r.epi, c.epi)};
    return down;
  };
  auto c_to_p = [&](const SimplexRef& r) {
    return SimplexRef{p_of_c.at(r.cell), r.epi};
  };

  std::vector<FiniteSimplicialSet::Cell> cells(origins.size());
  for (size_t k = 0; k < origins.size(); ++k) {
    const Origin& o = origins[k];
    FiniteSimplicialSet::Cell cell;
    if (o.from_c) {
      cell.name = "C_" + C.cell(o.id).name;
      cell.dim = C.dim_of(o.id);
      for (const auto& fc : C.cell(o.id).faces) cell.faces.push_back(c_to_p(fc));
    } else {
      cell.name = "B_" + B.cell(o.id).name;
      cell.dim = B.dim_of(o.id);
      for (const auto& fc : B.cell(o.id).faces) cell.faces.push_back(b_to_p(fc));
    }
    cells[k] = std::move(cell);
  }

  PushoutSSet out;
  out.space = std::make_shared<FiniteSimplicialSet>(
      FiniteSimplicialSet::build(std::move(cells)));
  {
    std::vector<SimplexRef> assign;
    for (int c = 0; c < C.cell_count(); ++c)
      assign.push_back(SimplexRef{p_of_c.at(c), identity_op(C.dim_of(c))});
    out.inj_from_f_target = SimplicialMap(&C, out.space.get(), std::move(assign));
  }
  {
    std::vector<SimplexRef> assign;
    for (int b = 0; b < B.cell_count(); ++b)
      assign.push_back(b_to_p(ref_of_cell(B, b)));
    out.inj_from_m_target = SimplicialMap(&B, out.space.get(), std::move(assign));
  }
  return out;
}

// ---- 1-coskeleton ----------------------------------------------------------

MaterializedSSet coskeleton1(const FiniteSimplicialSet& X, int dim_bound) {
  // Keys at level <= 1 are X's own simplices; above that, compatible tuples
  // of vertices v_i and edges e_ij with d_1 e_ij = v_i, d_0 e_ij = v_j.
  auto xref_key = [](const SimplexRef& r) { return ref_key(r); };

  auto tuple_key = [](const std::vector<SimplexRef>& vs,
                      const std::map<std::pair<int, int>, SimplexRef>& es) {
    std::string s = "T";
    for (const auto& v : vs) s += "|" + ref_key(v);
    for (const auto& [ij, e] : es) s += "|" + ref_key(e);
    return s;
  };

  LevelwiseSpec spec;
  spec.max_level = dim_bound;
  spec.name_prefix = "k";

  auto vertices = enumerate_level(X, 0);
  auto edges = enumerate_level(X, 1);

  struct Parsed {
    std::vector<SimplexRef> vs;
    std::map<std::pair<int, int>, SimplexRef> es;
  };
  auto parse = [&X](const std::string& key, int n) {
    Parsed p;
    std::vector<std::string> parts;
    size_t pos = 2; // skip "T|"
    while (pos <= key.size()) {
      size_t bar = key.find('|', pos);
      if (bar == std::string::npos) bar = key.size();
      parts.push_back(key.substr(pos, bar - pos));
      pos = bar + 1;
    }
    for (int i = 0; i <= n; ++i) p.vs.push_back(parse_ref_key(parts[i], X));
    size_t idx = n + 1;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        p.es[{i, j}] = parse_ref_key(parts[idx++], X);
    return p;
  };

  spec.elems = [&, vertices, edges](int n) {
    std::vector<std::string> keys;
    if (n <= 1) {
      for (const auto& r : enumerate_level(X, n)) keys.push_back(ref_key(r));
      return keys;
    }
    // enumerate tuples: choose vertices, then edges per pair
    std::vector<SimplexRef> vs(n + 1);
    std::map<std::pair<int, int>, SimplexRef> es;
    std::function<void(int, int)> pick_edge;
    std::function<void(int)> pick_vertex = [&](int i) {
      if (i > n) { pick_edge(0, 1); return; }
      for (const auto& v : vertices) { vs[i] = v; pick_vertex(i + 1); }
    };
    pick_edge = [&](int i, int j) {
      if (i > n - 1) { keys.push_back(tuple_key(vs, es)); return; }
      int ni = j == n ? i + 1 : i;
      int nj = j == n ? i + 2 : j + 1;
      for (const auto& e : edges) {
        if (act(X, e, face_op(1, 1)) == vs[i] && act(X, e, face_op(1, 0)) == vs[j]) {
          es[{i, j}] = e;
          pick_edge(ni, nj);
        }
      }
      es.erase({i, j});
    };
    pick_vertex(0);
    return keys;
  };

  spec.act = [&, parse](int n, const std::string& key,
                        const SimplicialOperator& al) -> std::string {
    int mdim = al.dom();
    if (n <= 1) {
      SimplexRef r = parse_ref_key(key, X);
      if (mdim <= 1) return ref_key(act(X, r, al));
      // degeneracies of an edge into dim >= 2: expand to a tuple
      Parsed p;
      for (int a = 0; a <= mdim; ++a) {
        SimplicialOperator va; // vertex a of [mdim] -> value in [n]
        va.cod = n;
        va.values = {al.values[a]};
        p.vs.push_back(act(X, r, va));
      }
      for (int a = 0; a <= mdim; ++a)
        for (int b = a + 1; b <= mdim; ++b) {
          SimplicialOperator eab;
          eab.cod = n;
          eab.values = {al.values[a], al.values[b]};
          p.es[{a, b}] = act(X, r, eab);
        }
      return tuple_key(p.vs, p.es);
    }
    Parsed p = parse(key, n);
    if (mdim == 0) return ref_key(p.vs[al.values[0]]);
    if (mdim == 1) {
      int a = al.values[0], b = al.values[1];
      if (a == b) return ref_key(act(X, p.vs[a], degen_op(0, 0)));
      return ref_key(p.es.at({a, b}));
    }
    Parsed q;
    for (int a = 0; a <= mdim; ++a) q.vs.push_back(p.vs[al.values[a]]);
    for (int a = 0; a <= mdim; ++a)
      for (int b = a + 1; b <= mdim; ++b) {
        int ia = al.values[a], ib = al.values[b];
        if (ia == ib) q.es[{a, b}] = act(X, p.vs[ia], degen_op(0, 0));
        else q.es[{a, b}] = p.es.at({ia, ib});
      }
    return tuple_key(q.vs, q.es);
  };

  return materialize(spec);
}

} // namespace kanforge
