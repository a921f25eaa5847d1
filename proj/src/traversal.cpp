#include "kanforge/traversal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace kanforge {

Traversal make_traversal(int dim,
                         std::initializer_list<std::pair<int, bool>> es) {
  Traversal t;
  t.dim = dim;
  t.entries = es;
  for (auto& [l, s] : t.entries)
    if (l < 0 || l > dim) throw std::invalid_argument("traversal: bad label");
  return t;
}

std::string traversal_to_string(const Traversal& t) {
  if (t.entries.empty()) return "<>";
  std::string s;
  for (size_t i = 0; i < t.entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.entries[i].first);
    s += t.entries[i].second ? "+" : "-";
  }
  return s;
}

Traversal traversal_from_string(int dim, const std::string& s) {
  Traversal t;
  t.dim = dim;
  if (s.empty() || s == "<>") return t;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t c = s.find(',', pos);
    if (c == std::string::npos) c = s.size();
    std::string item = s.substr(pos, c - pos);
    if (item.size() < 2 || (item.back() != '+' && item.back() != '-'))
      throw std::invalid_argument("traversal: bad entry '" + item + "'");
    int label = std::stoi(item.substr(0, item.size() - 1));
    if (label < 0 || label > dim)
      throw std::invalid_argument("traversal: label out of range in '" + item + "'");
    t.entries.emplace_back(label, item.back() == '+');
    pos = c + 1;
  }
  return t;
}

Traversal act(const Traversal& t, const SimplicialOperator& alpha) {
  if (alpha.cod != t.dim)
    throw std::invalid_argument("traversal act: dimension mismatch");
  Traversal out;
  out.dim = alpha.dom();
  for (const auto& [label, pos] : t.entries) {
    std::vector<int> pre = op_preimage(alpha, label);
    if (pos) std::reverse(pre.begin(), pre.end()); // decreasing for +
    for (int v : pre) out.entries.emplace_back(v, pos);
  }
  return out;
}

PointedTraversal act(const PointedTraversal& p, const SimplicialOperator& alpha) {
  PointedTraversal out;
  out.traversal = act(p.traversal, alpha);
  // Rightmost vertex adjacent to a copy of an edge left of the position;
  // equivalently the total size of the first `position` blocks.
  int c = 0;
  for (int k = 0; k < p.position; ++k)
    c += static_cast<int>(op_preimage(alpha, p.traversal.entries[k].first).size());
  out.position = c;
  return out;
}

Traversal concat(const Traversal& a, const Traversal& b) {
  if (a.dim != b.dim) throw std::invalid_argument("concat: dimension mismatch");
  Traversal out = a;
  out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
  return out;
}

Traversal dom_segment(const PointedTraversal& p) {
  Traversal out;
  out.dim = p.traversal.dim;
  out.entries.assign(p.traversal.entries.begin() + p.position,
                     p.traversal.entries.end());
  return out;
}

Traversal codom_segment(const PointedTraversal& p) {
  Traversal out;
  out.dim = p.traversal.dim;
  out.entries.assign(p.traversal.entries.begin(),
                     p.traversal.entries.begin() + p.position);
  return out;
}

Traversal reverse(const Traversal& t) {
  Traversal out;
  out.dim = t.dim;
  for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it)
    out.entries.emplace_back(it->first, !it->second);
  return out;
}

// ---- realization -----------------------------------------------------------

namespace {

std::string op_key(const SimplicialOperator& a) {
  std::string s;
  for (int v : a.values) s += std::to_string(v) + ",";
  return s;
}

SimplicialOperator parse_op(const std::string& s, int cod) {
  SimplicialOperator a;
  a.cod = cod;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t c = s.find(',', pos);
    a.values.push_back(std::stoi(s.substr(pos, c - pos)));
    pos = c + 1;
  }
  return a;
}

std::string index_key(const SimplicialOperator& alpha, int position) {
  return op_key(alpha) + ";" + std::to_string(position);
}

std::pair<SimplicialOperator, int> parse_index_key(const std::string& key, int n) {
  size_t semi = key.find(';');
  return {parse_op(key.substr(0, semi), n), std::stoi(key.substr(semi + 1))};
}

} // namespace

SimplexRef Realization::ref_of(const SimplicialOperator& alpha,
                               int position) const {
  int m = alpha.dom();
  if (m <= mat.bound) return mat.ref(m, index_key(alpha, position));
  // Above the materialized bound every simplex is degenerate; strip one
  // degeneracy and recurse.
  for (int i = 0; i < m; ++i) {
    SimplicialOperator di = face_op(m, i);
    SimplicialOperator si = degen_op(m - 1, i);
    PointedTraversal down = act(PointedTraversal{traversal, 0}, alpha);
    down.position = position;
    PointedTraversal stripped = act(down, di);
    PointedTraversal back = act(stripped, si);
    if (back.position == position &&
        compose_ops(si, compose_ops(di, alpha)) == alpha) {
      SimplexRef r = ref_of(compose_ops(di, alpha), stripped.position);
      return SimplexRef{r.cell, compose_ops(si, r.epi)};
    }
  }
  throw std::runtime_error("realization: no degeneracy witness above bound");
}

std::pair<SimplicialOperator, int> Realization::index_of(const SimplexRef& r) const {
  auto [alpha0, pos0] = parse_index_key(mat.key_of_cell.at(r.cell), traversal.dim);
  SimplicialOperator alpha = compose_ops(r.epi, alpha0);
  PointedTraversal pt{act(traversal, alpha0), pos0};
  return {alpha, act(pt, r.epi).position};
}

std::shared_ptr<const Realization> realize(const Traversal& t) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Realization>> cache;
  std::string ck = std::to_string(t.dim) + "|" + traversal_to_string(t);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ck);
    if (it != cache.end()) return it->second;
  }

  auto r = std::make_shared<Realization>();
  r->traversal = t;
  r->base_ = standard_simplex(t.dim);
  int n = t.dim;

  LevelwiseSpec spec;
  spec.max_level = n + (t.entries.empty() ? 0 : 1);
  spec.name_prefix = "r";
  spec.elems = [t, n](int m) {
    std::vector<std::string> keys;
    for (const auto& alpha : enumerate_ops(m, n)) {
      int len = act(t, alpha).length();
      for (int p = 0; p <= len; ++p) keys.push_back(index_key(alpha, p));
    }
    return keys;
  };
  spec.act = [t, n](int, const std::string& key, const SimplicialOperator& beta) {
    auto [alpha, pos] = parse_index_key(key, n);
    PointedTraversal pt{act(t, alpha), pos};
    PointedTraversal q = act(pt, beta);
    return index_key(compose_ops(beta, alpha), q.position);
  };
  r->mat = materialize(spec);

  const FiniteSimplicialSet* base = r->base_.get();
  r->to_base = map_from_keys(r->mat, base, [n, base](int, const std::string& key) {
    auto [alpha, pos] = parse_index_key(key, n);
    (void)pos;
    return ref_of_op(*base, alpha);
  });
  {
    std::vector<SimplexRef> ssec, tsec;
    for (int id = 0; id < base->cell_count(); ++id) {
      SimplicialOperator mono;
      mono.cod = n;
      const std::string& nm = base->cell(id).name;
      size_t pos = 0;
      while (pos < nm.size()) {
        size_t dot = nm.find('.', pos);
        if (dot == std::string::npos) dot = nm.size();
        mono.values.push_back(std::stoi(nm.substr(pos, dot - pos)));
        pos = dot + 1;
      }
      PointedTraversal s0{t, 0}, t0{t, t.length()};
      ssec.push_back(r->ref_of(mono, act(s0, mono).position));
      tsec.push_back(r->ref_of(mono, act(t0, mono).position));
    }
    r->source_sec = SimplicialMap(base, r->mat.space.get(), std::move(ssec));
    r->target_sec = SimplicialMap(base, r->mat.space.get(), std::move(tsec));
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, _] = cache.emplace(ck, r);
  return it->second;
}

SimplicialMap realization_map(const Realization& sub, const Realization& whole,
                              const SimplicialOperator& alpha) {
  if (!(act(whole.traversal, alpha) == sub.traversal))
    throw std::invalid_argument("realization_map: traversal mismatch");
  std::vector<SimplexRef> assign;
  for (int id = 0; id < sub.space().cell_count(); ++id) {
    auto [beta, pos] =
        parse_index_key(sub.mat.key_of_cell[id], sub.traversal.dim);
    assign.push_back(whole.ref_of(compose_ops(beta, alpha), pos));
  }
  return SimplicialMap(&sub.space(), &whole.space(), std::move(assign));
}

SimplicialMap concat_incl_first(const Realization& ra, const Realization& rwhole) {
  int alen = ra.traversal.length();
  Traversal a = ra.traversal;
  std::vector<SimplexRef> assign;
  for (int id = 0; id < ra.space().cell_count(); ++id) {
    auto [beta, pos] = parse_index_key(ra.mat.key_of_cell[id], a.dim);
    assign.push_back(rwhole.ref_of(beta, pos));
  }
  (void)alen;
  return SimplicialMap(&ra.space(), &rwhole.space(), std::move(assign));
}

SimplicialMap concat_incl_second(const Realization& rb, const Realization& rwhole) {
  int blen = rb.traversal.length();
  Traversal a = rwhole.traversal;
  a.entries.resize(rwhole.traversal.length() - blen);
  std::vector<SimplexRef> assign;
  for (int id = 0; id < rb.space().cell_count(); ++id) {
    auto [beta, pos] = parse_index_key(rb.mat.key_of_cell[id], rb.traversal.dim);
    int shift = act(a, beta).length();
    assign.push_back(rwhole.ref_of(beta, pos + shift));
  }
  return SimplicialMap(&rb.space(), &rwhole.space(), std::move(assign));
}

SimplicialMap reversal_iso(const Realization& rrev, const Realization& rt) {
  if (!(reverse(rt.traversal) == rrev.traversal))
    throw std::invalid_argument("reversal_iso: traversal mismatch");
  std::vector<SimplexRef> assign;
  for (int id = 0; id < rrev.space().cell_count(); ++id) {
    auto [beta, pos] =
        parse_index_key(rrev.mat.key_of_cell[id], rrev.traversal.dim);
    int len = act(rt.traversal, beta).length();
    assign.push_back(rt.ref_of(beta, len - pos));
  }
  return SimplicialMap(&rrev.space(), &rt.space(), std::move(assign));
}

// ---- T levels ---------------------------------------------------------------

std::vector<Traversal> t_levels0(int n, int max_len) {
  std::vector<Traversal> out;
  Traversal cur;
  cur.dim = n;
  std::function<void(int)> rec = [&](int remaining) {
    out.push_back(cur);
    if (remaining == 0) return;
    for (int l = 0; l <= n; ++l)
      for (bool sgn : {true, false}) {
        cur.entries.emplace_back(l, sgn);
        rec(remaining - 1);
        cur.entries.pop_back();
      }
  };
  rec(max_len);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PointedTraversal> t_levels1(int n, int max_len) {
  std::vector<PointedTraversal> out;
  for (const auto& t : t_levels0(n, max_len))
    for (int p = 0; p <= t.length(); ++p) out.push_back({t, p});
  return out;
}

// ---- DOT --------------------------------------------------------------------

std::string traversal_dot(const Traversal& t) {
  std::ostringstream os;
  os << "digraph traversal {\n  rankdir=LR;\n";
  for (int p = 0; p <= t.length(); ++p)
    os << "  v" << p << " [shape=point,label=\"\"];\n";
  for (int k = 0; k < t.length(); ++k) {
    const auto& [label, pos] = t.entries[k];
    if (pos)
      os << "  v" << k << " -> v" << k + 1 << " [label=\"" << label << "+\"];\n";
    else
      os << "  v" << k + 1 << " -> v" << k << " [label=\"" << label << "-\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string realization_dot(const Realization& r) {
  std::ostringstream os;
  os << "digraph realization {\n";
  const auto& X = r.space();
  for (int id = 0; id < X.cell_count(); ++id) {
    auto [alpha, pos] = parse_index_key(r.mat.key_of_cell[id], r.traversal.dim);
    os << "  c" << id << " [label=\"" << X.cell(id).name << " ("
       << op_to_string(alpha) << "," << pos << ")\"];\n";
  }
  for (int id = 0; id < X.cell_count(); ++id)
    for (size_t i = 0; i < X.cell(id).faces.size(); ++i)
      os << "  c" << id << " -> c" << X.cell(id).faces[i].cell
         << " [label=\"d" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace kanforge
