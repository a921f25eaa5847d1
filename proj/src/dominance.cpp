#include "kanforge/dominance.hpp"

#include <algorithm>
#include <functional>

namespace kanforge {

bool CofibrantSieve::contains_op(const SimplicialOperator& alpha) const {
  std::vector<int> image;
  for (int v : alpha.values)
    if (image.empty() || image.back() != v) image.push_back(v);
  return contains(image);
}

bool is_cofibrant(const CofibrantSieve& s) {
  for (const auto& e : s.members) {
    if (e.empty()) return false;
    for (int v : e)
      if (v < 0 || v > s.dim) return false;
    for (size_t i = 0; i < e.size(); ++i) {
      std::vector<int> f = e;
      f.erase(f.begin() + i);
      if (!f.empty() && !s.contains(f)) return false;
    }
  }
  return true;
}

namespace {
void all_subsets(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (!cur.empty()) out.push_back(cur);
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}
} // namespace

CofibrantSieve max_sieve(int n) {
  CofibrantSieve s;
  s.dim = n;
  std::vector<std::vector<int>> subs;
  all_subsets(n, subs);
  s.members.insert(subs.begin(), subs.end());
  return s;
}

CofibrantSieve empty_sieve(int n) { return CofibrantSieve{n, {}}; }

CofibrantSieve boundary_sieve(int n) {
  CofibrantSieve s = max_sieve(n);
  std::vector<int> full;
  for (int v = 0; v <= n; ++v) full.push_back(v);
  s.members.erase(full);
  return s;
}

CofibrantSieve horn_sieve(int n, int k) {
  CofibrantSieve s = boundary_sieve(n);
  std::vector<int> opp;
  for (int v = 0; v <= n; ++v)
    if (v != k) opp.push_back(v);
  s.members.erase(opp);
  return s;
}

CofibrantSieve meet(const CofibrantSieve& a, const CofibrantSieve& b) {
  if (a.dim != b.dim) throw std::invalid_argument("sieve meet: dim mismatch");
  CofibrantSieve out{a.dim, {}};
  for (const auto& e : a.members)
    if (b.contains(e)) out.members.insert(e);
  return out;
}

CofibrantSieve join(const CofibrantSieve& a, const CofibrantSieve& b) {
  if (a.dim != b.dim) throw std::invalid_argument("sieve join: dim mismatch");
  CofibrantSieve out = a;
  out.members.insert(b.members.begin(), b.members.end());
  return out;
}

CofibrantSieve implication(const CofibrantSieve& a, const CofibrantSieve& b) {
  if (a.dim != b.dim) throw std::invalid_argument("sieve implication: dim mismatch");
  // e in (a -> b) iff every nonempty subset of e lying in a lies in b;
  // checking the condition on monos only suffices.
  CofibrantSieve out{a.dim, {}};
  for (const auto& e : max_sieve(a.dim).members) {
    bool ok = true;
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (!ok) return;
      if (i == e.size()) {
        if (!cur.empty() && a.contains(cur) && !b.contains(cur)) ok = false;
        return;
      }
      rec(i + 1);
      cur.push_back(e[i]);
      rec(i + 1);
      cur.pop_back();
    };
    rec(0);
    if (ok) out.members.insert(e);
  }
  return out;
}

CofibrantSieve act(const CofibrantSieve& s, const SimplicialOperator& alpha) {
  if (alpha.cod != s.dim) throw std::invalid_argument("sieve act: dim mismatch");
  CofibrantSieve out{alpha.dom(), {}};
  for (const auto& e : max_sieve(alpha.dom()).members) {
    std::vector<int> image;
    for (int v : e) {
      int w = alpha.values[v];
      if (image.empty() || image.back() != w) image.push_back(w);
    }
    if (s.contains(image)) out.members.insert(e);
  }
  return out;
}

std::vector<CofibrantSieve> enumerate_sieves(int n) {
  // DFS over subsets in size order; a subset may join only when all its
  // facets are in.
  std::vector<std::vector<int>> subs;
  all_subsets(n, subs);
  std::stable_sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  std::vector<CofibrantSieve> out;
  CofibrantSieve cur{n, {}};
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == subs.size()) {
      out.push_back(cur);
      return;
    }
    rec(k + 1);
    const auto& e = subs[k];
    bool ok = true;
    for (size_t i = 0; i < e.size() && ok; ++i) {
      std::vector<int> f = e;
      f.erase(f.begin() + i);
      if (!f.empty() && !cur.contains(f)) ok = false;
    }
    if (ok) {
      cur.members.insert(e);
      rec(k + 1);
      cur.members.erase(e);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string sieve_to_string(const CofibrantSieve& s) {
  std::string out = "{";
  for (const auto& e : s.members) {
    out += "{";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out += ".";
      out += std::to_string(e[i]);
    }
    out += "}";
  }
  return out + "}";
}

SieveComplex sieve_subcomplex(const CofibrantSieve& s) {
  std::vector<std::vector<int>> keep(s.members.begin(), s.members.end());
  std::stable_sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<std::string, int> id_of;
  std::vector<FiniteSimplicialSet::Cell> cells;
  auto nm = [](const std::vector<int>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ".";
      out += std::to_string(vs[i]);
    }
    return out;
  };
  for (const auto& e : keep) {
    FiniteSimplicialSet::Cell c;
    c.name = nm(e);
    c.dim = static_cast<int>(e.size()) - 1;
    if (c.dim > 0)
      for (size_t i = 0; i < e.size(); ++i) {
        std::vector<int> f = e;
        f.erase(f.begin() + i);
        c.faces.push_back(SimplexRef{id_of.at(nm(f)), identity_op(c.dim - 1)});
      }
    id_of.emplace(c.name, static_cast<int>(cells.size()));
    cells.push_back(std::move(c));
  }
  SieveComplex out;
  out.space = std::make_shared<FiniteSimplicialSet>(
      FiniteSimplicialSet::build(std::move(cells)));
  out.inclusion =
      subcomplex_inclusion(out.space.get(), standard_simplex(s.dim).get());
  return out;
}

// ---- classifier -------------------------------------------------------------

std::string simplex_key(const SimplexRef& r) {
  std::string s = std::to_string(r.cell) + ":";
  for (int v : r.epi.values) s += std::to_string(v) + ",";
  return s;
}

namespace {

SimplexRef parse_simplex_key(const std::string& key, const FiniteSimplicialSet& X) {
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

CofibrantSieve parse_sieve(const std::string& skey, int n) {
  CofibrantSieve s{n, {}};
  size_t pos = 1;
  while (pos + 1 < skey.size()) {
    size_t close = skey.find('}', pos);
    std::string item = skey.substr(pos + 1, close - pos - 1);
    std::vector<int> e;
    size_t q = 0;
    while (q < item.size()) {
      size_t dot = item.find('.', q);
      if (dot == std::string::npos) dot = item.size();
      e.push_back(std::stoi(item.substr(q, dot - q)));
      q = dot + 1;
    }
    s.members.insert(e);
    pos = close + 1;
  }
  return s;
}

} // namespace

const CofibrantSieve& ClassifyingMap::at(const SimplexRef& a) const {
  auto it = value.find(simplex_key(a));
  if (it == value.end())
    throw std::out_of_range("classifying map: simplex beyond bound");
  return it->second;
}

ClassifyingMap classify_mono(const SimplicialMap& m, int dim_bound) {
  const FiniteSimplicialSet& A = m.target();
  const FiniteSimplicialSet& B = m.source();
  if (!m.is_mono_levelwise(dim_bound + 1))
    throw std::invalid_argument("classify_mono: not levelwise complemented");
  ClassifyingMap out;
  out.domain = &A;
  out.bound = dim_bound;
  std::vector<std::set<SimplexRef>> image(dim_bound + 1);
  for (int k = 0; k <= dim_bound; ++k)
    for (const auto& b : enumerate_level(B, k)) image[k].insert(m.apply(b));
  for (int n = 0; n <= dim_bound; ++n)
    for (const auto& a : enumerate_level(A, n)) {
      CofibrantSieve s{n, {}};
      for (const auto& e : max_sieve(n).members) {
        SimplicialOperator mono;
        mono.cod = n;
        mono.values = e;
        SimplexRef face = act(A, a, mono);
        if (mono.dom() <= dim_bound && image[mono.dom()].count(face))
          s.members.insert(e);
      }
      out.value.emplace(simplex_key(a), s);
    }
  return out;
}

// ---- partial map classifier ---------------------------------------------------

namespace {

std::string pm_key(const SimplexRef& a, const CofibrantSieve& s,
                   const std::map<std::vector<int>, SimplexRef>& partial) {
  std::string key = simplex_key(a) + "#" + sieve_to_string(s) + "#";
  for (const auto& [e, r] : partial) key += simplex_key(r) + ";";
  return key;
}

PartialElement pm_parse(const std::string& key, int n,
                        const FiniteSimplicialSet& A,
                        const FiniteSimplicialSet& B) {
  PartialElement el;
  size_t h1 = key.find('#');
  size_t h2 = key.find('#', h1 + 1);
  el.base = parse_simplex_key(key.substr(0, h1), A);
  el.sieve = parse_sieve(key.substr(h1 + 1, h2 - h1 - 1), n);
  std::string pkey = key.substr(h2 + 1);
  size_t pos = 0;
  for (const auto& e : el.sieve.members) {
    size_t semi = pkey.find(';', pos);
    el.partial.emplace(e, parse_simplex_key(pkey.substr(pos, semi - pos), B));
    pos = semi + 1;
  }
  return el;
}

std::string pm_act(const std::string& key, int n, const SimplicialOperator& alpha,
                   const FiniteSimplicialSet& A, const FiniteSimplicialSet& B) {
  PartialElement el = pm_parse(key, n, A, B);
  SimplexRef a2 = act(A, el.base, alpha);
  CofibrantSieve s2 = act(el.sieve, alpha);
  std::map<std::vector<int>, SimplexRef> p2;
  for (const auto& e : s2.members) {
    std::vector<int> image;
    for (int v : e) {
      int w = alpha.values[v];
      if (image.empty() || image.back() != w) image.push_back(w);
    }
    SimplicialOperator r;
    r.cod = static_cast<int>(image.size()) - 1;
    for (int v : e) {
      int w = alpha.values[v];
      r.values.push_back(static_cast<int>(
          std::lower_bound(image.begin(), image.end(), w) - image.begin()));
    }
    p2.emplace(e, act(B, el.partial.at(image), r));
  }
  return pm_key(a2, s2, p2);
}

} // namespace

SimplexRef PartialMapClassifier::encode(int level, const PartialElement& el) const {
  return Mf.ref(level, pm_key(el.base, el.sieve, el.partial));
}

PartialElement PartialMapClassifier::decode(const SimplexRef& r) const {
  if (!is_mono(r.epi))
    throw std::invalid_argument("decode: apply the epi first");
  return pm_parse(Mf.key_of_cell.at(r.cell), Mf.space->dim_of(r.cell), *A, *B);
}

PartialMapClassifier partial_map_classifier(const SimplicialMap& f, int dim_bound) {
  const FiniteSimplicialSet& B = f.source();
  const FiniteSimplicialSet& A = f.target();

  auto enumerate_partials = [&](int n, const SimplexRef& a,
                                const CofibrantSieve& s) {
    std::vector<std::map<std::vector<int>, SimplexRef>> out;
    std::vector<std::vector<int>> mem(s.members.begin(), s.members.end());
    std::stable_sort(mem.begin(), mem.end(), [](const auto& x, const auto& y) {
      return x.size() < y.size();
    });
    std::map<std::vector<int>, SimplexRef> cur;
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == mem.size()) {
        out.push_back(cur);
        return;
      }
      const auto& e = mem[k];
      int d = static_cast<int>(e.size()) - 1;
      SimplicialOperator mono;
      mono.cod = n;
      mono.values = e;
      SimplexRef target = act(A, a, mono);
      for (const auto& cand : enumerate_level(B, d)) {
        if (!(f.apply(cand) == target)) continue;
        bool ok = true;
        for (size_t i = 0; i < e.size() && e.size() > 1 && ok; ++i) {
          std::vector<int> sub = e;
          sub.erase(sub.begin() + i);
          if (!(act(B, cand, face_op(d, static_cast<int>(i))) == cur.at(sub)))
            ok = false;
        }
        if (!ok) continue;
        cur[e] = cand;
        rec(k + 1);
        cur.erase(e);
      }
    };
    rec(0);
    return out;
  };

  LevelwiseSpec spec;
  spec.max_level = dim_bound;
  spec.name_prefix = "m";
  spec.elems = [&A, &B, enumerate_partials](int n) {
    std::vector<std::string> keys;
    for (const auto& a : enumerate_level(A, n))
      for (const auto& s : enumerate_sieves(n))
        for (const auto& partial : enumerate_partials(n, a, s))
          keys.push_back(pm_key(a, s, partial));
    return keys;
  };
  spec.act = [&A, &B](int n, const std::string& key, const SimplicialOperator& al) {
    return pm_act(key, n, al, A, B);
  };

  PartialMapClassifier out;
  out.A = &A;
  out.B = &B;
  out.bound = dim_bound;
  out.Mf = materialize(spec);

  // Lf(b) = (f(b), top, constant b)
  {
    std::vector<SimplexRef> assign;
    for (int id = 0; id < B.cell_count(); ++id) {
      int n = B.dim_of(id);
      if (n > dim_bound)
        throw std::invalid_argument("partial_map_classifier: bound below source");
      PartialElement el;
      el.base = f.apply(ref_of_cell(B, id));
      el.sieve = max_sieve(n);
      for (const auto& e : el.sieve.members) {
        SimplicialOperator mono;
        mono.cod = n;
        mono.values = e;
        el.partial.emplace(e, act(B, ref_of_cell(B, id), mono));
      }
      assign.push_back(out.encode(n, el));
    }
    out.Lf = SimplicialMap(&B, out.Mf.space.get(), std::move(assign));
  }
  // Rf = first projection
  out.Rf = map_from_keys(out.Mf, &A, [&A, &B](int n, const std::string& key) {
    return pm_parse(key, n, A, B).base;
  });
  return out;
}

// ---- boundary lift tables -----------------------------------------------------

std::string boundary_problem_key(const BoundaryProblem& pr) {
  std::string key = "b" + std::to_string(pr.n) + "|";
  for (const auto& r : pr.y) key += simplex_key(r) + ";";
  key += "|" + simplex_key(pr.x);
  return key;
}

bool boundary_problem_valid(const SimplicialMap& p, const BoundaryProblem& pr) {
  const FiniteSimplicialSet& Y = p.source();
  if (pr.n == 0) return pr.y.empty() && pr.x.dim() == 0;
  if (static_cast<int>(pr.y.size()) != pr.n + 1) return false;
  for (int i = 0; i <= pr.n; ++i) {
    if (pr.y[i].dim() != pr.n - 1) return false;
    if (!(p.apply(pr.y[i]) == act(p.target(), pr.x, face_op(pr.n, i))))
      return false;
  }
  for (int j = 1; j <= pr.n && pr.n >= 2; ++j)
    for (int i = 0; i < j; ++i)
      if (!(act(Y, pr.y[j], face_op(pr.n - 1, i)) ==
            act(Y, pr.y[i], face_op(pr.n - 1, j - 1))))
        return false;
  return true;
}

std::vector<SimplexRef> boundary_problem_solutions(const SimplicialMap& p,
                                                   const BoundaryProblem& pr) {
  std::vector<SimplexRef> out;
  for (const auto& cand : enumerate_level(p.source(), pr.n)) {
    if (!(p.apply(cand) == pr.x)) continue;
    bool ok = true;
    for (int i = 0; i <= pr.n && pr.n > 0 && ok; ++i)
      if (!(act(p.source(), cand, face_op(pr.n, i)) == pr.y[i])) ok = false;
    if (ok) out.push_back(cand);
  }
  return out;
}

void BoundaryLiftTable::store(const BoundaryProblem& pr, const SimplexRef& filler) {
  entries_[boundary_problem_key(pr)] = {pr, filler};
}

std::optional<SimplexRef> BoundaryLiftTable::lookup(const BoundaryProblem& pr) const {
  auto it = entries_.find(boundary_problem_key(pr));
  if (it != entries_.end()) return it->second.second;
  if (generator) return generator(pr);
  return std::nullopt;
}

std::vector<BoundaryProblem> enumerate_boundary_problems(const SimplicialMap& p,
                                                         int n) {
  std::vector<BoundaryProblem> out;
  const FiniteSimplicialSet& Y = p.source();
  const FiniteSimplicialSet& X = p.target();
  for (const auto& x : enumerate_level(X, n)) {
    if (n == 0) {
      out.push_back(BoundaryProblem{0, {}, x});
      continue;
    }
    std::vector<SimplexRef> y(n + 1);
    std::function<void(int)> rec = [&](int i) {
      if (i > n) {
        out.push_back(BoundaryProblem{n, y, x});
        return;
      }
      for (const auto& cand : enumerate_level(Y, n - 1)) {
        if (!(p.apply(cand) == act(X, x, face_op(n, i)))) continue;
        bool ok = true;
        for (int k = 0; k < i && n >= 2 && ok; ++k)
          if (!(act(Y, cand, face_op(n - 1, k)) ==
                act(Y, y[k], face_op(n - 1, i - 1))))
            ok = false;
        if (!ok) continue;
        y[i] = cand;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

CheckReport verify_trivfib(const SimplicialMap& p, const BoundaryLiftTable& table) {
  CheckReport rep;
  rep.suite = "verify-trivfib";
  int D = table.bound();
  rep.bounds = {{"D", D}};
  const FiniteSimplicialSet& Y = p.source();

  for (int n = 0; n <= D; ++n) {
    for (const auto& pr : enumerate_boundary_problems(p, n)) {
      ++rep.instances;
      auto f = table.lookup(pr);
      if (!f) {
        rep.fail("incomplete", boundary_problem_key(pr));
        continue;
      }
      if (!(p.apply(*f) == pr.x)) rep.fail("filler not over base", boundary_problem_key(pr));
      for (int i = 0; i <= n && n > 0; ++i)
        if (!(act(Y, *f, face_op(n, i)) == pr.y[i]))
          rep.fail("filler does not restrict", boundary_problem_key(pr));
      // degeneracy condition, one dimension up
      if (n > D - 1) continue;
      for (int i = 0; i <= n; ++i) {
        BoundaryProblem up;
        up.n = n + 1;
        up.x = act(p.target(), pr.x, degen_op(n, i));
        for (int k = 0; k <= n + 1; ++k) {
          SimplexRef yk;
          if (k == i || k == i + 1) yk = *f;
          else if (k < i)
            yk = act(Y, pr.y[k], degen_op(n - 1, i - 1));
          else
            yk = act(Y, pr.y[k - 1], degen_op(n - 1, i));
          up.y.push_back(yk);
        }
        ++rep.instances;
        auto g = table.lookup(up);
        if (!g) {
          rep.fail("incomplete at degenerated problem", boundary_problem_key(up));
          continue;
        }
        if (!(*g == act(Y, *f, degen_op(n, i))))
          rep.fail("degeneracy condition violated",
                   boundary_problem_key(pr) + " s_" + std::to_string(i));
      }
    }
  }
  return rep;
}

TrivFibBuildResult build_trivfib_classical(const SimplicialMap& p, int D) {
  TrivFibBuildResult out;
  BoundaryLiftTable table(&p, D);
  const FiniteSimplicialSet& Y = p.source();
  for (int n = 0; n <= D; ++n)
    for (const auto& pr : enumerate_boundary_problems(p, n)) {
      auto sols = boundary_problem_solutions(p, pr);
      if (sols.empty()) {
        out.unfillable = pr;
        return out;
      }
      std::optional<SimplexRef> degenerate;
      for (const auto& s : sols)
        if (!is_mono(s.epi)) {
          if (degenerate && !(*degenerate == s))
            throw std::runtime_error(
                "build_trivfib: two distinct degenerate fillers (impossible)");
          degenerate = s;
        }
      table.store(pr, degenerate ? *degenerate : sols.front());
    }
  (void)Y;
  out.table = std::move(table);
  return out;
}

SimplicialMap extend_to_sieve(const SimplicialMap& p,
                              const BoundaryLiftTable& table,
                              const SieveProblem& problem,
                              const SieveComplex& Tcx,
                              const std::vector<std::vector<int>>* order) {
  const FiniteSimplicialSet& Y = p.source();
  // values on the cells of the T-subcomplex, seeded from u on S
  std::vector<std::optional<SimplexRef>> val(Tcx.space->cell_count());
  for (int id = 0; id < problem.u.source().cell_count(); ++id) {
    auto target = Tcx.space->cell_by_name(problem.u.source().cell(id).name);
    if (!target)
      throw std::invalid_argument("extend_to_sieve: S is not inside T");
    val[*target] = problem.u.assignment()[id];
  }
  std::vector<std::vector<int>> steps;
  if (order) {
    steps = *order;
  } else {
    for (const auto& e : problem.T.members)
      if (!problem.S.contains(e)) steps.push_back(e);
    std::stable_sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) {
      return a.size() < b.size();
    });
  }
  auto nm = [](const std::vector<int>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ".";
      out += std::to_string(vs[i]);
    }
    return out;
  };
  if (problem.x.source_ptr() != Tcx.space.get())
    throw std::invalid_argument("extend_to_sieve: x must be defined on the T complex");
  for (const auto& e : steps) {
    int id = *Tcx.space->cell_by_name(nm(e));
    int m = static_cast<int>(e.size()) - 1;
    BoundaryProblem pr;
    pr.n = m;
    pr.x = problem.x.apply(ref_of_cell(*Tcx.space, id));
    for (int i = 0; i <= m && m > 0; ++i) {
      SimplexRef fr = Tcx.space->cell(id).faces[i];
      if (!val[fr.cell])
        throw std::invalid_argument("extend_to_sieve: face missing, bad order");
      pr.y.push_back(act(Y, *val[fr.cell], fr.epi));
    }
    auto filler = table.lookup(pr);
    if (!filler)
      throw std::runtime_error("extend_to_sieve: table incomplete at " +
                               boundary_problem_key(pr));
    val[id] = *filler;
  }
  std::vector<SimplexRef> assign;
  for (int id = 0; id < Tcx.space->cell_count(); ++id) {
    if (!val[id]) throw std::runtime_error("extend_to_sieve: unfilled cell");
    assign.push_back(*val[id]);
  }
  return SimplicialMap(Tcx.space.get(), &Y, std::move(assign));
}

// ---- JSON ---------------------------------------------------------------------

nlohmann::json trivfib_to_json(const BoundaryLiftTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  const FiniteSimplicialSet& Y = t.map().source();
  const FiniteSimplicialSet& X = t.map().target();
  for (const auto& [key, pe] : t.entries()) {
    const auto& [pr, filler] = pe;
    nlohmann::json yj = nlohmann::json::array();
    for (const auto& r : pr.y) yj.push_back(ref_to_json(Y, r));
    entries.push_back({{"n", pr.n},
                       {"y", yj},
                       {"x", ref_to_json(X, pr.x)},
                       {"filler", ref_to_json(Y, filler)}});
  }
  return nlohmann::json{{"schema", "trivfib.v1"}, {"bound", t.bound()},
                        {"entries", entries}};
}

BoundaryLiftTable trivfib_from_json(const SimplicialMap* p, const nlohmann::json& j) {
  if (j.at("schema") != "trivfib.v1")
    throw std::invalid_argument("trivfib_from_json: expected schema trivfib.v1");
  BoundaryLiftTable t(p, j.at("bound").get<int>());
  for (const auto& e : j.at("entries")) {
    BoundaryProblem pr;
    pr.n = e.at("n").get<int>();
    for (const auto& yj : e.at("y")) pr.y.push_back(ref_from_json(p->source(), yj));
    pr.x = ref_from_json(p->target(), e.at("x"));
    t.store(pr, ref_from_json(p->source(), e.at("filler")));
  }
  return t;
}

} // namespace kanforge
