#include "kanforge/moore.hpp"

#include <sstream>

namespace kanforge {

std::string value_to_string(const Pt& v) {
  return ref_to_string(*v.space, v.ref);
}

MoorePath moore_from_map(const Traversal& tr, const SimplicialMap& map) {
  MoorePath p;
  p.tr = tr;
  p.real = realize(tr);
  if (!(map.source() == p.real->space()))
    throw std::invalid_argument("moore_from_map: source is not the realization");
  for (const auto& r : map.assignment())
    p.vals.push_back(Pt{map.target_ptr(), r});
  return p;
}

SimplicialMap moore_to_map(const MoorePath& p) {
  std::vector<SimplexRef> assign;
  for (const auto& v : p.vals) assign.push_back(v.ref);
  return SimplicialMap(&p.real->space(), p.vals.at(0).space, std::move(assign),
                       false);
}

MoorePath unit_r(const FiniteSimplicialSet& X, const SimplexRef& x, int) {
  return path_r(Pt{&X, x});
}

SimplexRef src_s(const MoorePath& p) { return path_s(p).ref; }
SimplexRef tgt_t(const MoorePath& p) { return path_t(p).ref; }
MoorePath mu(const MoorePath& p, const MoorePath& q) { return path_mu(p, q); }
MoorePath2 gamma(const MoorePath& p) { return path_gamma(p); }
MoorePath2 gamma_star(const MoorePath& p) { return path_gamma_star(p); }
MoorePath twist(const MoorePath& p) { return path_twist(p); }

MoorePath strength_alpha(const FiniteSimplicialSet& X, const SimplexRef& x,
                         const Traversal& tr) {
  return path_strength(Pt{&X, x}, tr);
}

MoorePath pair_nu(const MoorePath& p, const MoorePath& q, const PullbackSSet& pb) {
  if (!(p.tr == q.tr))
    throw std::invalid_argument("pair_nu: mismatched traversals");
  return path_make<Pt>(p.tr, [&](const SimplicialOperator& a, int pos) {
    return Pt{pb.along.space.get(), pb.pair_ref(p.at(a, pos).ref, q.at(a, pos).ref)};
  });
}

// ---- enumeration ------------------------------------------------------------

namespace {

bool variant_ok(const Traversal& t, MooreVariant v) {
  for (const auto& [l, sgn] : t.entries) {
    if (v == MooreVariant::PositiveOnly && !sgn) return false;
    if (v == MooreVariant::NegativeOnly && sgn) return false;
  }
  return true;
}

} // namespace

std::vector<MoorePath> enumerate_moore_paths(const FiniteSimplicialSet& X,
                                             int dim, int len_max,
                                             MooreVariant variant) {
  std::vector<MoorePath> out;
  for (const auto& tr : t_levels0(dim, len_max)) {
    if (!variant_ok(tr, variant)) continue;
    auto real = realize(tr);
    for (const auto& m : enumerate_maps(real->space(), X, real->space().max_dim()))
      out.push_back(moore_from_map(tr, m));
  }
  return out;
}

// ---- axiom suite ------------------------------------------------------------

namespace {

struct Checker {
  AxiomReport& report;

  template <class F>
  void law(const std::string& name, F&& body) {
    LawResult lr;
    lr.law = name;
    body(lr);
    report.laws.push_back(lr);
    if (!lr.passed) report.passed = false;
  }
};

template <class V>
void expect_eq(LawResult& lr, const V& lhs, const V& rhs, const std::string& inst) {
  ++lr.instances;
  if (lr.passed && !(lhs == rhs)) {
    lr.passed = false;
    lr.counterexample = inst + " : " + value_to_string(lhs) +
                        " != " + value_to_string(rhs);
  }
}

} // namespace

AxiomReport axiom_suite(const FiniteSimplicialSet& X, int dim_max, int len_max,
                        MooreVariant variant) {
  AxiomReport report;
  report.suite = "moore-axioms";
  report.bounds = {{"dim", dim_max}, {"len", len_max},
                   {"variant", static_cast<int>(variant)}};
  Checker ck{report};

  // Per-dimension path inventory, composable pairs bounded by combined length.
  std::vector<std::vector<MoorePath>> paths(dim_max + 1);
  std::vector<std::vector<std::pair<int, int>>> pairs(dim_max + 1);
  std::vector<std::vector<std::pair<int, int>>> pairs_rev(dim_max + 1); // s(p)=t(q)
  for (int n = 0; n <= dim_max; ++n) {
    paths[n] = enumerate_moore_paths(X, n, len_max, variant);
    for (int i = 0; i < static_cast<int>(paths[n].size()); ++i)
      for (int j = 0; j < static_cast<int>(paths[n].size()); ++j) {
        if (paths[n][i].tr.length() + paths[n][j].tr.length() > len_max) continue;
        if (path_t(paths[n][i]) == path_s(paths[n][j])) pairs[n].push_back({i, j});
        if (path_s(paths[n][i]) == path_t(paths[n][j])) pairs_rev[n].push_back({i, j});
      }
  }
  auto each_path = [&](auto&& f) {
    for (int n = 0; n <= dim_max; ++n)
      for (const auto& p : paths[n]) f(p);
  };
  auto each_pair = [&](auto&& f) {
    for (int n = 0; n <= dim_max; ++n)
      for (auto [i, j] : pairs[n]) f(paths[n][i], paths[n][j]);
  };
  auto each_elem = [&](auto&& f) {
    for (int n = 0; n <= dim_max; ++n)
      for (const auto& x : enumerate_level(X, n)) f(Pt{&X, x});
  };
  auto each_trav = [&](auto&& f) {
    for (int n = 0; n <= dim_max; ++n)
      for (const auto& t : t_levels0(n, len_max))
        if (variant_ok(t, variant)) f(n, t);
  };
  auto pstr = [](const MoorePath& p) { return value_to_string(p); };

  // category laws
  ck.law("cat.unit-source", [&](LawResult& lr) {
    each_elem([&](const Pt& x) {
      MoorePath r = path_r(x);
      expect_eq(lr, path_s(r), x, value_to_string(x));
      expect_eq(lr, path_t(r), x, value_to_string(x));
    });
  });
  ck.law("cat.mu-endpoints", [&](LawResult& lr) {
    each_pair([&](const MoorePath& p, const MoorePath& q) {
      MoorePath m = path_mu(p, q);
      expect_eq(lr, path_s(m), path_s(p), pstr(p));
      expect_eq(lr, path_t(m), path_t(q), pstr(q));
    });
  });
  ck.law("cat.mu-units", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      expect_eq(lr, path_mu(path_r(path_s(p)), p), p, pstr(p));
      expect_eq(lr, path_mu(p, path_r(path_t(p))), p, pstr(p));
    });
  });
  ck.law("cat.mu-assoc", [&](LawResult& lr) {
    for (int n = 0; n <= dim_max; ++n)
      for (auto [i, j] : pairs[n])
        for (int k = 0; k < static_cast<int>(paths[n].size()); ++k) {
          const MoorePath &p = paths[n][i], &q = paths[n][j], &w = paths[n][k];
          if (p.tr.length() + q.tr.length() + w.tr.length() > len_max) continue;
          if (!(path_t(q) == path_s(w))) continue;
          expect_eq(lr, path_mu(path_mu(p, q), w), path_mu(p, path_mu(q, w)),
                    pstr(p) + "*" + pstr(q) + "*" + pstr(w));
        }
  });
  ck.law("cat.mu-cancellative", [&](LawResult& lr) {
    for (int n = 0; n <= dim_max; ++n) {
      for (auto [i, j1] : pairs[n])
        for (auto [i2, j2] : pairs[n]) {
          if (i != i2 || j1 == j2) continue;
          const MoorePath &p = paths[n][i], &q1 = paths[n][j1], &q2 = paths[n][j2];
          ++lr.instances;
          if (path_mu(p, q1) == path_mu(p, q2) && !(q1 == q2)) {
            lr.passed = false;
            lr.counterexample = "left cancellation fails: " + pstr(p);
          }
        }
      for (auto [i1, j] : pairs[n])
        for (auto [i2, j2] : pairs[n]) {
          if (j != j2 || i1 == i2) continue;
          const MoorePath &p1 = paths[n][i1], &p2 = paths[n][i2], &q = paths[n][j];
          ++lr.instances;
          if (path_mu(p1, q) == path_mu(p2, q) && !(p1 == p2)) {
            lr.passed = false;
            lr.counterexample = "right cancellation fails: " + pstr(q);
          }
        }
    }
  });

  // comonad (M, s, Gamma)
  ck.law("gamma.counit-outer", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      expect_eq(lr, path_s(path_gamma(p)), p, pstr(p));
    });
  });
  ck.law("gamma.counit-inner", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      auto lhs = path_map<MoorePath, Pt>(path_gamma(p),
                                         [](const MoorePath& q) { return path_s(q); });
      expect_eq(lr, lhs, p, pstr(p));
    });
  });
  ck.law("gamma.coassoc", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      MoorePath2 g = path_gamma(p);
      auto lhs = path_map<MoorePath, MoorePath2>(
          g, [](const MoorePath& q) { return path_gamma(q); });
      auto rhs = path_gamma(g);
      expect_eq(lr, lhs, rhs, pstr(p));
    });
  });
  ck.law("gamma.r", [&](LawResult& lr) {
    each_elem([&](const Pt& x) {
      MoorePath r = path_r(x);
      expect_eq(lr, path_gamma(r), path_r(r), value_to_string(x));
    });
  });
  ck.law("gamma.tM", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      expect_eq(lr, path_t(path_gamma(p)), path_r(path_t(p)), pstr(p));
    });
  });
  ck.law("gamma.Mt", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      auto lhs = path_map<MoorePath, Pt>(path_gamma(p),
                                         [](const MoorePath& q) { return path_t(q); });
      expect_eq(lr, lhs, path_strength(path_t(p), p.tr), pstr(p));
    });
  });

  // strength
  ck.law("strength.endpoints", [&](LawResult& lr) {
    each_trav([&](int n, const Traversal& t) {
      for (const auto& x : enumerate_level(X, n)) {
        MoorePath a = path_strength(Pt{&X, x}, t);
        expect_eq(lr, path_s(a), Pt{&X, x}, traversal_to_string(t));
        expect_eq(lr, path_t(a), Pt{&X, x}, traversal_to_string(t));
      }
    });
  });
  ck.law("strength.unit", [&](LawResult& lr) {
    each_elem([&](const Pt& x) {
      Traversal e;
      e.dim = dim_of_value(x);
      expect_eq(lr, path_strength(x, e), path_r(x), value_to_string(x));
    });
  });
  ck.law("strength.mu", [&](LawResult& lr) {
    each_trav([&](int n, const Traversal& t) {
      for (int cut = 0; cut <= t.length(); ++cut) {
        Traversal t0 = codom_segment({t, cut}), t1 = dom_segment({t, cut});
        for (const auto& x : enumerate_level(X, n)) {
          Pt v{&X, x};
          expect_eq(lr, path_strength(v, t),
                    path_mu(path_strength(v, t0), path_strength(v, t1)),
                    traversal_to_string(t));
        }
      }
    });
  });
  ck.law("strength.gamma", [&](LawResult& lr) {
    each_trav([&](int n, const Traversal& t) {
      for (const auto& x : enumerate_level(X, n)) {
        Pt v{&X, x};
        auto lhs = path_gamma(path_strength(v, t));
        auto rhs = path_make<MoorePath>(t, [&](const SimplicialOperator& a, int pos) {
          return path_strength(act_value(v, a),
                               dom_segment({act(t, a), pos}));
        });
        expect_eq(lr, lhs, rhs, traversal_to_string(t));
      }
    });
  });

  // distributive law
  ck.law("gamma.distributive", [&](LawResult& lr) {
    each_pair([&](const MoorePath& p, const MoorePath& q) {
      auto lhs = path_gamma(path_mu(p, q));
      auto const_q = path_strength(q, p.tr);
      auto zipped = path_zip<Pt>(path_gamma(p), const_q,
                                 [](const MoorePath& a, const MoorePath& b) {
                                   return path_mu(a, b);
                                 });
      auto rhs = path_mu(zipped, path_gamma(q));
      expect_eq(lr, lhs, rhs, pstr(p) + " * " + pstr(q));
    });
  });

  // dual comonad (M, t, Gamma*)
  ck.law("gammastar.counit-outer", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      expect_eq(lr, path_t(path_gamma_star(p)), p, pstr(p));
    });
  });
  ck.law("gammastar.counit-inner", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      auto lhs = path_map<MoorePath, Pt>(path_gamma_star(p),
                                         [](const MoorePath& q) { return path_t(q); });
      expect_eq(lr, lhs, p, pstr(p));
    });
  });
  ck.law("gammastar.coassoc", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      MoorePath2 g = path_gamma_star(p);
      auto lhs = path_map<MoorePath, MoorePath2>(
          g, [](const MoorePath& q) { return path_gamma_star(q); });
      expect_eq(lr, lhs, path_gamma_star(g), pstr(p));
    });
  });
  ck.law("gammastar.r", [&](LawResult& lr) {
    each_elem([&](const Pt& x) {
      MoorePath r = path_r(x);
      expect_eq(lr, path_gamma_star(r), path_r(r), value_to_string(x));
    });
  });
  ck.law("gammastar.sM", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      expect_eq(lr, path_s(path_gamma_star(p)), path_r(path_s(p)), pstr(p));
    });
  });
  ck.law("gammastar.Ms", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      auto lhs = path_map<MoorePath, Pt>(path_gamma_star(p),
                                         [](const MoorePath& q) { return path_s(q); });
      expect_eq(lr, lhs, path_strength(path_s(p), p.tr), pstr(p));
    });
  });
  ck.law("gammastar.distributive", [&](LawResult& lr) {
    each_pair([&](const MoorePath& p, const MoorePath& q) {
      auto lhs = path_gamma_star(path_mu(p, q));
      auto const_p = path_strength(p, q.tr);
      auto zipped = path_zip<Pt>(const_p, path_gamma_star(q),
                                 [](const MoorePath& a, const MoorePath& b) {
                                   return path_mu(a, b);
                                 });
      auto rhs = path_mu(path_gamma_star(p), zipped);
      expect_eq(lr, lhs, rhs, pstr(p) + " * " + pstr(q));
    });
  });

  // sandwich equation
  ck.law("sandwich", [&](LawResult& lr) {
    each_path([&](const MoorePath& p) {
      auto lhs = path_zip<Pt>(path_gamma_star(p), path_gamma(p),
                              [](const MoorePath& a, const MoorePath& b) {
                                return path_mu(a, b);
                              });
      expect_eq(lr, lhs, path_strength(p, p.tr), pstr(p));
    });
  });

  if (variant == MooreVariant::Both) {
    ck.law("twist.involution", [&](LawResult& lr) {
      each_path([&](const MoorePath& p) {
        expect_eq(lr, path_twist(path_twist(p)), p, pstr(p));
      });
    });
    ck.law("twist.r", [&](LawResult& lr) {
      each_elem([&](const Pt& x) {
        expect_eq(lr, path_twist(path_r(x)), path_r(x), value_to_string(x));
      });
    });
    ck.law("twist.endpoints", [&](LawResult& lr) {
      each_path([&](const MoorePath& p) {
        expect_eq(lr, path_s(path_twist(p)), path_t(p), pstr(p));
        expect_eq(lr, path_t(path_twist(p)), path_s(p), pstr(p));
      });
    });
    ck.law("twist.strength", [&](LawResult& lr) {
      each_trav([&](int n, const Traversal& t) {
        for (const auto& x : enumerate_level(X, n)) {
          Pt v{&X, x};
          expect_eq(lr, path_twist(path_strength(v, t)),
                    path_strength(v, reverse(t)), traversal_to_string(t));
        }
      });
    });
    ck.law("twist.mu", [&](LawResult& lr) {
      each_pair([&](const MoorePath& p, const MoorePath& q) {
        expect_eq(lr, path_twist(path_mu(p, q)),
                  path_mu(path_twist(q), path_twist(p)), pstr(p) + "*" + pstr(q));
      });
    });
    ck.law("twist.gammastar", [&](LawResult& lr) {
      each_path([&](const MoorePath& p) {
        auto inner = path_map<MoorePath, MoorePath>(
            path_gamma(path_twist(p)),
            [](const MoorePath& q) { return path_twist(q); });
        expect_eq(lr, path_gamma_star(p), path_twist(inner), pstr(p));
      });
    });
  }

  return report;
}

} // namespace kanforge
