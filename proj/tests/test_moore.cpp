#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kanforge/moore.hpp"

using namespace kanforge;

namespace {

const FiniteSimplicialSet& delta(int n) { return *standard_simplex(n); }

MoorePath some_path(const FiniteSimplicialSet& X, const Traversal& t, int which) {
  auto real = realize(t);
  auto maps = enumerate_maps(real->space(), X, real->space().max_dim());
  return moore_from_map(t, maps.at(which % maps.size()));
}

} // namespace

TEST_CASE("unit r and endpoints") {
  const auto& X = delta(2);
  for (int n = 0; n <= 2; ++n)
    for (const auto& x : enumerate_level(X, n)) {
      MoorePath r = unit_r(X, x, n);
      CHECK(src_s(r) == x);
      CHECK(tgt_t(r) == x);
    }
  // r is a levelwise injection X_n -> (MX)_n
  for (int n = 0; n <= 2; ++n) {
    std::vector<MoorePath> seen;
    for (const auto& x : enumerate_level(X, n)) {
      MoorePath r = unit_r(X, x, n);
      for (const auto& o : seen) CHECK(!(o == r));
      seen.push_back(r);
    }
  }
}

TEST_CASE("mu concatenates traversals and restricts to the pieces") {
  const auto& X = delta(2);
  Traversal ta = make_traversal(2, {{0, true}});
  Traversal tb = make_traversal(2, {{1, false}});
  for (const auto& p : enumerate_moore_paths(X, 2, 1, MooreVariant::Both)) {
    if (!(p.tr == ta)) continue;
    for (const auto& q : enumerate_moore_paths(X, 2, 1, MooreVariant::Both)) {
      if (!(q.tr == tb)) continue;
      if (!(path_t(p) == path_s(q))) continue;
      MoorePath m = mu(p, q);
      CHECK(m.tr == concat(ta, tb));
      // gluing agrees simplexwise with both inputs on their images
      auto rw = realize(m.tr);
      auto i1 = concat_incl_first(*realize(ta), *rw);
      auto i2 = concat_incl_second(*realize(tb), *rw);
      for (int id = 0; id < realize(ta)->space().cell_count(); ++id) {
        SimplexRef im = i1.assignment()[id];
        CHECK(m.at(rw->index_of(im).first, rw->index_of(im).second) == p.vals[id]);
      }
      for (int id = 0; id < realize(tb)->space().cell_count(); ++id) {
        auto [al, pos] = rw->index_of(i2.assignment()[id]);
        CHECK(m.at(al, pos) == q.vals[id]);
      }
    }
  }
}

TEST_CASE("gamma lands on final segments") {
  const auto& X = delta(1);
  Traversal t = make_traversal(1, {{0, true}, {1, true}});
  MoorePath p = some_path(X, t, 0);
  MoorePath2 g = gamma(p);
  CHECK(g.tr == t);
  // component at the identity with position 1 is the final segment
  MoorePath comp = g.at(identity_op(1), 1);
  CHECK(comp.tr == dom_segment({t, 1}));
  MoorePath2 gs = gamma_star(p);
  CHECK(gs.at(identity_op(1), 1).tr == codom_segment({t, 1}));
}

TEST_CASE("twist and strength basics") {
  const auto& X = delta(1);
  for (const auto& p : enumerate_moore_paths(X, 1, 2, MooreVariant::Both)) {
    CHECK(twist(twist(p)) == p);
    CHECK(src_s(twist(p)) == tgt_t(p));
  }
  for (const auto& x : enumerate_level(X, 1)) {
    Traversal e;
    e.dim = 1;
    CHECK(strength_alpha(X, x, e) == unit_r(X, x, 1));
  }
}

TEST_CASE("pair_nu recovers both projections") {
  const auto& A = delta(1);
  const auto& B = delta(1);
  auto pb = product_ssets(&A, &B, 2);
  Traversal t = make_traversal(1, {{0, true}});
  auto paths = enumerate_moore_paths(A, 1, 1, MooreVariant::Both);
  int made = 0;
  for (const auto& p : paths) {
    if (!(p.tr == t)) continue;
    for (const auto& q : paths) {
      if (!(q.tr == t)) continue;
      MoorePath pr = pair_nu(p, q, pb);
      auto proj = [&](const SimplicialMap& pj, const MoorePath& w) {
        MoorePath out = w;
        for (auto& v : out.vals) v = Pt{pj.target_ptr(), pj.apply(v.ref)};
        return out;
      };
      CHECK(proj(pb.proj1, pr) == p);
      CHECK(proj(pb.proj2, pr) == q);
      ++made;
    }
  }
  CHECK(made > 0);
}

TEST_CASE("naturality of the structure maps") {
  const auto& X = delta(2);
  const auto& Y = delta(1);
  auto h = operator_map(standard_simplex(2).get(), standard_simplex(1).get(),
                        degen_op(1, 0));
  auto mh = [&](const MoorePath& p) {
    MoorePath q = p;
    for (auto& v : q.vals) v = Pt{&Y, h.apply(v.ref)};
    return q;
  };
  for (const auto& p : enumerate_moore_paths(X, 1, 2, MooreVariant::Both)) {
    CHECK(Pt{&Y, h.apply(src_s(p))} == path_s(mh(p)));
    CHECK(Pt{&Y, h.apply(tgt_t(p))} == path_t(mh(p)));
    CHECK(mh(twist(p)) == twist(mh(p)));
    auto lhs = path_map<MoorePath, MoorePath>(
        gamma(p), [&](const MoorePath& c) { return mh(c); });
    CHECK(lhs == gamma(mh(p)));
  }
  for (int n = 0; n <= 1; ++n)
    for (const auto& x : enumerate_level(X, n)) {
      CHECK(mh(unit_r(X, x, n)) == unit_r(Y, h.apply(x), n));
      for (const auto& t : t_levels0(n, 2))
        CHECK(mh(strength_alpha(X, x, t)) ==
              strength_alpha(Y, h.apply(x), t));
    }
}

TEST_CASE("prism embeddings iota realize the usual path object") {
  for (int n = 0; n <= 2; ++n) {
    const auto& X = delta(2);
    Traversal chi;
    chi.dim = n;
    for (int i = n; i >= 0; --i) chi.entries.emplace_back(i, true);
    auto real = realize(chi);
    auto prod = product_ssets(standard_simplex(n).get(),
                              standard_simplex(1).get(), n + 1);
    // explicit isomorphism (alpha, p) -> (alpha, cut function)
    std::vector<SimplexRef> assign;
    for (int id = 0; id < real->space().cell_count(); ++id) {
      auto [alpha, pos] = real->index_of(ref_of_cell(real->space(), id));
      int m = alpha.dom();
      SimplicialOperator g;
      g.cod = 1;
      for (int v = 0; v <= m; ++v) g.values.push_back(pos + v >= m + 1 ? 1 : 0);
      assign.push_back(prod.pair_ref(ref_of_op(*standard_simplex(n), alpha),
                                     ref_of_op(*standard_simplex(1), g)));
    }
    SimplicialMap iso(&real->space(), prod.along.space.get(), assign);
    CHECK(iso.is_mono_levelwise(n + 1));
    CHECK(real->space().cell_count() == prod.along.space->cell_count());

    // prism paths over X biject with maps from the prism
    long prism_paths = 0;
    for (const auto& p : enumerate_moore_paths(X, n, n + 1, MooreVariant::Both))
      if (p.tr == chi) ++prism_paths;
    CHECK(prism_paths ==
          static_cast<long>(enumerate_maps(*prod.along.space, X, n + 1).size()));

    // iota+ preserves source and target: under the isomorphism, the source
    // section is the 0-end of the cylinder and the target section the 1-end
    SimplicialOperator end0, end1;
    end0.cod = 1; end0.values = {0};
    end1.cod = 1; end1.values = {1};
    for (int id = 0; id < standard_simplex(n)->cell_count(); ++id) {
      auto s_im = iso.apply(real->source_sec.assignment()[id]);
      auto t_im = iso.apply(real->target_sec.assignment()[id]);
      SimplicialOperator mono = mono_of_cell_name(
          standard_simplex(n)->cell(id).name, n);
      int m = mono.dom();
      CHECK(s_im == prod.pair_ref(ref_of_op(*standard_simplex(n), mono),
                                  ref_of_op(*standard_simplex(1),
                                            compose_ops(terminal_op(m), end0))));
      CHECK(t_im == prod.pair_ref(ref_of_op(*standard_simplex(n), mono),
                                  ref_of_op(*standard_simplex(1),
                                            compose_ops(terminal_op(m), end1))));
    }
  }
}

TEST_CASE("axiom suite on the point is clean") {
  auto rep = axiom_suite(delta(0), 1, 2, MooreVariant::Both);
  CHECK(rep.passed);
  for (const auto& law : rep.laws) CHECK(law.instances > 0);
}

TEST_CASE("axiom suite on the interval, all variants") {
  for (auto v : {MooreVariant::Both, MooreVariant::PositiveOnly,
                 MooreVariant::NegativeOnly}) {
    auto rep = axiom_suite(delta(1), 1, 2, v);
    if (!rep.passed)
      for (const auto& law : rep.laws)
        if (!law.passed) MESSAGE(law.law, ": ", law.counterexample);
    CHECK(rep.passed);
  }
}

TEST_CASE("M1 levels agree with T0 levels") {
  const auto& pt = delta(0);
  for (int n = 0; n <= 2; ++n) {
    auto paths = enumerate_moore_paths(pt, n, 2, MooreVariant::Both);
    CHECK(paths.size() == t_levels0(n, 2).size());
  }
}
