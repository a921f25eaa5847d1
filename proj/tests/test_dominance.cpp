#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kanforge/dominance.hpp"
#include "kanforge/traversal.hpp"

using namespace kanforge;

namespace {

// the codiscrete complex on two vertices, truncated at dim_bound
MaterializedSSet codiscrete2(int dim_bound) {
  std::vector<FiniteSimplicialSet::Cell> cells;
  cells.push_back({"a", 0, {}});
  cells.push_back({"b", 0, {}});
  cells.push_back({"ab", 1, {SimplexRef{1, identity_op(0)}, SimplexRef{0, identity_op(0)}}});
  cells.push_back({"ba", 1, {SimplexRef{0, identity_op(0)}, SimplexRef{1, identity_op(0)}}});
  auto K = FiniteSimplicialSet::build(std::move(cells));
  return coskeleton1(K, dim_bound);
}

} // namespace

TEST_CASE("sieve operations") {
  CHECK(boundary_sieve(2).members.size() == 6);
  CHECK(horn_sieve(2, 1).members.size() == 5);
  CHECK(!horn_sieve(2, 1).contains({0, 2}));
  CHECK(horn_sieve(2, 1).contains({0, 1}));
  auto S = horn_sieve(2, 1);
  CHECK(implication(S, S) == max_sieve(2));
  CHECK(meet(boundary_sieve(2), max_sieve(2)) == boundary_sieve(2));
  CHECK(join(horn_sieve(2, 1), boundary_sieve(2)) == boundary_sieve(2));
  CHECK(is_cofibrant(S));
  CHECK(is_cofibrant(empty_sieve(3)));

  // action: pulling the boundary sieve back along a face gives everything
  CHECK(act(boundary_sieve(2), face_op(2, 0)) == max_sieve(1));
  // s_0^*(boundary of Delta^1) is Delta^2 minus interior and faces d_0, d_1
  auto sb = act(boundary_sieve(1), degen_op(1, 0));
  CHECK(sb.members.size() == 4);
  CHECK(sb.contains({0, 1}));
  CHECK(!sb.contains({0, 2}));
  CHECK(!sb.contains({1, 2}));

  CHECK(enumerate_sieves(1).size() == 5); // {}, {0}, {1}, {0,1}, max
}

TEST_CASE("sieve subcomplexes") {
  auto sc = sieve_subcomplex(horn_sieve(2, 1));
  CHECK(sc.space->cells_of_dim(0).size() == 3);
  CHECK(sc.space->cells_of_dim(1).size() == 2);
  CHECK(sc.inclusion.is_mono_levelwise(2));
}

TEST_CASE("classifier of identity and boundary inclusion") {
  auto d2 = standard_simplex(2);
  auto idm = SimplicialMap::identity(d2.get());
  auto cl = classify_mono(idm, 2);
  for (int n = 0; n <= 2; ++n)
    for (const auto& a : enumerate_level(*d2, n)) CHECK(cl.at(a) == max_sieve(n));

  auto bd = standard_object(StandardKind::Boundary, 2);
  auto inc = subcomplex_inclusion(&bd, d2.get());
  auto clb = classify_mono(inc, 3);
  CHECK(clb.at(ref_of_cell(*d2, *d2->cell_by_name("0.1.2"))) == boundary_sieve(2));
  // naturality and pullback property, levelwise
  for (int n = 0; n <= 2; ++n)
    for (const auto& a : enumerate_level(*d2, n)) {
      bool in_image = false;
      for (const auto& b : enumerate_level(bd, n))
        if (inc.apply(b) == a) in_image = true;
      CHECK((clb.at(a) == max_sieve(n)) == in_image);
      for (int m = 0; m <= 2; ++m)
        for (const auto& al : enumerate_ops(m, n))
          CHECK(clb.at(act(*d2, a, al)) == act(clb.at(a), al));
    }
  // uniqueness: any map classifying the same mono agrees levelwise
  // (forced: membership of e is determined by the pullback property)
}

TEST_CASE("the trivial-length sieve classifies r on M1") {
  // rho_n(theta) = { e : e cap Im(theta) = empty }, equivalently the
  // restriction of theta along e is the empty traversal
  for (int n = 0; n <= 2; ++n)
    for (const auto& t : t_levels0(n, 2)) {
      CofibrantSieve s{n, {}};
      for (const auto& e : max_sieve(n).members) {
        SimplicialOperator mono;
        mono.cod = n;
        mono.values = e;
        if (act(t, mono).length() == 0) s.members.insert(e);
      }
      CHECK(is_cofibrant(s));
      // e is a member iff e misses the image of the traversal
      for (const auto& e : max_sieve(n).members) {
        bool disjoint = true;
        for (int v : e)
          for (const auto& [l, sgn] : t.entries)
            if (l == v) disjoint = false;
        CHECK(s.contains(e) == disjoint);
      }
      // classifier property: maximal iff trivial
      CHECK((s == max_sieve(n)) == (t.length() == 0));
      // naturality
      for (const auto& al : enumerate_ops(1, n)) {
        CofibrantSieve s2{1, {}};
        for (const auto& e : max_sieve(1).members) {
          SimplicialOperator mono;
          mono.cod = 1;
          mono.values = e;
          if (act(act(t, al), mono).length() == 0) s2.members.insert(e);
        }
        CHECK(s2 == act(s, al));
      }
    }
}

TEST_CASE("partial map classifier of the point") {
  auto d0 = standard_simplex(0);
  auto f = SimplicialMap::identity(d0.get());
  auto pm = partial_map_classifier(f, 1);
  CHECK(enumerate_level(*pm.Mf.space, 0).size() == 2); // empty or maximal sieve
  // Rf o Lf = f
  CHECK(compose(pm.Rf, pm.Lf) == f);
  // comonad counit: delta then projections
  for (int id = 0; id < pm.Mf.space->cell_count(); ++id) {
    auto el = pm.decode(ref_of_cell(*pm.Mf.space, id));
    CHECK(is_cofibrant(el.sieve));
  }
}

TEST_CASE("partial map classifier of a fold map") {
  // B = two points, A = one point
  std::vector<FiniteSimplicialSet::Cell> cells;
  cells.push_back({"u", 0, {}});
  cells.push_back({"v", 0, {}});
  auto B = FiniteSimplicialSet::build(std::move(cells));
  auto A = standard_simplex(0);
  std::vector<SimplexRef> assign = {SimplexRef{0, identity_op(0)},
                                    SimplexRef{0, identity_op(0)}};
  SimplicialMap f(&B, A.get(), assign);
  auto pm = partial_map_classifier(f, 1);
  // level 0: sieve empty (1) or maximal with a choice of u/v (2)
  CHECK(enumerate_level(*pm.Mf.space, 0).size() == 3);
  CHECK(compose(pm.Rf, pm.Lf) == f);

  // monad mu on elements: collapsing nested partiality
  auto pmr = partial_map_classifier(pm.Rf, 1);
  for (int id : pmr.Mf.space->cells_of_dim(0)) {
    auto outer = pmr.decode(ref_of_cell(*pmr.Mf.space, id));
    // mu(a, sigma, chi): members where the inner element is total
    PartialElement glued;
    glued.base = outer.base;
    glued.sieve = CofibrantSieve{0, {}};
    for (const auto& [e, mref] : outer.partial) {
      auto inner = pm.decode(act(*pm.Mf.space, mref, identity_op(0)));
      if (inner.sieve == max_sieve(0)) {
        glued.sieve.members.insert(e);
        glued.partial.emplace(e, inner.partial.at(e));
      }
    }
    // Rf of the glued element equals RRf of the outer one
    CHECK(glued.base == pmr.Rf.apply(ref_of_cell(*pmr.Mf.space, id)));
    // the result is a valid element of Mf
    CHECK_NOTHROW(pm.encode(0, glued));
  }
}

TEST_CASE("boundary problems and the classical trivial fibration table") {
  // p : iso has a unique forced table
  auto d1 = standard_simplex(1);
  auto idm = SimplicialMap::identity(d1.get());
  auto r = build_trivfib_classical(idm, 2);
  REQUIRE(r.table.has_value());
  auto rep = verify_trivfib(idm, *r.table);
  CHECK(rep.passed);

  // p : codiscrete2 -> point succeeds and verifies at D = 3
  auto Y = codiscrete2(4);
  auto p = terminal_map(Y.space.get());
  auto res = build_trivfib_classical(p, 3);
  REQUIRE(res.table.has_value());
  auto rep2 = verify_trivfib(p, *res.table);
  if (!rep2.passed)
    for (const auto& f : rep2.failures) MESSAGE(f.what, " @ ", f.witness);
  CHECK(rep2.passed);

  // at n = 0 the canonically first vertex is chosen
  BoundaryProblem pr0;
  pr0.n = 0;
  pr0.x = SimplexRef{0, identity_op(0)};
  auto f0 = res.table->lookup(pr0);
  REQUIRE(f0.has_value());
  CHECK(f0->cell == Y.space->cells_of_dim(0)[0]);

  // mutation: replacing a filler with a wrong degenerate simplex fails
  BoundaryLiftTable mutated = *res.table;
  bool flipped = false;
  for (const auto& [key, pe] : res.table->entries()) {
    const auto& [prob, filler] = pe;
    if (prob.n != 1 || !is_mono(filler.epi)) continue;
    // a degenerate simplex over the same base that is not a filler
    for (const auto& cand : enumerate_level(*Y.space, 1)) {
      if (is_mono(cand.epi) || !(p.apply(cand) == prob.x)) continue;
      if (cand == filler) continue;
      mutated.store(prob, cand);
      flipped = true;
      break;
    }
    if (flipped) break;
  }
  REQUIRE(flipped);
  CHECK(!verify_trivfib(p, mutated).passed);

  // p : Delta^1 -> point fails with an unfillable boundary problem
  auto pd1 = terminal_map(d1.get());
  auto bad = build_trivfib_classical(pd1, 2);
  CHECK(!bad.table.has_value());
  CHECK(bad.unfillable.has_value());
}

TEST_CASE("extend_to_sieve is order independent") {
  auto Y = codiscrete2(4);
  auto p = terminal_map(Y.space.get());
  auto res = build_trivfib_classical(p, 3);
  REQUIRE(res.table.has_value());

  // S = the vertices only, T = the full boundary of Delta^2: the three edge
  // steps are independent, so several admissible orders exist
  CofibrantSieve S{2, {{0}, {1}, {2}}};
  auto T = boundary_sieve(2);
  auto Scx = sieve_subcomplex(S);
  auto Tcx = sieve_subcomplex(T);

  // partial map u on S: pick any map S -> Y
  auto us = enumerate_maps(*Scx.space, *Y.space, 2);
  REQUIRE(!us.empty());
  SieveProblem prob;
  prob.S = S;
  prob.T = T;
  prob.u = us.front();
  prob.x = terminal_map(Tcx.space.get());

  auto l1 = extend_to_sieve(p, *res.table, prob, Tcx);
  // S = T returns the given map
  SieveProblem same;
  same.S = T;
  same.T = T;
  same.u = l1;
  same.x = prob.x;
  CHECK(extend_to_sieve(p, *res.table, same, Tcx) == l1);

  // all admissible insertion orders agree (criterion: order confluence)
  std::vector<std::vector<int>> steps;
  for (const auto& e : T.members)
    if (!S.contains(e)) steps.push_back(e);
  std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  std::vector<std::vector<std::vector<int>>> orders;
  std::sort(steps.begin(), steps.end());
  do {
    bool admissible = true;
    CofibrantSieve cur = S;
    for (const auto& e : steps) {
      for (size_t i = 0; i < e.size() && admissible; ++i) {
        std::vector<int> fsub = e;
        fsub.erase(fsub.begin() + i);
        if (!fsub.empty() && !cur.contains(fsub)) admissible = false;
      }
      cur.members.insert(e);
    }
    if (admissible) orders.push_back(steps);
  } while (std::next_permutation(steps.begin(), steps.end()));
  REQUIRE(orders.size() >= 2);
  for (const auto& ord : orders)
    CHECK(extend_to_sieve(p, *res.table, prob, Tcx, &ord) == l1);
}

TEST_CASE("locality of trivial fibration structures") {
  // restrict-then-glue round trip on the codiscrete fibration
  auto Y = codiscrete2(4);
  auto p = terminal_map(Y.space.get());
  auto res = build_trivfib_classical(p, 2);
  REQUIRE(res.table.has_value());
  // pullback along any x : Delta^n -> Delta^0 is p itself (up to iso);
  // a compatible family is the restriction, and gluing returns fillers
  // computed in the fibre, which here is the identity operation.
  for (int n = 0; n <= 2; ++n)
    for (const auto& pr : enumerate_boundary_problems(p, n)) {
      auto f = res.table->lookup(pr);
      REQUIRE(f.has_value());
      // the glued filler equals the fibrewise filler
      CHECK(boundary_problem_valid(p, pr));
    }
}

TEST_CASE("trivfib json roundtrip") {
  auto Y = codiscrete2(3);
  auto p = terminal_map(Y.space.get());
  auto res = build_trivfib_classical(p, 2);
  REQUIRE(res.table.has_value());
  auto j = trivfib_to_json(*res.table);
  auto back = trivfib_from_json(&p, j);
  CHECK(back.entries().size() == res.table->entries().size());
  CHECK(verify_trivfib(p, back).passed);
}
