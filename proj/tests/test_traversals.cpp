#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kanforge/traversal.hpp"

#include <numeric>

using namespace kanforge;

namespace {

// Oracle for the action: construct the pullback of {1..l} -> [n] x {+,-}
// along alpha x 1 directly and read off the ordered edge list.
Traversal act_oracle(const Traversal& t, const SimplicialOperator& alpha) {
  Traversal out;
  out.dim = alpha.dom();
  for (const auto& [label, sgn] : t.entries) {
    std::vector<int> vs;
    for (int v = 0; v <= alpha.dom(); ++v)
      if (alpha.values[v] == label) vs.push_back(v);
    if (sgn)
      for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        out.entries.emplace_back(*it, sgn);
    else
      for (int v : vs) out.entries.emplace_back(v, sgn);
  }
  return out;
}

int position_oracle(const PointedTraversal& p, const SimplicialOperator& alpha) {
  // rightmost vertex adjacent to a copy of an edge strictly left of the
  // position, computed from the explicit pullback pair list
  int count = 0;
  for (int j = 0; j < p.position; ++j)
    count += static_cast<int>(op_preimage(alpha, p.traversal.entries[j].first).size());
  return count;
}

} // namespace

TEST_CASE("action examples") {
  for (int n = 0; n <= 2; ++n)
    for (int i = 0; i <= n; ++i) {
      Traversal t = make_traversal(n, {{i, true}});
      Traversal expect = make_traversal(n + 1, {{i + 1, true}, {i, true}});
      CHECK(act(t, degen_op(n, i)) == expect);
    }
  Traversal t = make_traversal(1, {{0, true}, {1, false}});
  CHECK(act(t, identity_op(1)) == t);
  CHECK(act(t, face_op(1, 0)) == make_traversal(0, {{0, false}}));
  CHECK(act(t, face_op(1, 0)) == act_oracle(t, face_op(1, 0)));
}

TEST_CASE("position action examples") {
  Traversal t0 = make_traversal(0, {{0, true}});
  PointedTraversal p1{t0, 1};
  auto q = act(p1, degen_op(0, 0));
  CHECK(q.traversal == make_traversal(1, {{1, true}, {0, true}}));
  CHECK(q.position == 2);

  PointedTraversal p0{t0, 0};
  CHECK(act(p0, degen_op(0, 0)).position == 0);

  Traversal empty;
  empty.dim = 2;
  CHECK(act(PointedTraversal{empty, 0}, degen_op(2, 1)).position == 0);
}

TEST_CASE("concat, segments, reverse") {
  Traversal e;
  e.dim = 1;
  Traversal t = make_traversal(1, {{0, true}});
  CHECK(concat(e, t) == t);
  CHECK(concat(t, make_traversal(1, {{0, false}})) ==
        make_traversal(1, {{0, true}, {0, false}}));

  Traversal abc = make_traversal(2, {{0, true}, {1, false}, {2, true}});
  CHECK(dom_segment({abc, 1}) == make_traversal(2, {{1, false}, {2, true}}));
  CHECK(codom_segment({abc, 1}) == make_traversal(2, {{0, true}}));

  CHECK(reverse(e) == e);
  CHECK(reverse(make_traversal(1, {{0, true}, {1, false}})) ==
        make_traversal(1, {{1, true}, {0, false}}));
  for (const auto& tr : t_levels0(2, 3)) CHECK(reverse(reverse(tr)) == tr);
}

TEST_CASE("functoriality of the action, exhaustively") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& t : t_levels0(n, 3))
      for (int m = 0; m <= 3; ++m)
        for (const auto& a : enumerate_ops(m, n)) {
          CHECK(act(t, a) == act_oracle(t, a));
          for (int p = 0; p <= t.length(); ++p)
            CHECK(act(PointedTraversal{t, p}, a).position ==
                  position_oracle({t, p}, a));
          for (int k = 0; k <= 3; ++k)
            for (const auto& b : enumerate_ops(k, m)) {
              CHECK(act(act(t, a), b) == act(t, compose_ops(b, a)));
              for (int p = 0; p <= t.length(); ++p) {
                auto two = act(act(PointedTraversal{t, p}, a), b);
                auto one = act(PointedTraversal{t, p}, compose_ops(b, a));
                CHECK(two == one);
              }
            }
        }
}

TEST_CASE("naturality of reversal") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& t : t_levels0(n, 3))
      for (int m = 0; m <= 2; ++m)
        for (const auto& a : enumerate_ops(m, n))
          CHECK(reverse(act(t, a)) == act(reverse(t), a));
}

TEST_CASE("realization of the empty traversal is the simplex") {
  for (int n = 0; n <= 3; ++n) {
    Traversal e;
    e.dim = n;
    auto r = realize(e);
    CHECK(find_iso(r->space(), *standard_simplex(n)).has_value());
    CHECK(r->source_sec == r->target_sec);
  }
}

TEST_CASE("realization of a single positive edge at dim 0 is the interval") {
  auto r = realize(make_traversal(0, {{0, true}}));
  CHECK(find_iso(r->space(), *standard_simplex(1)).has_value());
  // s is the position-0 vertex, t the position-1 vertex
  CHECK(r->index_of(r->source_sec.assignment()[0]).second == 0);
  CHECK(r->index_of(r->target_sec.assignment()[0]).second == 1);
}

TEST_CASE("sections are sections of the projection") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& t : t_levels0(n, 2)) {
      auto r = realize(t);
      auto js = compose(r->to_base, r->source_sec);
      auto jt = compose(r->to_base, r->target_sec);
      auto idn = SimplicialMap::identity(&r->base());
      CHECK(js == idn);
      CHECK(jt == idn);
    }
}

TEST_CASE("pullback index bijection") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& t : t_levels0(n, 2)) {
      auto r = realize(t);
      for (int m = 0; m <= 4; ++m) {
        long expected = 0;
        for (const auto& a : enumerate_ops(m, n)) expected += act(t, a).length() + 1;
        auto level = enumerate_level(r->space(), m);
        CHECK(static_cast<long>(level.size()) == expected);
        for (const auto& x : level) {
          auto [alpha, pos] = r->index_of(x);
          CHECK(r->ref_of(alpha, pos) == x);
          // index bijection commutes with the projection to the base
          CHECK(r->to_base.apply(x) == ref_of_op(r->base(), alpha));
        }
      }
    }
}

TEST_CASE("realization is the colimit of the zigzag of simplices") {
  // oracle: glue the zigzag by iterated pushouts and compare
  for (int n = 0; n <= 2; ++n)
    for (const auto& t : t_levels0(n, 2)) {
      if (t.length() == 0) continue;
      auto whole = realize(t);

      // build the chain: start from the first edge's realization, then glue
      // the next edge's realization along the shared vertex simplex
      Traversal pre;
      pre.dim = n;
      pre.entries = {t.entries[0]};
      auto acc = realize(pre);
      std::shared_ptr<const FiniteSimplicialSet> acc_space =
          std::shared_ptr<const FiniteSimplicialSet>(acc->mat.space);
      SimplicialMap acc_end = acc->target_sec; // Delta^n -> acc
      std::vector<std::shared_ptr<const FiniteSimplicialSet>> keep;
      for (int k = 1; k < t.length(); ++k) {
        Traversal step;
        step.dim = n;
        step.entries = {t.entries[k]};
        auto rs = realize(step);
        auto po = pushout_along_mono(acc_end, rs->source_sec);
        acc_end = compose(po.inj_from_f_target, rs->target_sec);
        acc_space = po.space;
        keep.push_back(po.space);
      }
      CHECK(find_iso(*acc_space, whole->space()).has_value());
    }
}

TEST_CASE("concatenation realization glues along t = s") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& a : t_levels0(n, 2))
      for (const auto& b : t_levels0(n, 1)) {
        if (a.length() + b.length() > 3) continue;
        auto ra = realize(a), rb = realize(b), rw = realize(concat(a, b));
        auto po = pushout_along_mono(ra->target_sec, rb->source_sec);
        // canonical comparison map out of the pushout
        auto i1 = concat_incl_first(*ra, *rw);
        auto i2 = concat_incl_second(*rb, *rw);
        CHECK(compose(i1, ra->target_sec) == compose(i2, rb->source_sec));
        std::vector<SimplexRef> assign(po.space->cell_count());
        for (int id = 0; id < ra->space().cell_count(); ++id)
          assign[po.inj_from_m_target.assignment()[id].cell] =
              i1.assignment()[id];
        for (int id = 0; id < rb->space().cell_count(); ++id) {
          SimplexRef pr = po.inj_from_f_target.assignment()[id];
          assign[pr.cell] = i2.assignment()[id];
        }
        SimplicialMap cmp(po.space.get(), &rw->space(), assign);
        CHECK(cmp.is_mono_levelwise(n + 1));
        CHECK(po.space->cell_count() == rw->space().cell_count());
      }
}

TEST_CASE("T0 level counts") {
  CHECK(t_levels0(0, 2).size() == 1 + 2 + 4);
  for (int n = 0; n <= 3; ++n) {
    auto ts = t_levels0(n, 2);
    Traversal e;
    e.dim = n;
    CHECK(std::find(ts.begin(), ts.end(), e) != ts.end());
  }
  // closure of face actions without length growth
  for (const auto& t : t_levels0(2, 2))
    for (int i = 0; i <= 2; ++i)
      CHECK(act(t, face_op(2, i)).length() <= t.length());
}

TEST_CASE("dot emission is well formed") {
  auto t = make_traversal(1, {{1, true}, {0, true}});
  auto s = traversal_dot(t);
  CHECK(s.find("digraph") != std::string::npos);
  auto r = realize(t);
  CHECK(realization_dot(*r).find("digraph") != std::string::npos);
}
