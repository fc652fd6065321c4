#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "tensorloc/category.hpp"

using namespace tensorloc;

namespace {

// Poset as a category: one morphism a -> b per related pair.
FinCategory poset_category(int n, const std::vector<std::vector<bool>>& leq) {
  FinCategory c;
  for (int i = 0; i < n; ++i) c.add_object("p" + std::to_string(i));
  std::vector<std::vector<Mor>> m(n, std::vector<Mor>(n, kNoMor));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j])
        m[i][j] = c.add_morphism("le_" + std::to_string(i) + "_" + std::to_string(j),
                                 i, j);
  for (int i = 0; i < n; ++i) c.set_identity(i, m[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k]) c.set_compose(m[j][k], m[i][j], m[i][k]);
  c.finalize();
  return c;
}

FinCategory chain_category(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return poset_category(n, leq);
}

}  // namespace

TEST_CASE("one-object one-morphism category is valid") {
  FinCategory c;
  Obj a = c.add_object("A");
  Mor id = c.add_morphism("idA", a, a);
  c.set_identity(a, id);
  c.set_compose(id, id, id);
  c.finalize();
  CHECK(c.validate().ok());
  CHECK(c.compose(id, id) == id);
}

TEST_CASE("3-element chain poset validates by triple enumeration") {
  FinCategory c = chain_category(3);
  auto rep = c.validate();
  CHECK(rep.ok());
  CHECK(rep.counts().at("compose/assoc").checked > 0);
  CHECK(rep.total_skipped() == 0);
}

TEST_CASE("planted associativity break is reported with the triple named") {
  // Free-ish category with enough room to plant h∘(g∘f) ≠ (h∘g)∘f.
  FinCategory c;
  Obj a = c.add_object("A");
  Mor id = c.add_morphism("id", a, a);
  Mor e = c.add_morphism("e", a, a);
  Mor f = c.add_morphism("f", a, a);
  Mor g = c.add_morphism("g", a, a);
  Mor x = c.add_morphism("x", a, a);
  Mor y = c.add_morphism("y", a, a);
  c.set_identity(a, id);
  auto def = [&](Mor p, Mor q, Mor r) { c.set_compose(p, q, r); };
  for (Mor m : {e, f, g, x, y}) {
    def(id, m, m);
    def(m, id, m);
  }
  def(id, id, id);
  std::set<std::pair<Mor, Mor>> defined;
  auto plant = [&](Mor p, Mor q, Mor r) {
    def(p, q, r);
    defined.insert({p, q});
  };
  plant(f, e, x);   // f∘e = x
  plant(g, f, y);   // g∘f = y
  plant(g, x, x);   // g∘(f∘e) = x
  plant(y, e, y);   // (g∘f)∘e = y  -- differs, planted
  // remaining pairs: absorb to x to keep the table total
  for (Mor p : {e, f, g, x, y})
    for (Mor q : {e, f, g, x, y})
      if (!defined.count({p, q})) def(p, q, x);
  c.finalize();
  auto rep = c.validate();
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& v : rep.violations())
    if (v.law == "compose/assoc" && v.detail.find("g") != std::string::npos &&
        v.detail.find("f") != std::string::npos &&
        v.detail.find("e") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("check_commutes basics") {
  FinCategory c = chain_category(3);
  Mor id0 = c.identity(0);
  std::vector<Mor> p1{id0}, p2{id0};
  CHECK(check_commutes(c, p1, p2));

  Mor m01 = c.hom(0, 1).at(0);
  Mor m12 = c.hom(1, 2).at(0);
  Mor m02 = c.hom(0, 2).at(0);
  std::vector<Mor> path{m01, m12}, direct{m02};
  CHECK(check_commutes(c, path, direct));

  std::vector<Mor> bad{m12};
  CHECK_THROWS_AS(check_commutes(c, bad, direct), NotComposable);
}

TEST_CASE("two distinct parallel morphisms do not commute") {
  FinCategory c;
  Obj a = c.add_object("A"), b = c.add_object("B");
  Mor ida = c.add_morphism("idA", a, a), idb = c.add_morphism("idB", b, b);
  Mor f = c.add_morphism("f", a, b), g = c.add_morphism("g", a, b);
  c.set_identity(a, ida);
  c.set_identity(b, idb);
  for (Mor m : {f, g}) {
    c.set_compose(m, ida, m);
    c.set_compose(idb, m, m);
  }
  c.set_compose(ida, ida, ida);
  c.set_compose(idb, idb, idb);
  c.finalize();
  REQUIRE(c.validate().ok());
  std::vector<Mor> pf{f}, pg{g};
  CHECK_FALSE(check_commutes(c, pf, pg));
}

TEST_CASE("pullbacks in a poset with meets are meet squares") {
  // diamond: 0 < a,b < 1 with meets
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  // order: 0=bottom, 1=a, 2=b, 3=top
  for (int i = 0; i < 4; ++i) leq[i][i] = true;
  leq[0][1] = leq[0][2] = leq[0][3] = true;
  leq[1][3] = leq[2][3] = true;
  FinCategory c = poset_category(4, leq);
  REQUIRE(c.validate().ok());
  auto le = [&](int i, int j) { return c.hom(i, j).at(0); };

  // apex = meet(a,b) = 0: pullback of a -> top <- b
  Square meet_square{.top = le(0, 2), .left = le(0, 1), .bottom = le(1, 3),
                     .right = le(2, 3)};
  CHECK(is_pullback(c, meet_square));
  // symmetric in the two legs
  Square swapped{.top = le(0, 1), .left = le(0, 2), .bottom = le(2, 3),
                 .right = le(1, 3)};
  CHECK(is_pullback(c, swapped));
  // pushout: apex side — join square 1 <- 0 -> 2 with cobase 3
  CHECK(is_pushout(c, meet_square));

  // planted failure: apex strictly below the meet is still a cone but not
  // universal when the meet itself exists elsewhere... use chain: apex 0 over
  // legs (1 -> 2 <- 1) where true meet is 1.
  FinCategory chain = chain_category(3);
  auto cle = [&](int i, int j) { return chain.hom(i, j).at(0); };
  Square bad{.top = cle(0, 1), .left = cle(0, 1), .bottom = cle(1, 2),
             .right = cle(1, 2)};
  CHECK_FALSE(is_pullback(chain, bad));
}

TEST_CASE("is_pullback rejects non-commuting squares") {
  // parallel pair f ≠ g: square with legs closing over them cannot commute
  FinCategory c;
  Obj a = c.add_object("A"), b = c.add_object("B");
  Mor ida = c.add_morphism("idA", a, a), idb = c.add_morphism("idB", b, b);
  Mor f = c.add_morphism("f", a, b), g = c.add_morphism("g", a, b);
  c.set_identity(a, ida);
  c.set_identity(b, idb);
  for (Mor m : {f, g}) {
    c.set_compose(m, ida, m);
    c.set_compose(idb, m, m);
  }
  c.set_compose(ida, ida, ida);
  c.set_compose(idb, idb, idb);
  c.finalize();
  Square s{.top = f, .left = g, .bottom = idb, .right = idb};
  CHECK_THROWS_AS(is_pullback(c, s), NonCommutingSquare);
}

TEST_CASE("functors compose and validate; naturality squares commute") {
  FinCategory c2 = chain_category(2);
  FinCategory c3 = chain_category(3);
  // embed chain2 into chain3 at the bottom
  Functor f(&c2, &c3);
  f.map_object(0, 0);
  f.map_object(1, 1);
  for (Mor m = 0; m < c2.morphism_count(); ++m) {
    Obj d = c2.dom(m), cd = c2.cod(m);
    f.map_morphism(m, c3.hom(d, cd).at(0));
  }
  CHECK(f.validate().ok());
  // shift-up endofunctor on chain3 is not definable as a poset map into
  // smaller chain; instead compose with identity and check validity persists
  Functor g = Functor::identity(c3);
  Functor gf = Functor::composed(g, f);
  CHECK(gf.validate().ok());
  CHECK(gf.equal_tables(f));

  // natural transformation: inclusion-at-bottom => inclusion shifted by leq
  Functor h(&c2, &c3);
  h.map_object(0, 1);
  h.map_object(1, 2);
  for (Mor m = 0; m < c2.morphism_count(); ++m)
    h.map_morphism(m, c3.hom(c2.dom(m) + 1, c2.cod(m) + 1).at(0));
  REQUIRE(h.validate().ok());
  NatTransform eta(f, h);
  eta.set_component(0, c3.hom(0, 1).at(0));
  eta.set_component(1, c3.hom(1, 2).at(0));
  CHECK(eta.validate().ok());
  // the two legs of each naturality square commute as paths
  Mor m01 = c2.hom(0, 1).at(0);
  std::vector<Mor> leg1{f.on_morphism(m01), eta.component(1)};
  std::vector<Mor> leg2{eta.component(0), h.on_morphism(m01)};
  CHECK(check_commutes(c3, leg1, leg2));
}

TEST_CASE("composing enumerated paths matches endpoints") {
  FinCategory c = chain_category(4);
  for (Obj a = 0; a < c.object_count(); ++a)
    for (Mor f : c.morphisms_from(a))
      for (Mor g : c.morphisms_from(c.cod(f))) {
        std::vector<Mor> path{f, g};
        Mor r = c.compose_path(path);
        CHECK(c.dom(r) == a);
        CHECK(c.cod(r) == c.cod(g));
      }
}

TEST_CASE("opposite category validates and reverses composition") {
  FinCategory c = chain_category(3);
  FinCategory op = c.opposite();
  CHECK(op.validate().ok());
  Mor m01 = c.hom(0, 1).at(0), m12 = c.hom(1, 2).at(0);
  CHECK(op.compose(m01, m12) == c.compose(m12, m01));
}
