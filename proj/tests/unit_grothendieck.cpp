#include "doctest.h"

#include "catspec/grothendieck.hpp"
#include "support/fixtures.hpp"
#include "support/random_fixtures.hpp"

using namespace catspec;
using namespace catspec::fixtures;
using namespace catspec::testgen;

namespace {

Pseudofunctor constant_point_pseudofunctor(CatPtr base, bool contravariant) {
  Pseudofunctor F;
  F.name = "const1";
  F.base = base;
  F.contravariant = contravariant;
  auto one = one_object_category("v");
  for (int b = 0; b < base->object_count(); ++b) F.value.push_back(one);
  for (int f = 0; f < base->morphism_count(); ++f) F.action.push_back(identity_functor(one));
  F.id_iso.assign(base->object_count(), {one->identity(0)});
  for (int f = 0; f < base->morphism_count(); ++f)
    for (int g : base->out_of(base->cod(f))) F.comp_iso[{g, f}] = {one->identity(0)};
  return F;
}

}  // namespace

TEST_CASE("random pseudofunctors validate") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    auto base = random_poset_base(rng, 4);
    auto F = random_pseudofunctor(rng, base, 3);
    CHECK(validate_pseudofunctor(F).ok());
  }
}

TEST_CASE("grothendieck of the constant point pseudofunctor is the base") {
  auto base = poset_category("p3", {"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
  auto F = constant_point_pseudofunctor(base, true);
  REQUIRE(validate_pseudofunctor(F).ok());
  auto g = grothendieck(F);
  CHECK(find_category_isomorphism(g.total, base).has_value());
  CHECK(classify(g.fibered()).fibration);
}

TEST_CASE("grothendieck on the walking arrow matches the hand count") {
  // base 𝟚, F(o1) = discrete 2-object, F(o0) = point, F(u) constant
  auto two = walking_arrow();
  auto pt = one_object_category("c");
  auto d2 = discrete_category("D", {"a", "b"});
  Pseudofunctor F;
  F.name = "Fex";
  F.base = two;
  F.contravariant = true;
  F.value = {pt, d2};  // o0, o1
  F.action.resize(two->morphism_count());
  F.action[two->morphism("u")] = constant_functor(d2, pt, 0, "c0");
  F.action[two->identity(0)] = identity_functor(pt);
  F.action[two->identity(1)] = identity_functor(d2);
  F.id_iso = {{pt->identity(0)}, {d2->identity(0), d2->identity(1)}};
  const int u = two->morphism("u");
  F.comp_iso[{u, two->identity(0)}] = {pt->identity(0), pt->identity(0)};
  F.comp_iso[{two->identity(1), u}] = {pt->identity(0), pt->identity(0)};
  F.comp_iso[{two->identity(0), two->identity(0)}] = {pt->identity(0)};
  F.comp_iso[{two->identity(1), two->identity(1)}] = {d2->identity(0), d2->identity(1)};
  REQUIRE(validate_pseudofunctor(F).ok());
  auto g = grothendieck(F);
  CHECK(g.total->object_count() == 3);
  CHECK(g.total->morphism_count() == 5);  // 3 identities + one arrow per target over u
  int nonvertical = 0;
  for (int m = 0; m < g.total->morphism_count(); ++m)
    if (g.mor_base[m] == u) ++nonvertical;
  CHECK(nonvertical == 2);
  CHECK(validate_category(*g.total).ok());
  CHECK(classify(g.fibered()).fibration);
}

TEST_CASE("covariant grothendieck classifies as a cofibration") {
  auto two = walking_arrow();
  auto d2 = discrete_category("D", {"a", "b"});
  auto pt = one_object_category("c");
  Pseudofunctor F;
  F.name = "Fco";
  F.base = two;
  F.contravariant = false;
  F.value = {d2, pt};  // covariant: action along u : F(o0) -> F(o1)
  F.action.resize(two->morphism_count());
  F.action[two->morphism("u")] = constant_functor(d2, pt, 0, "c0");
  F.action[two->identity(0)] = identity_functor(d2);
  F.action[two->identity(1)] = identity_functor(pt);
  F.id_iso = {{d2->identity(0), d2->identity(1)}, {pt->identity(0)}};
  const int u = two->morphism("u");
  F.comp_iso[{u, two->identity(0)}] = {pt->identity(0), pt->identity(0)};
  F.comp_iso[{two->identity(1), u}] = {pt->identity(0), pt->identity(0)};
  F.comp_iso[{two->identity(0), two->identity(0)}] = {d2->identity(0), d2->identity(1)};
  F.comp_iso[{two->identity(1), two->identity(1)}] = {pt->identity(0)};
  REQUIRE(validate_pseudofunctor(F).ok());
  auto g = grothendieck(F);
  CHECK(validate_category(*g.total).ok());
  auto cls = classify(g.fibered());
  CHECK(cls.cofibration);
}

TEST_CASE("grothendieck output validates for random pseudofunctors") {
  for (std::uint32_t seed = 21; seed <= 26; ++seed) {
    Rng rng(seed);
    auto base = random_poset_base(rng, 3);
    auto F = random_pseudofunctor(rng, base, 3);
    auto g = grothendieck(F);
    CHECK(validate_category(*g.total).ok());
    CHECK(classify(g.fibered()).fibration);
  }
}

TEST_CASE("choose_cleavage is deterministic and identity-preferring") {
  Rng rng(31);
  auto base = random_poset_base(rng, 3);
  auto F = random_chaotic_pseudofunctor(rng, base, 3);
  auto g = grothendieck(F);
  auto p = g.fibered();
  auto c1 = choose_cleavage(p);
  auto c2 = choose_cleavage(p);
  CHECK(c1.chosen == c2.chosen);
  for (int b = 0; b < base->object_count(); ++b)
    for (int e = 0; e < g.total->object_count(); ++e)
      if (g.obj_base[e] == b) CHECK(c1.lift_of(base->identity(b), e) == g.total->identity(e));
  CHECK(validate_cleavage(p, c1).ok());
}

TEST_CASE("choose_cleavage names the unliftable arrow") {
  auto d2 = discrete_over_two();
  CHECK_THROWS_WITH_AS(choose_cleavage(d2), doctest::Contains("'u'"), spec_error);
}

TEST_CASE("roundtrip on the identity fibration and on cod of the arrow category") {
  auto two = walking_arrow();
  auto idp = make_fibered(identity_functor(two));
  auto rt = roundtrip_check(idp);
  CHECK(rt.ok);

  auto arr = arrow_category(two);
  auto p = make_fibered(cod_functor(arr));
  REQUIRE(classify(p).fibration);  // 𝟚 has pullbacks (meets)
  auto rt2 = roundtrip_check(p);
  CHECK(rt2.ok);
}

TEST_CASE("strict pseudofunctors round trip through an isomorphism of categories") {
  Rng rng(41);
  auto base = random_poset_base(rng, 3);
  auto F = random_strict_poset_pseudofunctor(rng, base, 3);
  REQUIRE(validate_pseudofunctor(F).ok());
  auto g = grothendieck(F);
  auto p = g.fibered();
  auto ext = to_pseudofunctor(p, choose_cleavage(p));
  REQUIRE(validate_pseudofunctor(ext.F).ok());
  // pointwise isomorphic values
  for (int b = 0; b < base->object_count(); ++b)
    CHECK(find_category_isomorphism(F.value[b], ext.F.value[b]).has_value());
  // and for strict input the comparison functor is an isomorphism of
  // categories, not merely an equivalence
  auto g2 = grothendieck(ext.F);
  CHECK(find_category_isomorphism(g2.total, g.total).has_value());
}

TEST_CASE("fiber of a grothendieck fibration is isomorphic to the pseudofunctor value") {
  Rng rng(43);
  auto base = random_poset_base(rng, 3);
  auto F = random_chaotic_pseudofunctor(rng, base, 3);
  auto g = grothendieck(F);
  auto p = g.fibered();
  for (int b = 0; b < base->object_count(); ++b) {
    auto fb = fiber(p, b);
    CHECK(find_category_isomorphism(fb.cat, F.value[b]).has_value());
  }
}

TEST_CASE("transport recovers the pseudofunctor action up to natural iso") {
  Rng rng(47);
  auto base = random_poset_base(rng, 3);
  auto F = random_chaotic_pseudofunctor(rng, base, 2);
  auto g = grothendieck(F);
  auto p = g.fibered();
  auto ext = to_pseudofunctor(p, choose_cleavage(p));
  for (int f = 0; f < base->morphism_count(); ++f) {
    // compare through the fiber<->value isomorphisms
    auto iso_src = find_category_isomorphism(F.value[base->cod(f)], ext.F.value[base->cod(f)]);
    auto iso_dst = find_category_isomorphism(ext.F.value[base->dom(f)], F.value[base->dom(f)]);
    REQUIRE(iso_src.has_value());
    REQUIRE(iso_dst.has_value());
    auto conj = compose_functors(*iso_dst, compose_functors(ext.F.action[f], *iso_src));
    CHECK(naturally_isomorphic(conj, F.action[f]));
  }
}
