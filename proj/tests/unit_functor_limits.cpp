#include "doctest.h"

#include "catspec/builders.hpp"
#include "catspec/functor.hpp"
#include "catspec/limits.hpp"

using namespace catspec;

TEST_CASE("identity functor analysis") {
  auto fs = finset_skeleton(2);
  auto a = analyze_functor(identity_functor(fs.cat));
  CHECK(a.functorial);
  CHECK(a.faithful);
  CHECK(a.full);
  CHECK(a.essentiallySurjective);
  CHECK(a.equivalence);
  REQUIRE(a.quasi_inverse.has_value());
  CHECK(validate_functor(*a.quasi_inverse).ok());
  CHECK(validate_nattrans(*a.unit).ok());
  CHECK(validate_nattrans(*a.counit).ok());
}

TEST_CASE("injections inclusion is faithful but not full") {
  auto fs = finset_skeleton(4);
  auto inj = finset_injections(fs);
  FunctorData incl;
  incl.name = "incl";
  incl.src = inj;
  incl.dst = fs.cat;
  incl.omap.resize(inj->object_count());
  incl.mmap.resize(inj->morphism_count());
  for (int x = 0; x < inj->object_count(); ++x)
    incl.omap[x] = fs.cat->object(inj->object_name(x));
  for (int m = 0; m < inj->morphism_count(); ++m)
    incl.mmap[m] = fs.cat->morphism(inj->morphism_name(m));
  auto a = analyze_functor(incl);
  CHECK(a.functorial);
  CHECK(a.faithful);
  CHECK_FALSE(a.full);
  // the witness names a non-injective map outside the image
  CHECK(a.witness_full.size() == 3);
}

TEST_CASE("collapse functors split full and faithful") {
  auto one = one_object_category();
  // 𝟚 -> 𝟙 is faithful (hom-sets are singletons) but not full: the empty
  // hom(o1,o0) cannot hit the identity of the point.
  auto two = walking_arrow();
  auto a = analyze_functor(constant_functor(two, one, 0));
  CHECK(a.functorial);
  CHECK_FALSE(a.full);
  CHECK(a.faithful);
  // BZ2 -> 𝟙 merges id and g: full but not faithful.
  auto bz2 = cyclic_group_category(2);
  auto b = analyze_functor(constant_functor(bz2, one, 0));
  CHECK(b.functorial);
  CHECK(b.full);
  CHECK_FALSE(b.faithful);
}

TEST_CASE("comma of identities on the walking arrow") {
  auto two = walking_arrow();
  auto c = comma_category(identity_functor(two), identity_functor(two));
  CHECK(c.cat->object_count() == 3);  // one object per arrow of 𝟚
  CHECK(validate_category(*c.cat).ok());
  CHECK(validate_functor(c.projA).ok());
  CHECK(validate_functor(c.projB).ok());
}

TEST_CASE("comma along a point gives a slice") {
  auto fs = finset_skeleton(2);
  auto one = one_object_category();
  auto pick = constant_functor(one, fs.cat, fs.cat->object("s2"), "pick_s2");
  auto sl = comma_category(identity_functor(fs.cat), pick);
  CHECK(validate_category(*sl.cat).ok());
  // objects are the arrows into s2
  int expected = 0;
  for (int x = 0; x < fs.cat->object_count(); ++x)
    expected += static_cast<int>(fs.cat->hom(x, fs.cat->object("s2")).size());
  CHECK(sl.cat->object_count() == expected);
}

TEST_CASE("terminal and products in FinSet4") {
  auto fs = finset_skeleton(4);
  Diagram empty;
  auto terms = find_limits(*fs.cat, LimitKind::Terminal, empty);
  REQUIRE_FALSE(terms.empty());
  for (const auto& w : terms) CHECK(fs.cat->object_name(w.apex) == "s1");

  auto prods = find_limits(*fs.cat, LimitKind::Product,
                           product_diagram(fs.cat->object("s2"), fs.cat->object("s2")));
  REQUIRE_FALSE(prods.empty());
  for (const auto& w : prods) CHECK(fs.cat->object_name(w.apex) == "s4");
}

TEST_CASE("pullback in the walking arrow") {
  auto two = walking_arrow();
  int u = two->morphism("u");
  auto ws = find_limits(*two, LimitKind::Pullback, pullback_diagram(*two, u, u));
  REQUIRE_FALSE(ws.empty());
  for (const auto& w : ws) CHECK(two->object_name(w.apex) == "o0");
}

TEST_CASE("no witness survives a competitor with zero or two mediators") {
  // In the discrete two-object category there is no product of (a, b).
  auto d = discrete_category("d2", {"a", "b"});
  auto ws = find_limits(*d, LimitKind::Product, product_diagram(0, 1));
  CHECK(ws.empty());
}

TEST_CASE("sets cartesian context picks canonical witnesses") {
  auto fs = finset_skeleton(4);
  auto ctx = sets_cartesian_context(fs);
  REQUIRE(ctx.terminal >= 0);
  CHECK(fs.cat->object_name(ctx.terminal) == "s1");
  REQUIRE(ctx.has_product(fs.cat->object("s2"), fs.cat->object("s2")));
  const auto& w = ctx.prod(fs.cat->object("s2"), fs.cat->object("s2"));
  CHECK(fs.cat->object_name(w.apex) == "s4");
  // tupling reproduces the diagonal
  int id2 = fs.cat->identity(fs.cat->object("s2"));
  int diag = ctx.tuple(id2, id2);
  CHECK(fs.cat->compose(w.pi1, diag) == id2);
  CHECK(fs.cat->compose(w.pi2, diag) == id2);
}

TEST_CASE("category isomorphism search") {
  auto p1 = poset_category("p1", {"a", "b"}, {{"a", "b"}});
  auto p2 = poset_category("p2", {"x", "y"}, {{"y", "x"}});
  auto iso = find_category_isomorphism(p1, p2);
  REQUIRE(iso.has_value());
  CHECK(validate_functor(*iso).ok());
  auto d2 = discrete_category("d2", {"x", "y"});
  CHECK_FALSE(find_category_isomorphism(p1, d2).has_value());
}
