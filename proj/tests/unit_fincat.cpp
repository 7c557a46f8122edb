#include "doctest.h"

#include "catspec/builders.hpp"
#include "catspec/fincat.hpp"

using namespace catspec;

TEST_CASE("walking arrow validates") {
  auto two = walking_arrow();
  CHECK(two->object_count() == 2);
  CHECK(two->morphism_count() == 3);  // u plus the two identities
  CHECK(validate_category(*two).ok());
}

TEST_CASE("planted associativity violation is reported with its triple") {
  // Free-ish category on x -> y -> z -> w with one deliberately wrong triple.
  FinCatBuilder b("broken");
  for (auto o : {"x", "y", "z", "w"}) b.add_object(o);
  b.add_morphism("f", "x", "y");
  b.add_morphism("g", "y", "z");
  b.add_morphism("h", "z", "w");
  b.add_morphism("gf", "x", "z");
  b.add_morphism("hg", "y", "w");
  b.add_morphism("hgf", "x", "w");
  b.add_morphism("hgf2", "x", "w");
  b.set_compose("g", "f", "gf");
  b.set_compose("h", "g", "hg");
  b.set_compose("h", "gf", "hgf");
  b.set_compose("hg", "f", "hgf2");  // breaks h∘(g∘f) = (h∘g)∘f
  auto c = b.build();
  auto report = validate_category(*c);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.code == "assoc") {
      found = true;
      CHECK(v.witness == std::vector<std::string>{"h", "g", "f"});
    }
  }
  CHECK(found);
}

TEST_CASE("FinSet4 is a category and has the expected hom sizes") {
  auto fs = finset_skeleton(4);
  CHECK(fs.cat->morphism_count() == 499);
  CHECK(validate_category(*fs.cat, Limits{}).ok());
  CHECK(hom_set(*fs.cat, "s2", "s3").size() == 9);  // 3^2 functions
  CHECK(hom_set(*fs.cat, "s1", "s0").empty());
  // hom(X,X) contains the identity
  for (int x = 0; x < fs.cat->object_count(); ++x) {
    auto hs = fs.cat->hom(x, x);
    bool has_id = false;
    for (int m : hs) has_id |= fs.cat->is_identity(m);
    CHECK(has_id);
  }
}

TEST_CASE("isomorphisms come in inverse pairs") {
  auto fs = finset_skeleton(4);
  auto isos = isomorphisms(*fs.cat, "s2", "s2");
  CHECK(isos.size() == 2);  // permutations of a 2-set
  for (auto [f, g] : isos) {
    CHECK(inverse_of(*fs.cat, f) == g);
    CHECK(inverse_of(*fs.cat, g) == f);
  }
  CHECK(isomorphisms(*fs.cat, "s2", "s3").empty());
  auto two = walking_arrow();
  CHECK(isomorphisms(*two, "o0", "o1").empty());
  auto bz4 = cyclic_group_category(4);
  CHECK(isomorphisms(*bz4, "b", "b").size() == 4);
}

TEST_CASE("guardrail refuses oversized input with a distinct error") {
  auto fs = finset_skeleton(4);
  Limits tight;
  tight.max_morphisms = 10;
  CHECK_THROWS_AS(validate_category(*fs.cat, tight), guardrail_error);
}

TEST_CASE("poset and chaotic builders validate") {
  auto p = poset_category("v", {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK(validate_category(*p).ok());
  CHECK(p->morphism_count() == 5);
  auto k = chaotic_category("k3", {"x", "y", "z"});
  CHECK(validate_category(*k).ok());
  CHECK(k->morphism_count() == 9);
}

TEST_CASE("finset injections form a subcategory") {
  auto fs = finset_skeleton(4);
  auto inj = finset_injections(fs);
  CHECK(validate_category(*inj).ok());
  CHECK(inj->morphism_count() == 89);
}

TEST_CASE("arrow category composes componentwise") {
  auto two = walking_arrow();
  auto arr = arrow_category(two);
  CHECK(arr.cat->object_count() == 3);
  auto rep = validate_category(*arr.cat, Limits{});
  CHECK(rep.ok());
}
