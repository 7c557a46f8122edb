#pragma once

#include <string>
#include <vector>

#include "catspec/fincat.hpp"

namespace catspec {

// A finite-sets category carried alongside its FinCat skeleton: every object
// has an explicit element list and every morphism an explicit function table
// (func[m][i] = index of the image of element i of dom(m)).
struct FinSetCat {
  CatPtr cat;
  std::vector<std::vector<std::string>> elements;  // per object
  std::vector<std::vector<int>> func;              // per morphism
  std::unordered_map<std::string, int> table_index;  // table_key -> morphism

  int element_index(int obj, const std::string& e) const;
  // Composes function tables; used for sanity checks against cat->compose.
  std::vector<int> table_compose(int g, int f) const;

  static std::string table_key(int dom, int cod, const std::vector<int>& table);
  // Morphism with the given function table, or -1.
  int by_table(int dom, int cod, const std::vector<int>& table) const;
  void build_table_index();
};

// Walking arrow 𝟚: objects o0, o1; one non-identity morphism u : o0 -> o1.
CatPtr walking_arrow();

// Terminal category 𝟙 with a single object.
CatPtr one_object_category(const std::string& obj = "pt");

// Discrete category on the given object names.
CatPtr discrete_category(const std::string& name, const std::vector<std::string>& objects);

// Chaotic (indiscrete) category: exactly one morphism between any ordered
// pair of objects.
CatPtr chaotic_category(const std::string& name, const std::vector<std::string>& objects);

// Poset category from a reflexive-transitive order given as "x <= y" pairs
// over the listed elements (the closure is taken here).
CatPtr poset_category(const std::string& name, const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& leq);

// One-object groupoid for the cyclic group Z/n; morphisms g0..g{n-1}.
CatPtr cyclic_group_category(int n, const std::string& name = "");

// Skeleton of finite sets of size 0..n with all functions.  Objects are
// s0..sn, elements e0..e{k-1}.  Morphism names encode the image word.
FinSetCat finset_skeleton(int n, const std::string& name = "");

// Subcategory of injective maps of finset_skeleton(n); shares object names.
// `ambient` must be the matching skeleton.
CatPtr finset_injections(const FinSetCat& ambient);

// Arrow category C^→ : objects are the morphisms of C, morphisms are the
// commuting squares (u,v).  Composition is computed componentwise through a
// backend, so large bases stay affordable.  square_u/square_v give the
// components of each square; object_of maps a base morphism to its object.
struct ArrowCategory {
  CatPtr cat;
  CatPtr base;
  std::vector<int> square_u, square_v;  // per arrow-category morphism
  std::vector<int> object_mor;          // per arrow-category object: base morphism
};

ArrowCategory arrow_category(CatPtr base, const Limits& lim = {});

// Builds a FinSetCat whose objects are the given posets (element lists plus
// order pairs) and whose morphisms are all monotone maps; the function
// tables realize the underlying-set functor.
struct PosetSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;  // closure taken
};

FinSetCat poset_concrete_category(const std::string& name, const std::vector<PosetSpec>& posets);

}  // namespace catspec
