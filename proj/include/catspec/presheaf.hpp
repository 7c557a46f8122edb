#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catspec/fincat.hpp"
#include "catspec/functor.hpp"

namespace catspec {

// A Set-valued presheaf on a finite category: explicit finite value sets and
// contravariant restriction tables (restr[f] maps value[cod f] into
// value[dom f]).
struct SetPresheaf {
  std::string name;
  CatPtr base;
  std::vector<std::vector<std::string>> value;
  std::vector<std::vector<int>> restr;

  int element(int obj, const std::string& e) const;
  int restrict_along(int f, int elem) const { return restr[f][elem]; }
};

// Functoriality: identities restrict trivially, restr(g∘f) = restr(f)∘restr(g).
ValidationReport validate_presheaf(const SetPresheaf& P);

// hom(-, C) with morphism names as elements.
SetPresheaf representable_presheaf(CatPtr c, int C);
SetPresheaf terminal_presheaf(CatPtr c);
SetPresheaf empty_presheaf(CatPtr c);
// Objectwise disjoint union.
SetPresheaf coproduct_presheaf(const SetPresheaf& a, const SetPresheaf& b);

// A natural transformation of presheaves as per-object index maps.
struct PresheafMap {
  std::string name;
  SetPresheaf src, dst;
  std::vector<std::vector<int>> component;  // per object: src elem -> dst elem
};

ValidationReport validate_presheaf_map(const PresheafMap& t);

// Category of elements of P: objects (C, x ∈ P(C)), morphisms f with
// P(f)(x') = x, plus the projection functor.
struct ElementsCategory {
  CatPtr cat;
  FunctorData proj;
  std::vector<int> el_obj, el_elem;  // per object of the category of elements
  std::vector<int> mor_f;            // per morphism: base morphism
};

ElementsCategory category_of_elements(const SetPresheaf& P, const Limits& lim = {});

// A Set-valued diagram on an index category and its colimit, computed as the
// zig-zag closure of a disjoint union.
struct SetDiagram {
  CatPtr index;
  std::vector<int> card;                   // per object
  std::vector<std::vector<int>> arrow_fn;  // per morphism: dom-set -> cod-set
};

struct SetColimit {
  int classes = 0;
  std::vector<std::vector<int>> inj;  // per object: element -> class
};

SetColimit set_diagram_colimit(const SetDiagram& D);

// Lemma-style diagonal fill for a commuting square of presheaf maps
//     A --top--> B
//     |          |
//   left       right      with top componentwise surjective and
//     v          v        bottom componentwise injective
//     C --bottom--> D
struct DiagonalResult {
  bool ok = false;
  std::string failed_hypothesis;  // "commutes" | "top-surjective" | "bottom-injective"
  std::vector<std::string> witness;
  std::optional<PresheafMap> diagonal;  // B => C, natural, unique
};

DiagonalResult fill_diagonal(const PresheafMap& top, const PresheafMap& left,
                             const PresheafMap& right, const PresheafMap& bottom);

}  // namespace catspec
