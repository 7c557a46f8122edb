#pragma once

#include "catspec/builders.hpp"
#include "catspec/fibration.hpp"
#include "catspec/functor.hpp"

namespace catspec::fixtures {

// Inclusion of a subcategory whose object/morphism names are shared with the
// ambient category.
FunctorData inclusion_by_name(CatPtr sub, CatPtr big, const std::string& name = "incl");

// Codomain / domain projections of an arrow category.
FunctorData cod_functor(const ArrowCategory& arr);
FunctorData dom_functor(const ArrowCategory& arr);

// Total category over BZn whose fiber is {x0..x{k-1}} with g acting as
// i ↦ i+g (mod k); requires k | n.  Every arrow t_{i,g} : x_i -> x_{i+g mod k}
// projects to g.  k = n is the free-action covering, k < n acts through the
// quotient Z/k.
FiberedFunctor group_action_covering(int n, int k);

// Functor from the discrete two-object category onto 𝟚 (not a fibration:
// nothing lifts over u).
FiberedFunctor discrete_over_two();

}  // namespace catspec::fixtures
