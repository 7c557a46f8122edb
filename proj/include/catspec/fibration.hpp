#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catspec/functor.hpp"

namespace catspec {

// A functor regarded as a fibred category p : total -> base.
struct FiberedFunctor {
  FunctorData p;

  const FinCat& total() const { return *p.src; }
  const FinCat& base() const { return *p.dst; }
};

// Validates p as a functor and wraps it.
FiberedFunctor make_fibered(FunctorData p);

enum class LiftDirection { Cartesian, Cocartesian };

// A subset of base morphisms (Def 4.1's class, §6 step 4's collection).
struct ArrowClass {
  CatPtr base;
  std::vector<int> members;
};

struct CartesianCheck {
  bool ok = false;
  // First counterexample in enumeration order: the arrow f' and base
  // factorization g admitting zero or >=2 fillers.
  int witness_fprime = -1;
  int witness_g = -1;
  int filler_count = -1;
};

// Exhaustive Def 1.1 check: phi is (co)cartesian over p(phi) iff every
// compatible arrow factors uniquely over the base factorization.
CartesianCheck is_cartesian(const FiberedFunctor& p, int phi, LiftDirection dir,
                            const Limits& lim = {});

// All (co)cartesian morphisms over f with the given anchor endpoint
// (codomain for cartesian, domain for cocartesian).
std::vector<int> lifts(const FiberedFunctor& p, int f, int anchor, LiftDirection dir,
                       const Limits& lim = {});

struct Classification {
  bool fibration = false;
  bool cofibration = false;
  bool bifibration = false;
  std::optional<bool> fibrationWrtClass;
  // (f, E) pair with no cartesian / cocartesian lift, when a flag is false.
  std::vector<std::string> witness;
};

Classification classify(const FiberedFunctor& p, const std::optional<ArrowClass>& cls = {},
                        const Limits& lim = {});

// Fiber over B: objects mapping to B, morphisms mapping to id_B.
struct Fiber {
  CatPtr cat;
  int base_object;
  std::vector<int> obj_total;  // per fiber object: total-category object
  std::vector<int> mor_total;  // per fiber morphism: total-category morphism
  FunctorData inclusion;       // fiber -> total

  int index_of_total_object(int e) const;
  int index_of_total_morphism(int m) const;
};

Fiber fiber(const FiberedFunctor& p, int B);

// A chosen cartesian lift for every (base arrow, fiber object) pair.
struct Cleavage {
  LiftDirection direction = LiftDirection::Cartesian;
  // (f, anchor total object) -> chosen lift morphism
  std::map<std::pair<int, int>, int> chosen;

  int lift_of(int f, int anchor) const;
};

// Verifies every chosen entry is (co)cartesian and anchored correctly.
ValidationReport validate_cleavage(const FiberedFunctor& p, const Cleavage& clv,
                                   const Limits& lim = {});

// Cart_f between fibers, built from unique fillers through the cleavage
// (contravariant for fibrations: from the fiber over cod f to the fiber over
// dom f; covariant direction mirrors).  Validated as a functor.
FunctorData transport(const FiberedFunctor& p, const Cleavage& clv, int f, const Fiber& from,
                      const Fiber& to);

// Vertical = projects to an identity.
bool is_vertical(const FiberedFunctor& p, int m);
// Vertical isomorphisms E1 -> E2 (both over the same base object).
std::vector<int> vertical_isos(const FiberedFunctor& p, int E1, int E2);
// Vertical v with phi2∘v = phi1 (cartesian) or v∘phi1 = phi2-style for
// cocartesian lifts of the same arrow/anchor; returns all candidates.
std::vector<int> connecting_verticals(const FiberedFunctor& p, int phi1, int phi2,
                                      LiftDirection dir);

// Lemma 1.1: the free fibration 1/F with dom∘i = F on the nose.
struct FreeFibration {
  CatPtr one_over;           // comma category Id_B / F
  FunctorData dom;           // 1/F -> B
  FunctorData unit;          // i : C -> 1/F
  CommaCategory comma;       // underlying data (component indices)
};

FreeFibration free_fibration(const FunctorData& F, const Limits& lim = {});

// Prop 2.2: the categorical pullback F*E with both projections.
struct PullbackFibration {
  CatPtr cat;
  FunctorData proj_base;   // p' : F*E -> A
  FunctorData proj_total;  // F̄ : F*E -> E
  std::vector<int> obj_a, obj_e;
  std::vector<int> mor_u, mor_v;
};

PullbackFibration pullback_fibration(const FunctorData& F, const FiberedFunctor& p,
                                     const Limits& lim = {});

}  // namespace catspec
