#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catspec/fibration.hpp"
#include "catspec/presheaf.hpp"

namespace catspec {

// A covering: a finite family of morphisms with a common codomain.
struct Covering {
  std::vector<int> members;
};

struct Pretopology {
  std::string name;
  CatPtr base;
  std::vector<std::vector<Covering>> coverings;  // per object
};

struct Sieve {
  int target = -1;
  std::vector<int> members;  // sorted morphism indices, all with cod = target

  bool contains(int m) const;
};

bool operator==(const Sieve& a, const Sieve& b);

ValidationReport validate_sieve(const FinCat& c, const Sieve& S);
Sieve maximal_sieve(const FinCat& c, int target);
// Right-closure of a family of arrows into the target.
Sieve generated_sieve(const FinCat& c, int target, const std::vector<int>& family);
// h ∈ f*(S) iff f∘h ∈ S.
Sieve pullback_sieve(const FinCat& c, int f, const Sieve& S);
// All sieves on the target (the finite sieve lattice); guarded by the number
// of arrows into the target.
std::vector<Sieve> all_sieves_on(const FinCat& c, int target, const Limits& lim = {});

struct PretopologyCheck {
  bool ok = false;
  int axiom = 0;  // 1 = iso singletons, 2 = pullback stability, 3 = composability
  std::string message;
};

PretopologyCheck validate_pretopology(const Pretopology& t, const Limits& lim = {});

struct Topology {
  std::string name;
  CatPtr base;
  std::vector<std::vector<Sieve>> covering;  // per object

  bool covers(const Sieve& S) const;
};

// Least family containing the maximal sieves and every covering's generated
// sieve, closed under inverse images (the saturation axiom, read literally
// with f ranging over all arrows, adds nothing to the closure).
Topology generate_topology(const Pretopology& t, const Limits& lim = {});

struct TopologyCheck {
  bool ok = false;
  int axiom = 0;
  std::string message;
};

TopologyCheck validate_topology(const Topology& T, const Limits& lim = {});

// Union of all covering members as a class of arrows.
ArrowClass covering_members(const Pretopology& t);

// Def-style local functor: a fibration with respect to every covering member.
bool is_local(const FiberedFunctor& p, const Pretopology& t, const Limits& lim = {});

// A matching family for a sieve: one element of P(dom s) per member s,
// compatible with restriction.
struct MatchingFamily {
  std::vector<int> assign;  // aligned with Sieve::members
};

std::vector<MatchingFamily> matching_families(const SetPresheaf& P, const Sieve& S,
                                              const Limits& lim = {});
std::vector<int> amalgamations(const SetPresheaf& P, const Sieve& S, const MatchingFamily& mf);

struct SheafCheck {
  bool ok = false;
  int object = -1;           // object of the failing sieve
  int sieve_index = -1;      // index into the topology's list at that object
  std::optional<MatchingFamily> family;
  int amalgam_count = -1;
};

// Exactly one amalgamation for every matching family over every covering sieve.
SheafCheck is_sheaf(const SetPresheaf& P, const Topology& T, const Limits& lim = {});

// Plus construction: classes of (covering sieve, matching family) pairs under
// agreement on a common covering refinement; applying it twice sheafifies.
SetPresheaf plus_construction(const SetPresheaf& P, const Topology& T, const Limits& lim = {});
SetPresheaf sheafify(const SetPresheaf& P, const Topology& T, const Limits& lim = {});

}  // namespace catspec
