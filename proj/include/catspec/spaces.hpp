#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catspec/presheaf.hpp"
#include "catspec/sites.hpp"

namespace catspec {

// A finite topological space: points plus an open family (bitmask per open)
// closed under union and intersection, containing the empty set and the
// whole space.
struct FiniteSpace {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::uint32_t> opens;  // sorted, unique

  int point(const std::string& name) const;
  int open_index(std::uint32_t mask) const;  // -1 if absent
  std::uint32_t full_mask() const { return points.size() >= 32 ? ~0u : ((1u << points.size()) - 1); }
  // minimal open neighborhood of a point, as an open index
  int min_open_of(int point) const;
};

ValidationReport validate_space(const FiniteSpace& X);

// Builds a space from generating opens, closing under union/intersection and
// adding the empty set and the whole space.
FiniteSpace make_space(const std::string& name, const std::vector<std::string>& points,
                       const std::vector<std::vector<std::string>>& opens);

FiniteSpace sierpinski();                                  // points a, b; opens {}, {a}, {a,b}
FiniteSpace discrete_space(const std::vector<std::string>& points);

// The opens poset as a site: objects are opens (named canonically), the
// pretopology consists of every family of sub-opens whose union is the open.
struct SpaceSite {
  FiniteSpace space;
  CatPtr cat;                         // poset of opens under inclusion
  std::vector<int> open_of_object;    // object -> open index
  std::vector<int> object_of_open;    // open index -> object
  Pretopology pretop;
  Topology topology;

  int inclusion(int sub_open, int super_open) const;  // morphism index
};

SpaceSite space_site(const FiniteSpace& X, const Limits& lim = {});

// Opens with open embeddings (injective continuous open maps); the poset of
// inclusions and the groupoid of local homeomorphisms both live inside it.
struct EmbeddingCategory {
  FiniteSpace space;
  CatPtr cat;
  std::vector<int> obj_open;                  // object -> open index
  std::vector<int> object_of_open;            // open index -> object
  std::vector<std::vector<int>> open_points;  // per open index: ambient points, ascending
  std::vector<std::vector<int>> emb_map;      // per morphism: local point map
  std::vector<int> inclusion_mor;             // per (sub*nOpens+super): morphism or -1

  int inclusion(int sub_open, int super_open) const;
  // image of an ambient point under a morphism (both must be in the domain open)
  int apply(int mor, int ambient_point) const;
  bool is_invertible(int mor) const;
};

EmbeddingCategory embedding_category(const FiniteSpace& X, const Limits& lim = {});

// Restriction of a presheaf on the embedding category to the opens poset of
// the same space (for sheaf checks against the open-cover topology).
SetPresheaf restrict_to_opens(const EmbeddingCategory& emb, const SetPresheaf& P,
                              const SpaceSite& site);

// The sheaf of locally constant functions into a finite value set, presented
// on the embedding category.
SetPresheaf locally_constant_sheaf(const EmbeddingCategory& emb,
                                   const std::vector<std::string>& values);

// Germ of P at a point: the colimit over the neighborhood filter, computed as
// a set colimit; finite spaces make it the value at the minimal open, which
// callers can assert via matches_min_open.
struct GermResult {
  int point;
  std::vector<int> nbhd_opens;  // opens containing the point
  SetColimit colim;
  bool matches_min_open = false;  // bijective against P(min open)
};

GermResult germ(const SpaceSite& site, const SetPresheaf& P, int point);

// Etale space of germs with basic opens (U, σ); the projection is audited to
// be continuous and a local homeomorphism on every basic open.
struct EtaleSpace {
  FiniteSpace total;
  std::vector<int> proj;                        // total point -> base point
  std::vector<std::vector<int>> germ_point;     // [base point][germ class] -> total point
  struct Basic {
    int open;   // open index of the base
    int elem;   // element of P(open)
    std::uint32_t mask;  // total points
  };
  std::vector<Basic> basics;
  bool projection_continuous = false;
  bool local_homeo = false;
};

EtaleSpace etale_space(const SpaceSite& site, const SetPresheaf& P);

// Groupoid of local homeomorphisms Gr_X (optionally pointed at x: objects
// containing x and maps fixing x).
struct LocalHomeoGroupoid {
  FiniteSpace space;
  CatPtr cat;
  std::vector<int> obj_open;
  std::vector<std::vector<int>> open_points;
  std::vector<std::vector<int>> mor_map;  // per morphism: local point map
};

LocalHomeoGroupoid local_homeo_groupoid(const FiniteSpace& X, std::optional<int> pointed = {},
                                        const Limits& lim = {});

// Transitivity of X with respect to the groupoid: every ordered pair of
// points is connected by some arrow.
bool groupoid_transitive(const LocalHomeoGroupoid& G);

// Closure of a seed set of invertible embedding-category arrows under
// composition, inverses and the identities of the touched opens.
std::vector<int> close_subgroupoid(const EmbeddingCategory& emb, std::vector<int> seeds);
bool subgroupoid_transitive(const EmbeddingCategory& emb, const std::vector<int>& G);

struct InvariantAnalysis {
  std::vector<int> invariant_sections;      // elements of P(X)
  std::vector<int> invariant_germs;         // elements of P(min open of x)
  bool correspondence_injective = false;    // section ↦ germ at x, on invariants
  // per invariant germ: the element of P(X) its distributed section glues to,
  // when that section is continuous (realized by an actual section); -1 if not
  std::vector<int> distributed_section;
};

InvariantAnalysis invariant_analysis(const EmbeddingCategory& emb, const SetPresheaf& P,
                                     const std::vector<int>& G, int x);

}  // namespace catspec
