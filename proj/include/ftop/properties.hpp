#pragma once

#include <json.hpp>

#include "ftop/space.hpp"

namespace ftop {

// Direct point-set checks of classical properties. None of these go through
// the lifting machinery; they serve as independent oracles for it.

bool surjective(const CMap& f);
bool injective(const CMap& f);
/// Image of every closed set is closed; enumerates the closed sets of src.
bool closed_map(const CMap& f);
/// Image of every open set is open.
bool open_map(const CMap& f);
/// The closure of the image is the whole codomain.
bool dense_image(const CMap& f);
/// x -> y in src iff f(x) -> f(y) in dst, i.e. src carries the initial topology.
bool induced_topology(const CMap& f);
bool subset_inclusion(const CMap& f);
/// Surjective, and U is open in dst iff f^-1(U) is open in src.
bool quotient_map(const CMap& f);
/// Some continuous s : dst -> src has f.s = id.
bool admits_section(const CMap& f);
/// Every set-theoretic section of f is continuous (vacuous if f is not onto).
bool all_sections_continuous(const CMap& f);
/// The image is clopen and the map is a subspace inclusion.
bool clopen_inclusion(const CMap& f);
/// Every connected component of dst meets the image.
bool meets_every_component(const CMap& f);
/// For disjoint closed C1, C2 in src the closures of f(C1) and f(C2) are
/// disjoint.
bool disjoint_closures(const CMap& f);
/// disjoint_closures, and moreover f^-1(cl f(C)) = C for every closed C of
/// src. For subspace inclusions the extra condition is automatic.
bool closed_pairs_extend(const CMap& f);

/// Disjoint closed sets have disjoint open neighbourhoods. Pairs involving
/// the empty set are separated by the empty set and the whole space.
bool normal(const Space& x);
/// Every subspace is normal.
bool hereditarily_normal(const Space& x);
/// Whenever each of two disjoint sets misses the closure of the other, the
/// two have disjoint open neighbourhoods.
bool separated_sets_have_disjoint_nbhds(const Space& x);
bool t0(const Space& x);
bool t1(const Space& x);
bool connected(const Space& x);
bool discrete(const Space& x);

/// Subspace on the given points, keeping their names and order.
SpacePtr subspace(const Space& x, PointSet points);

struct SpaceFlags {
  bool t0 = false;
  bool t1 = false;
  bool normal = false;
  bool hereditarily_normal = false;
  bool connected = false;
  bool discrete = false;
};

struct PropertyRecord {
  bool surjective = false;
  bool injective = false;
  bool closed_map = false;
  bool open_map = false;
  bool dense_image = false;
  bool induced_topology = false;
  bool subset_inclusion = false;
  bool quotient_map = false;
  bool admits_section = false;
  SpaceFlags src;
  SpaceFlags dst;
};

SpaceFlags classify(const Space& x);
PropertyRecord classify(const CMap& f);

nlohmann::json to_json(const SpaceFlags& flags);
nlohmann::json to_json(const PropertyRecord& record);

}  // namespace ftop
