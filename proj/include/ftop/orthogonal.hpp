#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftop/space.hpp"
#include "ftop/universe.hpp"

namespace ftop {

/// Base maps P and a word over {l, r}: P^{word}, read left to right.
struct ClassQuery {
  std::vector<CMap> base;
  std::string word;
};

/// Throws std::invalid_argument unless the word is nonempty and uses only l, r.
void validate_word(const std::string& word, bool allow_empty = false);

/// How a bounded class relates to the true class restricted to the universe.
enum class Approximation {
  Exact,  // one step from an explicit base: decided by lifting alone
  Over,   // two steps: every true member is found, extra maps may appear
  Loose,  // three or more steps: no containment is guaranteed either way
};

const char* to_string(Approximation a);

/// Approximation grade of the class reached after `word_length` steps.
Approximation approximation_after(std::size_t word_length);

struct OrthogonalResult {
  int bound = 0;
  std::string word;
  /// Universe indices of the members of the final class, ascending.
  std::vector<std::size_t> members;
  /// Members after each letter; levels.back() == members.
  std::vector<std::vector<std::size_t>> levels;
  Approximation approximation = Approximation::Exact;
};

/// One letter: universe indices of the maps lifting on the `letter` side
/// against every map of `current`, ascending.
std::vector<std::size_t> orthogonal_step(const std::vector<CMap>& current, char letter, const Universe& universe,
                                         int jobs = 0);

/// Iterates the word over the bounded universe: at each letter keep the maps
/// of `universe` lifting on the required side against everything in the
/// current class. The first letter tests against the explicit base maps.
OrthogonalResult relative_orthogonal(const ClassQuery& query, const Universe& universe, int jobs = 0);

/// i is in P^{...l}: i ⧄ p for every p.
bool left_of_all(const CMap& i, const std::vector<CMap>& ps);
/// p is in P^{...r}: i ⧄ p for every i.
bool right_of_all(const std::vector<CMap>& is, const CMap& p);

/// Maps of the universe selected by `members`.
std::vector<CMap> select(const Universe& universe, const std::vector<std::size_t>& members);

/// f is a retract of g in the arrow category:
///
///   dom f --s--> dom g --r--> dom f
///     |f           |g           |f
///   cod f --s'-> cod g --r'-> cod f
///
/// with r.s = id, r'.s' = id and both squares commuting.
struct RetractWitness {
  CMap s;
  CMap r;
  CMap s_cod;
  CMap r_cod;
};

/// Exhaustive search; the first witness in search order, or none.
std::optional<RetractWitness> is_retract_of(const CMap& f, const CMap& g);

/// Checks the four identities of a witness.
bool verify_retract(const CMap& f, const CMap& g, const RetractWitness& w);

struct Factorization {
  CMap left;
  CMap right;
  /// Catalog index of the middle space, when it came from the universe sweep.
  std::optional<std::size_t> middle;
  std::string left_word;
  std::string right_word;
};

struct FactorSearchResult {
  std::optional<Factorization> found;
  int bound = 0;
  std::size_t candidates_tested = 0;
  std::size_t left_class_size = 0;
  std::size_t right_class_size = 0;
};

/// The three classes a factorization search tests against: P^{word} (the
/// explicit base when the word is empty), P^{word l} and the size of
/// P^{word l r}.
struct FactorClasses {
  std::string word;
  std::vector<CMap> prefix;
  std::vector<CMap> left_class;
  std::size_t right_class_size = 0;
  int bound = 0;
};

FactorClasses factor_classes(const std::vector<CMap>& base, const std::string& word, const Universe& universe,
                             int jobs = 0);

/// Search against precomputed classes.
FactorSearchResult factor_search(const CMap& f, const FactorClasses& classes, const Universe& universe, int jobs = 0);

/// Looks for f = right . left with left in P^{word l} and right in
/// P^{word l r}, both classes computed relative to `universe`. Tries
/// (f, id) and (id, f) first, then every middle space of the universe.
/// This is an exploration tool: a miss says nothing beyond the bound.
FactorSearchResult factor_search(const CMap& f, const std::vector<CMap>& base, const std::string& word,
                                 const Universe& universe, int jobs = 0);

}  // namespace ftop
