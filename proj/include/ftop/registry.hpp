#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ftop/space.hpp"

namespace ftop {

/// Named spaces and maps that recur throughout: the point, the Sierpinski
/// space, M and Lambda, the four closed archetype maps, and so on.
class Registry {
 public:
  static const Registry& instance();

  /// Lookup by registry name ("M", "sierpinski", "m_to_lambda", "lam(3)",
  /// "sub(2)"), by symbolic alias ("M→Λ", "∅→{o}") or by the DSL text the
  /// object was defined with. Throws std::out_of_range for unknown names.
  SpacePtr space(std::string_view name) const;
  const CMap& map(std::string_view name) const;

  bool has_space(std::string_view name) const;
  bool has_map(std::string_view name) const;

  /// Canonical names in definition order.
  std::vector<std::string> space_names() const;
  std::vector<std::string> map_names() const;

  // Shorthands for the objects used all over the verification code.
  SpacePtr empty() const { return space("empty"); }
  SpacePtr point() const { return space("point"); }
  SpacePtr sierpinski() const { return space("sierpinski"); }
  SpacePtr big_m() const { return space("M"); }
  SpacePtr lambda() const { return space("Lambda"); }
  const CMap& m_to_lambda() const { return map("m_to_lambda"); }
  const CMap& empty_to_point() const { return map("empty_to_point"); }
  const CMap& open_point_incl() const { return map("open_point_incl"); }

 private:
  Registry();
  void add_space(const std::string& name, const std::string& dsl, std::vector<std::string> aliases = {});
  void add_map(const std::string& name, const std::string& dsl, std::vector<std::string> aliases = {});

  std::vector<std::string> space_order_;
  std::vector<std::string> map_order_;
  std::map<std::string, SpacePtr, std::less<>> spaces_;
  std::map<std::string, CMap, std::less<>> maps_;
  std::map<std::string, std::string, std::less<>> space_alias_;
  std::map<std::string, std::string, std::less<>> map_alias_;
};

}  // namespace ftop
