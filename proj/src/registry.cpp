#include "ftop/registry.hpp"

#include <stdexcept>

#include "ftop/construct.hpp"
#include "ftop/dsl.hpp"

namespace ftop {

const Registry& Registry::instance() {
  static const Registry registry;
  return registry;
}

Registry::Registry() {
  add_space("empty", "{}", {"∅", "Empty"});
  add_space("point", "{o}", {"Point", "pt"});
  add_space("sierpinski", "{o->c}", {"S", "Sierpinski"});
  add_space("indiscrete2", "{a<->b}", {"Indiscrete2"});
  add_space("M", "{a<-u->x<-v->b}");
  add_space("Lambda", "{a<-w->b}", {"Λ", "lambda"});

  add_map("empty_to_point", "{}-->{o}", {"∅→{o}"});
  add_map("open_point_incl", "{o}-->{o->c}", {"{o}→{o→c}"});
  add_map("dense_archetype", "{c}-->{o->c}", {"{c}→{o→c}"});
  add_map("pullback_archetype", "{o->c}-->{o=c}", {"{o→c}→{o=c}"});
  add_map("injective_archetype", "{a<->b}-->{a=b}", {"{a↔b}→{a=b}"});
  add_map("disjoint_closures_archetype", "{a<-u->b}-->{a=u=b}", {"Λ→{o}", "lambda_to_point"});
  add_map("m_to_lambda", "{a<-u->x<-v->b}-->{a<-w=u=x=v->b}", {"M→Λ"});
  add_map("subset_archetype_down", "{x<->y->c}-->{x=y=c}", {"{x↔y→c}→{x=y=c}"});
  add_map("subset_archetype_up", "{x<->y<-c}-->{x=y=c}", {"{x↔y←c}→{x=y=c}"});

  for (int k = 1; k <= 16; ++k) {
    const std::string name = "lam(" + std::to_string(k) + ")";
    spaces_.emplace(name, lam(k));
    space_order_.push_back(name);
  }
  for (int k = 1; k <= 8; ++k) {
    const std::string name = "sub(" + std::to_string(k) + ")";
    maps_.emplace(name, sub(k));
    map_order_.push_back(name);
  }
}

void Registry::add_space(const std::string& name, const std::string& dsl, std::vector<std::string> aliases) {
  spaces_.emplace(name, share(parse_space(dsl)));
  space_order_.push_back(name);
  space_alias_.emplace(dsl, name);
  for (auto& a : aliases) space_alias_.emplace(std::move(a), name);
}

void Registry::add_map(const std::string& name, const std::string& dsl, std::vector<std::string> aliases) {
  maps_.emplace(name, parse_map(dsl));
  map_order_.push_back(name);
  map_alias_.emplace(dsl, name);
  for (auto& a : aliases) map_alias_.emplace(std::move(a), name);
}

bool Registry::has_space(std::string_view name) const {
  return spaces_.find(name) != spaces_.end() || space_alias_.find(name) != space_alias_.end();
}

bool Registry::has_map(std::string_view name) const {
  return maps_.find(name) != maps_.end() || map_alias_.find(name) != map_alias_.end();
}

SpacePtr Registry::space(std::string_view name) const {
  if (auto it = spaces_.find(name); it != spaces_.end()) return it->second;
  if (auto it = space_alias_.find(name); it != space_alias_.end()) return spaces_.at(it->second);
  throw std::out_of_range("no registered space named '" + std::string(name) + "'");
}

const CMap& Registry::map(std::string_view name) const {
  if (auto it = maps_.find(name); it != maps_.end()) return it->second;
  if (auto it = map_alias_.find(name); it != map_alias_.end()) return maps_.at(it->second);
  throw std::out_of_range("no registered map named '" + std::string(name) + "'");
}

std::vector<std::string> Registry::space_names() const { return space_order_; }

std::vector<std::string> Registry::map_names() const { return map_order_; }

}  // namespace ftop
