#include "ftop/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include "ftop/dsl.hpp"

namespace ftop {

using nlohmann::json;

json to_json(const Space& s) {
  json rel = json::array();
  for (auto [x, y] : s.relation()) rel.push_back({s.name(x), s.name(y)});
  return json{{"points", s.names()}, {"rel", std::move(rel)}};
}

json to_json(const CMap& f) {
  json assign = json::object();
  for (std::size_t x = 0; x < f.src().size(); ++x) assign[f.src().name(x)] = f.dst().name(f(x));
  return json{{"src", to_json(f.src())}, {"dst", to_json(f.dst())}, {"assign", std::move(assign)}};
}

json to_json(const Square& sq) {
  return json{{"i", render(relabel_for_render(sq.i()))},
              {"g", render(relabel_for_render(sq.g()))},
              {"f", to_json(sq.f())["assign"]},
              {"phi", to_json(sq.phi())["assign"]}};
}

json to_json(const LiftCertificate& cert) {
  json out{{"holds", cert.holds}, {"squares", cert.squares}};
  out["counterexample"] = cert.counterexample ? to_json(*cert.counterexample) : json(nullptr);
  if (!cert.holds) {
    out["fillers"] = nullptr;
  } else if (!cert.fillers.empty()) {
    json list = json::array();
    for (const auto& h : cert.fillers) list.push_back(to_json(h)["assign"]);
    out["fillers"] = std::move(list);
  } else {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(cert.digest));
    out["fillers"] = json{{"count", cert.squares}, {"digest", hex}};
  }
  return out;
}

Space space_from_json(const json& j) {
  try {
    auto names = j.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& pair : j.at("rel")) {
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("rel entries must be [x, y] pairs");
      arrows.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return Space::from_names(std::move(names), arrows);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed space JSON: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("malformed space JSON: ") + e.what());
  }
}

CMap map_from_json(const json& j) {
  try {
    auto src = share(space_from_json(j.at("src")));
    auto dst = share(space_from_json(j.at("dst")));
    const auto& assign = j.at("assign");
    std::vector<std::uint8_t> table(src->size());
    if (assign.size() != src->size()) throw std::invalid_argument("assign must cover every domain point");
    for (std::size_t x = 0; x < src->size(); ++x) {
      table[x] = static_cast<std::uint8_t>(dst->index_of(assign.at(src->name(x)).get<std::string>()));
    }
    return CMap(src, dst, std::move(table));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed map JSON: ") + e.what());
  }
}

}  // namespace ftop
