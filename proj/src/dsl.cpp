#include "ftop/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ftop {

namespace {

enum class Tok { LBrace, RBrace, Comma, Right, Left, Both, Eq, MapsTo, Name, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (c == '{') {
      out.push_back({Tok::LBrace, "{", at});
      ++i;
    } else if (c == '}') {
      out.push_back({Tok::RBrace, "}", at});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", at});
      ++i;
    } else if (c == '=') {
      out.push_back({Tok::Eq, "=", at});
      ++i;
    } else if (starts("-->")) {
      out.push_back({Tok::MapsTo, "-->", at});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Right, "->", at});
      i += 2;
    } else if (starts("<->")) {
      out.push_back({Tok::Both, "<->", at});
      i += 3;
    } else if (starts("<-")) {
      out.push_back({Tok::Left, "<-", at});
      i += 2;
    } else if (starts("→")) {
      out.push_back({Tok::Right, "->", at});
      i += 3;
    } else if (starts("←")) {
      out.push_back({Tok::Left, "<-", at});
      i += 3;
    } else if (starts("↔")) {
      out.push_back({Tok::Both, "<->", at});
      i += 3;
    } else if (starts("⟶")) {
      out.push_back({Tok::MapsTo, "-->", at});
      i += 3;
    } else if (name_char(c)) {
      std::size_t j = i;
      while (j < s.size() && name_char(s[j])) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), at});
      i = j;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", at);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// A parsed space expression: "="-classes in order of first appearance.
struct SpaceExpr {
  std::vector<std::vector<std::string>> classes;
  std::vector<std::size_t> class_pos;
  std::vector<Arrow> arrows;
  std::unordered_map<std::string, std::size_t> class_of;
  std::unordered_map<std::string, std::size_t> name_pos;

  Space build() const {
    std::vector<std::string> names;
    names.reserve(classes.size());
    for (const auto& c : classes) names.push_back(c.front());
    return Space(std::move(names), arrows);
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SpaceExpr space() {
    SpaceExpr e;
    expect(Tok::LBrace, "expected '{'");
    if (peek().kind == Tok::RBrace) {
      ++at_;
      return e;
    }
    chain(e);
    while (peek().kind == Tok::Comma) {
      ++at_;
      chain(e);
    }
    expect(Tok::RBrace, "expected ',' or '}'");
    return e;
  }

  const Token& peek() const { return toks_[at_]; }

  const Token& expect(Tok kind, const char* message) {
    if (peek().kind != kind) throw ParseError(message, peek().pos);
    return toks_[at_++];
  }

 private:
  void chain(SpaceExpr& e) {
    std::size_t prev = node(e);
    for (;;) {
      const Tok k = peek().kind;
      if (k != Tok::Right && k != Tok::Left && k != Tok::Both) return;
      ++at_;
      const std::size_t next = node(e);
      if (k == Tok::Right || k == Tok::Both) e.arrows.emplace_back(prev, next);
      if (k == Tok::Left || k == Tok::Both) e.arrows.emplace_back(next, prev);
      prev = next;
    }
  }

  std::size_t node(SpaceExpr& e) {
    const std::size_t start = peek().pos;
    std::vector<std::string> names;
    std::vector<std::size_t> positions;
    const Token& first = expect(Tok::Name, "expected a point name");
    names.push_back(first.text);
    positions.push_back(first.pos);
    while (peek().kind == Tok::Eq) {
      ++at_;
      const Token& t = expect(Tok::Name, "expected a point name after '='");
      names.push_back(t.text);
      positions.push_back(t.pos);
    }
    std::optional<std::size_t> existing;
    bool any_new = false;
    for (std::size_t k = 0; k < names.size(); ++k) {
      auto it = e.class_of.find(names[k]);
      if (it == e.class_of.end()) {
        any_new = true;
        continue;
      }
      if (existing && *existing != it->second) {
        throw ParseError("name '" + names[k] + "' already belongs to another '=' class", positions[k]);
      }
      existing = it->second;
    }
    if (existing && any_new) {
      throw ParseError("'=' class mixes names of an existing point with new names", start);
    }
    if (existing) return *existing;
    const std::size_t id = e.classes.size();
    std::vector<std::string> unique;
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (e.class_of.emplace(names[k], id).second) {
        unique.push_back(names[k]);
        e.name_pos.emplace(names[k], positions[k]);
      }
    }
    e.classes.push_back(std::move(unique));
    e.class_pos.push_back(start);
    return id;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// Hasse-style edges of a preorder: "<->" between consecutive members of an
// indiscernibility class, "->" for each covering pair of classes.
struct Edge {
  std::size_t u;
  std::size_t v;
  bool both;
};

std::vector<Edge> covering_edges(const Space& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rep(n);
  for (std::size_t p = 0; p < n; ++p) {
    rep[p] = lowest(s.point_closure(p) & s.point_star(p));
  }
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p) {
    const PointMask cls = s.point_closure(p) & s.point_star(p);
    const PointMask later = cls & ~low_bits(p + 1);
    if (later != 0) edges.push_back({p, lowest(later), true});
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] != a) continue;
    const PointMask own = s.point_closure(a) & s.point_star(a);
    const PointMask below = s.point_closure(a) & ~own;
    for (std::size_t b = 0; b < n; ++b) {
      if (rep[b] != b || !((below >> b) & 1U)) continue;
      bool covers = true;
      for_each_point(below, [&](std::size_t c) {
        if (rep[c] == c && c != b && s.leads_to(c, b) && !s.leads_to(b, c)) covers = false;
      });
      if (covers) edges.push_back({a, b, false});
    }
  }
  return edges;
}

std::string render_labeled(const Space& s, const std::vector<std::string>& label) {
  const std::size_t n = s.size();
  const auto edges = covering_edges(s);
  std::vector<bool> used(edges.size(), false);
  std::vector<bool> emitted(n, false);
  std::vector<std::size_t> order;
  std::vector<std::string> chains;

  auto next_edge = [&](std::size_t c) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    std::size_t best_other = n;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (used[e] || (edges[e].u != c && edges[e].v != c)) continue;
      const std::size_t other = edges[e].u == c ? edges[e].v : edges[e].u;
      if (other < best_other) {
        best_other = other;
        best = e;
      }
    }
    return best;
  };
  auto emit = [&](std::size_t p) {
    if (!emitted[p]) {
      emitted[p] = true;
      order.push_back(p);
    }
  };

  for (;;) {
    std::optional<std::size_t> start;
    for (std::size_t p = 0; p < n && !start; ++p) {
      if (!emitted[p] || next_edge(p)) start = p;
    }
    if (!start) break;
    std::size_t cur = *start;
    std::string chain = label[cur];
    emit(cur);
    while (auto e = next_edge(cur)) {
      used[*e] = true;
      const Edge& ed = edges[*e];
      const std::size_t other = ed.u == cur ? ed.v : ed.u;
      chain += ed.both ? "<->" : (ed.u == cur ? "->" : "<-");
      chain += label[other];
      emit(other);
      cur = other;
    }
    chains.push_back(std::move(chain));
  }

  bool in_order = true;
  for (std::size_t k = 0; k < order.size(); ++k) in_order = in_order && order[k] == k;
  std::string out = "{";
  bool first = true;
  if (!in_order) {
    for (std::size_t p = 0; p < n; ++p) {
      out += (first ? "" : ",") + label[p];
      first = false;
    }
  }
  for (const auto& c : chains) {
    out += (first ? "" : ",") + c;
    first = false;
  }
  return out + "}";
}

}  // namespace

Space parse_space(std::string_view text) {
  Parser p(text);
  SpaceExpr e = p.space();
  p.expect(Tok::End, "unexpected trailing input");
  return e.build();
}

CMap parse_map(std::string_view text) {
  Parser p(text);
  SpaceExpr dom = p.space();
  const std::size_t arrow_pos = p.peek().pos;
  p.expect(Tok::MapsTo, "expected '-->'");
  SpaceExpr cod = p.space();
  p.expect(Tok::End, "unexpected trailing input");

  std::vector<std::uint8_t> assign(dom.classes.size());
  for (std::size_t x = 0; x < dom.classes.size(); ++x) {
    std::optional<std::size_t> target;
    for (const auto& nm : dom.classes[x]) {
      auto it = cod.class_of.find(nm);
      if (it == cod.class_of.end()) {
        throw ParseError("domain point '" + nm + "' does not occur in the codomain", dom.name_pos.at(nm));
      }
      if (target && *target != it->second) {
        throw ParseError("domain point '" + dom.classes[x].front() + "' is split across two codomain classes",
                         dom.name_pos.at(nm));
      }
      target = it->second;
    }
    assign[x] = static_cast<std::uint8_t>(*target);
  }
  auto src = share(dom.build());
  auto dst = share(cod.build());
  if (!is_monotone(*src, *dst, assign)) {
    for (auto [x, y] : src->relation()) {
      if (!dst->leads_to(assign[x], assign[y])) {
        throw ParseError("map is not continuous: " + src->name(x) + "->" + src->name(y) + " but " +
                             dst->name(assign[x]) + " does not lead to " + dst->name(assign[y]),
                         arrow_pos);
      }
    }
  }
  return CMap(src, dst, std::move(assign));
}

std::string render(const Space& s) { return render_labeled(s, s.names()); }

bool renderable(const CMap& f) {
  for (std::size_t x = 0; x < f.src().size(); ++x) {
    auto y = f.dst().find(f.src().name(x));
    if (y && *y != f(x)) return false;
  }
  return true;
}

std::string render(const CMap& f) {
  if (!renderable(f)) {
    throw std::domain_error("map cannot be rendered: a domain name denotes a different codomain point");
  }
  std::vector<std::string> label = f.dst().names();
  for (std::size_t x = 0; x < f.src().size(); ++x) {
    const auto& nm = f.src().name(x);
    if (nm != f.dst().name(f(x))) label[f(x)] += "=" + nm;
  }
  return render(f.src()) + "-->" + render_labeled(f.dst(), label);
}

CMap relabel_for_render(const CMap& f) {
  if (renderable(f)) return f;
  std::unordered_set<std::string> taken(f.src().names().begin(), f.src().names().end());
  taken.insert(f.dst().names().begin(), f.dst().names().end());
  std::vector<std::string> names = f.src().names();
  for (std::size_t x = 0; x < names.size(); ++x) {
    auto y = f.dst().find(names[x]);
    if (!y || *y == f(x)) continue;
    std::string fresh = names[x];
    while (taken.count(fresh) != 0) fresh += '\'';
    taken.insert(fresh);
    names[x] = std::move(fresh);
  }
  auto src = share(Space(std::move(names), f.src().relation()));
  return CMap(src, f.dst_ptr(), std::vector<std::uint8_t>(f.assignment().begin(), f.assignment().end()));
}

}  // namespace ftop
