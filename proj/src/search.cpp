#include "ftop/search.hpp"

namespace ftop {

std::vector<std::size_t> linear_extension(const Space& s) {
  // Repeatedly take the least point all of whose strict predecessors
  // (more open points) are already placed.
  std::vector<std::size_t> order;
  PointMask placed = 0;
  while (order.size() < s.size()) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (placed & bit(p)) continue;
      const PointMask strict_pred = s.point_star(p) & ~s.point_closure(p);
      if ((strict_pred & ~placed) == 0) {
        order.push_back(p);
        placed |= bit(p);
        break;
      }
    }
  }
  return order;
}

MonotoneSearch::MonotoneSearch(const Space& src, const Space& dst)
    : src_(&src), dst_(&dst), order_(linear_extension(src)) {
  const std::size_t n = src.size();
  later_.assign(n + 1, 0);
  for (std::size_t d = n; d-- > 0;) later_[d] = later_[d + 1] | (d + 1 < n ? bit(order_[d + 1]) : 0);
  neighbours_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    neighbours_[x] = (src.point_closure(x) | src.point_star(x)) & ~bit(x);
  }
}

std::optional<std::vector<std::uint8_t>> MonotoneSearch::first(std::span<const PointMask> candidates) const {
  std::optional<std::vector<std::uint8_t>> out;
  run(candidates, [&](std::span<const std::uint8_t> a) {
    out.emplace(a.begin(), a.end());
    return false;
  });
  return out;
}

std::size_t MonotoneSearch::count(std::span<const PointMask> candidates) const {
  std::size_t total = 0;
  run(candidates, [&](std::span<const std::uint8_t>) {
    ++total;
    return true;
  });
  return total;
}

std::vector<std::vector<std::uint8_t>> monotone_assignments(const Space& src, const Space& dst) {
  std::vector<std::vector<std::uint8_t>> out;
  MonotoneSearch(src, dst).run_all([&](std::span<const std::uint8_t> a) {
    out.emplace_back(a.begin(), a.end());
    return true;
  });
  return out;
}

}  // namespace ftop
