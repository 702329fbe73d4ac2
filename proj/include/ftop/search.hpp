#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ftop/space.hpp"

namespace ftop {

/// Backtracking enumeration of monotone maps src -> dst where each point x may
/// only take values in a candidate set.
///
/// Points are placed along a linear extension of the source preorder. After
/// x is placed at y, every unplaced z with x -> z is restricted to cl(y) and
/// every unplaced z with z -> x to the star of y; an empty candidate set
/// backtracks immediately. Values are tried in increasing index order, so
/// solutions come out in lexicographic order of the placement sequence.
class MonotoneSearch {
 public:
  MonotoneSearch(const Space& src, const Space& dst);

  const Space& src() const { return *src_; }
  const Space& dst() const { return *dst_; }

  /// Calls visit(assignment) for every solution; visit returns false to stop.
  /// Returns false iff stopped early.
  template <typename Visit>
  bool run(std::span<const PointMask> candidates, Visit&& visit) const {
    const std::size_t n = src_->size();
    std::array<PointMask, kMaxPoints> cand{};
    for (std::size_t x = 0; x < n; ++x) {
      cand[x] = candidates[x] & dst_->all();
      if (cand[x] == 0) return true;
    }
    std::array<std::uint8_t, kMaxPoints> assign{};
    return step(0, cand, assign, visit);
  }

  /// All candidates unrestricted.
  template <typename Visit>
  bool run_all(Visit&& visit) const {
    std::array<PointMask, kMaxPoints> cand;
    cand.fill(dst_->all());
    return run(std::span<const PointMask>(cand.data(), src_->size()), visit);
  }

  std::optional<std::vector<std::uint8_t>> first(std::span<const PointMask> candidates) const;
  std::size_t count(std::span<const PointMask> candidates) const;

 private:
  template <typename Visit>
  bool step(std::size_t depth, const std::array<PointMask, kMaxPoints>& cand,
            std::array<std::uint8_t, kMaxPoints>& assign, Visit& visit) const {
    const std::size_t n = src_->size();
    if (depth == n) return visit(std::span<const std::uint8_t>(assign.data(), n));
    const std::size_t x = order_[depth];
    const PointMask touched = neighbours_[x] & later_[depth];
    PointMask options = cand[x];
    while (options != 0) {
      const std::size_t y = lowest(options);
      options &= options - 1;
      std::array<PointMask, kMaxPoints> next = cand;
      bool alive = true;
      PointMask todo = touched;
      while (todo != 0 && alive) {
        const std::size_t z = lowest(todo);
        todo &= todo - 1;
        if (src_->leads_to(x, z)) next[z] &= dst_->point_closure(y);
        if (src_->leads_to(z, x)) next[z] &= dst_->point_star(y);
        alive = next[z] != 0;
      }
      if (!alive) continue;
      assign[x] = static_cast<std::uint8_t>(y);
      if (!step(depth + 1, next, assign, visit)) return false;
    }
    return true;
  }

  const Space* src_;
  const Space* dst_;
  std::vector<std::size_t> order_;
  std::vector<PointMask> later_;
  std::vector<PointMask> neighbours_;
};

/// Every monotone assignment src -> dst in search order.
std::vector<std::vector<std::uint8_t>> monotone_assignments(const Space& src, const Space& dst);

/// Points of `s` along a linear extension of its preorder (ties by index).
std::vector<std::size_t> linear_extension(const Space& s);

}  // namespace ftop
