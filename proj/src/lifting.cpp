#include "ftop/lifting.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ftop/search.hpp"

namespace ftop {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// Shared machinery for enumerating squares i -> g and solving for fillers.
class LiftingProblem {
 public:
  LiftingProblem(const CMap& i, const CMap& g)
      : i_(i), phis_(i.dst(), g.dst()), fs_(i.src(), g.src()), hs_(i.dst(), g.src()) {
    fiber_.fill(0);
    for (std::size_t y = 0; y < g.src().size(); ++y) fiber_[g(y)] |= bit(y);
  }

  // visit(phi, f, filler-or-null) -> bool; returns false iff stopped.
  template <typename Visit>
  bool scan(Visit&& visit) const {
    const std::size_t na = i_.src().size();
    const std::size_t nx = i_.dst().size();
    return phis_.run_all([&](std::span<const std::uint8_t> phi) {
      std::array<PointMask, kMaxPoints> cand_a{};
      for (std::size_t a = 0; a < na; ++a) cand_a[a] = fiber_[phi[i_(a)]];
      return fs_.run(std::span<const PointMask>(cand_a.data(), na), [&](std::span<const std::uint8_t> f) {
        std::array<PointMask, kMaxPoints> cand_x{};
        for (std::size_t x = 0; x < nx; ++x) cand_x[x] = fiber_[phi[x]];
        for (std::size_t a = 0; a < na; ++a) cand_x[i_(a)] &= bit(f[a]);
        std::array<std::uint8_t, kMaxPoints> h{};
        bool found = true;
        for (std::size_t x = 0; x < nx && found; ++x) found = cand_x[x] != 0;
        if (found) {
          found = false;
          hs_.run(std::span<const PointMask>(cand_x.data(), nx), [&](std::span<const std::uint8_t> sol) {
            std::copy(sol.begin(), sol.end(), h.begin());
            found = true;
            return false;
          });
        }
        return visit(phi, f, found ? h.data() : nullptr);
      });
    });
  }

 private:
  const CMap& i_;
  MonotoneSearch phis_;
  MonotoneSearch fs_;
  MonotoneSearch hs_;
  std::array<PointMask, kMaxPoints> fiber_;
};

std::vector<std::uint8_t> to_vec(std::span<const std::uint8_t> a) { return {a.begin(), a.end()}; }

}  // namespace

Square::Square(CMap i, CMap g, CMap f, CMap phi)
    : i_(std::move(i)), g_(std::move(g)), f_(std::move(f)), phi_(std::move(phi)) {
  if (f_.src() != i_.src() || f_.dst() != g_.src() || phi_.src() != i_.dst() || phi_.dst() != g_.dst()) {
    throw std::domain_error("square endpoints do not match");
  }
  for (std::size_t a = 0; a < i_.src().size(); ++a) {
    if (g_(f_(a)) != phi_(i_(a))) throw std::domain_error("square does not commute");
  }
}

std::vector<Square> squares(const CMap& i, const CMap& g) {
  std::vector<Square> out;
  MonotoneSearch phis(i.dst(), g.dst());
  MonotoneSearch fs(i.src(), g.src());
  std::array<PointMask, kMaxPoints> fiber{};
  for (std::size_t y = 0; y < g.src().size(); ++y) fiber[g(y)] |= bit(y);
  phis.run_all([&](std::span<const std::uint8_t> phi) {
    std::array<PointMask, kMaxPoints> cand{};
    for (std::size_t a = 0; a < i.src().size(); ++a) cand[a] = fiber[phi[i(a)]];
    fs.run(std::span<const PointMask>(cand.data(), i.src().size()), [&](std::span<const std::uint8_t> f) {
      out.emplace_back(i, g, CMap(i.src_ptr(), g.src_ptr(), to_vec(f)), CMap(i.dst_ptr(), g.dst_ptr(), to_vec(phi)));
      return true;
    });
    return true;
  });
  return out;
}

std::size_t count_squares(const CMap& i, const CMap& g) {
  std::size_t total = 0;
  LiftingProblem(i, g).scan([&](auto, auto, auto) {
    ++total;
    return true;
  });
  return total;
}

std::optional<CMap> fill(const Square& sq) {
  const CMap& i = sq.i();
  const CMap& g = sq.g();
  const std::size_t nx = i.dst().size();
  std::array<PointMask, kMaxPoints> cand{};
  for (std::size_t x = 0; x < nx; ++x) cand[x] = g.fiber(sq.phi()(x)).mask();
  for (std::size_t a = 0; a < i.src().size(); ++a) cand[i(a)] &= bit(sq.f()(a));
  auto h = MonotoneSearch(i.dst(), g.src()).first(std::span<const PointMask>(cand.data(), nx));
  if (!h) return std::nullopt;
  return CMap(i.dst_ptr(), g.src_ptr(), std::move(*h));
}

LiftCertificate lifts(const CMap& i, const CMap& g, LiftOptions options) {
  LiftCertificate cert;
  cert.holds = true;
  cert.digest = kFnvOffset;
  LiftingProblem(i, g).scan([&](std::span<const std::uint8_t> phi, std::span<const std::uint8_t> f,
                                const std::uint8_t* h) {
    ++cert.squares;
    if (h == nullptr) {
      cert.holds = false;
      cert.counterexample.emplace(i, g, CMap(i.src_ptr(), g.src_ptr(), to_vec(f)),
                                  CMap(i.dst_ptr(), g.dst_ptr(), to_vec(phi)));
      return false;
    }
    const std::size_t nx = i.dst().size();
    for (std::size_t x = 0; x < nx; ++x) cert.digest = (cert.digest ^ h[x]) * kFnvPrime;
    cert.digest = (cert.digest ^ 0xffU) * kFnvPrime;
    if (options.keep_fillers) cert.fillers.emplace_back(i.dst_ptr(), g.src_ptr(), std::vector<std::uint8_t>(h, h + nx));
    return true;
  });
  if (!cert.holds) {
    cert.fillers.clear();
    cert.digest = 0;
  }
  return cert;
}

bool has_lift(const CMap& i, const CMap& g) {
  return LiftingProblem(i, g).scan([](auto, auto, const std::uint8_t* h) { return h != nullptr; });
}

}  // namespace ftop
