#ifndef FRACPOW_GRID_HPP
#define FRACPOW_GRID_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracpow {

/// Uniform grid of interior points on (0,1) or (0,1)^2 with Dirichlet
/// boundary. h = 1/(n+1); unknowns are ordered lexicographically with x
/// running fastest in 2-D.
struct GridSpec {
  int dimension = 1;  // 1 or 2
  std::int64_t n = 0; // interior points per direction

  GridSpec() = default;
  GridSpec(int dim, std::int64_t n_) : dimension(dim), n(n_) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("GridSpec: dimension must be 1 or 2");
    if (n_ < 1) throw std::invalid_argument("GridSpec: n must be positive");
    if (dim == 2 && n_ > (1LL << 31)) throw std::invalid_argument("GridSpec: N overflows");
  }

  double h() const { return 1.0 / static_cast<double>(n + 1); }
  std::int64_t size() const { return dimension == 1 ? n : n * n; }
};

using GridFunction = std::vector<double>;

inline double norm2(const GridFunction& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline double norm_inf(const GridFunction& v) {
  double s = 0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

enum class RhsKind { checkerboard, cosine, cosine_nohup, eigen, custom };

inline RhsKind parse_rhs_kind(const std::string& s) {
  if (s == "checkerboard") return RhsKind::checkerboard;
  if (s == "cosine") return RhsKind::cosine;
  if (s == "cosine-nohup") return RhsKind::cosine_nohup;
  if (s.rfind("eigen", 0) == 0) return RhsKind::eigen;
  throw std::invalid_argument("unknown rhs kind: " + s);
}

/// Right-hand sides evaluated at the interior nodes (x,y) = (ih, jh).
///
/// checkerboard: +1 where (x-0.5)(y-0.5) > 0, -1 otherwise (grid lines
///   through 0.5 fall in the "otherwise" branch). 2-D only.
/// cosine: cos(pi*h*x)cos(pi*h*y), the printed formula taken literally
///   (nearly constant for small h). 2-D only.
/// cosine-nohup: cos(pi*x)cos(pi*y), the h-free variant. 2-D only.
inline GridFunction rhs_generate(const GridSpec& grid, RhsKind kind) {
  const double h = grid.h();
  GridFunction f(static_cast<std::size_t>(grid.size()));
  if (kind == RhsKind::eigen || kind == RhsKind::custom)
    throw std::invalid_argument("rhs_generate: eigen/custom handled by caller");
  if (grid.dimension != 2)
    throw std::invalid_argument("rhs_generate: checkerboard/cosine are 2-D kinds");
  std::size_t idx = 0;
  for (std::int64_t j = 1; j <= grid.n; ++j) {
    const double y = j * h;
    for (std::int64_t i = 1; i <= grid.n; ++i, ++idx) {
      const double x = i * h;
      switch (kind) {
        case RhsKind::checkerboard:
          f[idx] = ((x - 0.5) * (y - 0.5) > 0.0) ? 1.0 : -1.0;
          break;
        case RhsKind::cosine:
          f[idx] = std::cos(M_PI * h * x) * std::cos(M_PI * h * y);
          break;
        case RhsKind::cosine_nohup:
          f[idx] = std::cos(M_PI * x) * std::cos(M_PI * y);
          break;
        default:
          break;
      }
    }
  }
  return f;
}

/// CSV export with header index,x[,y],value.
inline void write_grid_function_csv(std::ostream& os, const GridSpec& grid,
                                    const GridFunction& f) {
  const double h = grid.h();
  char buf[128];
  if (grid.dimension == 1) {
    os << "index,x,value\n";
    for (std::int64_t i = 1; i <= grid.n; ++i) {
      std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n",
                    static_cast<long long>(i), i * h, f[static_cast<std::size_t>(i - 1)]);
      os << buf;
    }
  } else {
    os << "index,x,y,value\n";
    std::size_t idx = 0;
    for (std::int64_t j = 1; j <= grid.n; ++j)
      for (std::int64_t i = 1; i <= grid.n; ++i, ++idx) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", idx + 1, i * h,
                      j * h, f[idx]);
        os << buf;
      }
  }
}

}  // namespace fracpow

#endif  // FRACPOW_GRID_HPP
