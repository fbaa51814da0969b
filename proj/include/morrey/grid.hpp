#ifndef MORREY_GRID_HPP
#define MORREY_GRID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morrey/params.hpp"

namespace morrey {

/// Uniform grid of cell midpoints over the cube [-R,R]^n, n in {1,2}.
/// m samples per axis, m a power of two >= 16; cell width h = 2R/m.
/// The origin always sits on a cell boundary, never on a midpoint.
struct GridSpec {
  int n = 1;
  double R = 16.0;
  int m = 4096;

  double h() const { return 2.0 * R / m; }
  std::int64_t cell_count() const { return n == 1 ? m : std::int64_t(m) * m; }

  double axis_midpoint(int i) const { return -R + (i + 0.5) * h(); }
  Point midpoint(std::int64_t idx) const;
  // index of the cell containing the coordinate (clamped into range)
  int axis_index(double coord) const;
  std::int64_t cell_index(const Point&) const;
  bool contains(const Point&) const;

  void validate() const;
  GridSpec refined(int doublings = 1) const { return {n, R, m << doublings}; }

  static GridSpec defaults(int n) { return n == 1 ? GridSpec{1, 16.0, 1 << 12} : GridSpec{2, 16.0, 1 << 9}; }
};

/// Analytic descriptor for the exact-integration fast path:
///   f(y) = coef * |y|^exponent  on  B(center, radius),  0 elsewhere.
/// exponent != 0 requires center == 0 (radial profiles are origin-anchored);
/// exponent < 0 flags the cells touching the origin as singular.
struct SupportTag {
  Point center{};
  double radius = 1.0;
  double coef = 1.0;
  double exponent = 0.0;

  bool singular() const { return exponent < 0.0; }
  bool covers(const Point& p) const { return dist(p, center) <= radius; }
  double eval(const Point& p) const;
};

/// Sampled function on a GridSpec: one value per cell midpoint, plus an
/// optional analytic tag used by the quadrature layer on singular cells and
/// for exact support intersection.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(GridSpec spec, double fill = 0.0);
  static GridFunction from_function(const GridSpec&, const std::function<double(const Point&)>&);

  const GridSpec& spec() const { return spec_; }
  double operator[](std::int64_t i) const { return values_[static_cast<std::size_t>(i)]; }
  double& operator[](std::int64_t i) { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return values_; }

  const std::optional<SupportTag>& tag() const { return tag_; }
  void set_tag(SupportTag t) { tag_ = t; }

  /// Point evaluation: analytic tag when present, cell value otherwise.
  double eval(const Point&) const;

  double max_abs() const;
  bool nonnegative() const;

  GridFunction abs_pow(double q) const;   // |f|^q, tag transformed
  GridFunction scaled(double c) const;    // c*f
  GridFunction plus(const GridFunction&) const;

 private:
  GridSpec spec_{};
  std::vector<double> values_;
  std::optional<SupportTag> tag_;
};

/// g(x) = f(delta * x) resampled on the same spec. Rejects dilations whose
/// support would escape the domain cube.
GridFunction dilate(const GridFunction& f, double delta);

/// CSV export/import; columns "x,value" (1D) or "x,y,value" (2D).
void write_csv(const GridFunction&, const std::string& path);
GridFunction read_csv(const std::string& path, int n);

}  // namespace morrey

#endif
