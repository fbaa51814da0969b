#include "morrey/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace morrey {

namespace {
bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }
}

void GridSpec::validate() const {
  if (n != 1 && n != 2) throw std::invalid_argument("GridSpec: n must be 1 or 2");
  if (!(R > 0.0)) throw std::invalid_argument("GridSpec: R must be positive");
  if (m < 16 || !power_of_two(m)) throw std::invalid_argument("GridSpec: m must be a power of two >= 16");
}

Point GridSpec::midpoint(std::int64_t idx) const {
  if (n == 1) return {axis_midpoint(static_cast<int>(idx)), 0.0};
  return {axis_midpoint(static_cast<int>(idx % m)), axis_midpoint(static_cast<int>(idx / m))};
}

int GridSpec::axis_index(double coord) const {
  int i = static_cast<int>(std::floor((coord + R) / h()));
  return std::clamp(i, 0, m - 1);
}

std::int64_t GridSpec::cell_index(const Point& p) const {
  if (n == 1) return axis_index(p.x);
  return std::int64_t(axis_index(p.y)) * m + axis_index(p.x);
}

bool GridSpec::contains(const Point& p) const {
  if (p.x < -R || p.x > R) return false;
  if (n == 2 && (p.y < -R || p.y > R)) return false;
  return true;
}

double SupportTag::eval(const Point& p) const {
  if (!covers(p)) return 0.0;
  if (exponent == 0.0) return coef;
  return coef * std::pow(p.norm(), exponent);
}

GridFunction::GridFunction(GridSpec spec, double fill) : spec_(spec) {
  spec_.validate();
  values_.assign(static_cast<std::size_t>(spec_.cell_count()), fill);
}

GridFunction GridFunction::from_function(const GridSpec& spec, const std::function<double(const Point&)>& fn) {
  GridFunction g(spec);
  for (std::int64_t i = 0; i < spec.cell_count(); ++i) g[i] = fn(spec.midpoint(i));
  return g;
}

double GridFunction::eval(const Point& p) const {
  if (tag_) return tag_->eval(p);
  if (!spec_.contains(p)) return 0.0;
  return values_[static_cast<std::size_t>(spec_.cell_index(p))];
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_)
    if (std::isfinite(v)) m = std::max(m, std::fabs(v));
  return m;
}

bool GridFunction::nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return !(v < 0.0); });
}

GridFunction GridFunction::abs_pow(double q) const {
  GridFunction g(spec_);
  for (std::size_t i = 0; i < values_.size(); ++i) g.values_[i] = std::pow(std::fabs(values_[i]), q);
  if (tag_) {
    SupportTag t = *tag_;
    t.coef = std::pow(std::fabs(t.coef), q);
    t.exponent = t.exponent * q;
    g.tag_ = t;
  }
  return g;
}

GridFunction GridFunction::scaled(double c) const {
  GridFunction g(spec_);
  for (std::size_t i = 0; i < values_.size(); ++i) g.values_[i] = c * values_[i];
  if (tag_) {
    SupportTag t = *tag_;
    t.coef *= c;
    g.tag_ = t;
  }
  return g;
}

GridFunction GridFunction::plus(const GridFunction& other) const {
  if (other.spec_.m != spec_.m || other.spec_.n != spec_.n) throw std::invalid_argument("plus: spec mismatch");
  GridFunction g(spec_);
  for (std::size_t i = 0; i < values_.size(); ++i) g.values_[i] = values_[i] + other.values_[i];
  return g;  // tags do not survive addition
}

GridFunction dilate(const GridFunction& f, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("dilate: delta must be positive");
  const GridSpec& spec = f.spec();
  GridFunction g(spec);
  if (f.tag()) {
    SupportTag t = *f.tag();
    t.center = (1.0 / delta) * t.center;
    t.radius /= delta;
    t.coef *= std::pow(delta, t.exponent);
    if (t.center.norm() + t.radius > spec.R + kBoundaryTol)
      throw std::invalid_argument("dilate: support escapes the domain");
    for (std::int64_t i = 0; i < spec.cell_count(); ++i) g[i] = t.eval(spec.midpoint(i));
    g.set_tag(t);
    return g;
  }
  if (delta < 1.0) {
    // growing dilation of an untagged function: every nonzero cell must map
    // from inside the domain
    for (std::int64_t i = 0; i < spec.cell_count(); ++i) {
      Point p = spec.midpoint(i);
      if (f[i] != 0.0 && !spec.contains({p.x / delta, p.y / delta}))
        throw std::invalid_argument("dilate: support escapes the domain");
    }
  }
  for (std::int64_t i = 0; i < spec.cell_count(); ++i) {
    Point p = spec.midpoint(i);
    Point q{delta * p.x, delta * p.y};
    g[i] = spec.contains(q) ? f[static_cast<std::int64_t>(spec.cell_index(q))] : 0.0;
  }
  return g;
}

void write_csv(const GridFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  const GridSpec& spec = f.spec();
  out << (spec.n == 1 ? "x,value\n" : "x,y,value\n");
  char buf[96];
  for (std::int64_t i = 0; i < spec.cell_count(); ++i) {
    Point p = spec.midpoint(i);
    if (spec.n == 1)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, f[i]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x, p.y, f[i]);
    out << buf;
  }
}

GridFunction read_csv(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> coords, vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<double> fields;
    while (std::getline(row, field, ',')) fields.push_back(std::stod(field));
    if (fields.size() != static_cast<std::size_t>(n + 1)) throw std::runtime_error("read_csv: bad column count");
    coords.push_back(fields[0]);
    vals.push_back(fields.back());
  }
  if (vals.empty()) throw std::runtime_error("read_csv: no data rows");
  int m = n == 1 ? static_cast<int>(vals.size())
                 : static_cast<int>(std::llround(std::sqrt(static_cast<double>(vals.size()))));
  double h = n == 1 ? (coords.back() - coords.front()) / (m - 1) : coords[1] - coords[0];
  GridSpec spec{n, m * h / 2.0, m};
  spec.validate();
  GridFunction g(spec);
  for (std::size_t i = 0; i < vals.size(); ++i) g[static_cast<std::int64_t>(i)] = vals[i];
  return g;
}

}  // namespace morrey
