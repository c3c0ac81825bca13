#include "cubic/projective.hpp"

#include <algorithm>
#include <sstream>

#include "cubic/error.hpp"

namespace cubic {

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (lead == coords_.end()) throw InputError("projective point with all coordinates zero");
  const Rational scale = *lead;
  for (auto& c : coords_) c /= scale;
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << "]";
  return os.str();
}

ProjLine::ProjLine(ProjPoint p, ProjPoint q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.dimension() != q_.dimension()) throw InputError("line points of different dimension");
  if (from_columns({p_.coords(), q_.coords()}).rank() != 2) throw InputError("line needs two distinct points");
}

ProjLine ProjLine::coordinate_line(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<Rational> u(n), v(n);
  u.at(a) = 1;
  v.at(b) = 1;
  return {ProjPoint(u), ProjPoint(v)};
}

bool ProjLine::contains(const ProjPoint& x) const {
  if (x.dimension() != dimension()) return false;
  return from_columns({p_.coords(), q_.coords(), x.coords()}).rank() == 2;
}

std::pair<Rational, Rational> ProjLine::line_coordinates(const ProjPoint& x) const {
  if (!contains(x)) throw InputError("point " + x.to_string() + " is not on the line");
  const auto kernel = from_columns({p_.coords(), q_.coords(), x.coords()}).kernel();
  const auto& k = kernel.front();
  return {-k[0] / k[2], -k[1] / k[2]};
}

ProjPoint ProjLine::point_at(const Rational& s, const Rational& t) const {
  std::vector<Rational> c(dimension());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p_[i] + t * q_[i];
  return ProjPoint(std::move(c));
}

QPoly ProjLine::restrict(const QPoly& f) const {
  if (f.nvars() != dimension()) throw InputError("line and polynomial live in different spaces");
  QMatrix m(dimension(), 2);
  for (std::size_t i = 0; i < dimension(); ++i) {
    m(i, 0) = p_[i];
    m(i, 1) = q_[i];
  }
  return restrict_linear(f, m, {"l", "m"});
}

QMatrix complete_to_basis(const std::vector<std::vector<Rational>>& leading, std::size_t n) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& v : leading) {
    cols.push_back(v);
    if (from_columns(cols).rank() != cols.size()) throw InputError("frame vectors are dependent");
  }
  for (std::size_t k = 0; k < n && cols.size() < n; ++k) {
    std::vector<Rational> e(n);
    e[k] = 1;
    cols.push_back(e);
    if (from_columns(cols).rank() != cols.size()) cols.pop_back();
  }
  return from_columns(cols);
}

}  // namespace cubic
