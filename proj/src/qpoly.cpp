#include "cubic/qpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cubic/error.hpp"

namespace cubic {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

QPoly QPoly::constant(std::vector<std::string> vars, const Rational& c) {
  QPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

QPoly QPoly::variable(std::vector<std::string> vars, std::size_t index) {
  QPoly p(std::move(vars));
  if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
  Exponent e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

QPoly QPoly::linear_form(std::vector<std::string> vars, std::span<const Rational> coeffs) {
  QPoly p(std::move(vars));
  if (coeffs.size() != p.nvars()) throw InputError("linear form arity mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(p.nvars(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

QPoly QPoly::monomial(std::vector<std::string> vars, Exponent exp, const Rational& c) {
  QPoly p(std::move(vars));
  if (exp.size() != p.nvars()) throw InputError("exponent arity mismatch");
  p.add_term(exp, c);
  return p;
}

void QPoly::add_term(const Exponent& exp, const Rational& coeff) {
  if (exp.size() != vars_.size()) throw InputError("exponent arity mismatch");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational QPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

int QPoly::order() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    const int t = total(e);
    if (d < 0 || t < d) d = t;
  }
  return d;
}

bool QPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total(e) != d) return false;
  return true;
}

QPoly QPoly::homogeneous_part(int d) const {
  QPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (total(e) == d) out.terms_.emplace(e, c);
  return out;
}

QPoly QPoly::truncated(int max_degree) const {
  QPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (total(e) <= max_degree) out.terms_.emplace(e, c);
  return out;
}

int QPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void QPoly::check_compatible(const QPoly& rhs) const {
  if (vars_ != rhs.vars_) throw InputError("polynomials over different variables");
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  lhs.check_compatible(rhs);
  QPoly out(lhs.vars_);
  Exponent e(lhs.nvars());
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly out = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

QPoly QPoly::derivative(std::size_t var) const {
  if (var >= nvars()) throw std::out_of_range("variable index out of range");
  QPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

Rational QPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw InputError("evaluation point arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

QPoly QPoly::compose(std::span<const QPoly> images) const {
  if (images.size() != nvars()) throw InputError("composition arity mismatch");
  std::vector<std::string> target = images.empty() ? std::vector<std::string>{} : images.front().vars();
  for (const auto& img : images)
    if (img.vars() != target) throw InputError("images over different variables");

  // Cache powers of each image; cubic forms only ever need a few.
  std::vector<std::vector<QPoly>> powers(nvars());
  auto power = [&](std::size_t i, int k) -> const QPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  QPoly out(target);
  for (const auto& [e, c] : terms_) {
    QPoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant_term = total(e) == 0;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::vector<std::string> indexed_vars(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

QPoly restrict_linear(const QPoly& f, const QMatrix& m, std::vector<std::string> new_vars) {
  if (m.rows() != f.nvars() || m.cols() != new_vars.size())
    throw InputError("coordinate change dimension mismatch");
  std::vector<QPoly> images;
  images.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const auto row = m.row(i);
    images.push_back(QPoly::linear_form(new_vars, row));
  }
  return f.compose(images);
}

QPoly substitute_linear(const QPoly& f, const QMatrix& m) {
  if (!m.square() || m.rows() != f.nvars()) throw InputError("coordinate change dimension mismatch");
  if (m.rank() != m.rows()) throw InputError("non-invertible coordinate change");
  return restrict_linear(f, m, f.vars());
}

}  // namespace cubic
