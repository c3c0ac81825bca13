#include "cubic/binary_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cubic/error.hpp"
#include "cubic/matrix.hpp"

namespace cubic {

namespace {

// Dense univariate polynomial, ascending powers, trailing zeros trimmed.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly univariate_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Number of leading coefficients equal to zero, i.e. the power of x1
// dividing the form.
std::size_t x1_valuation(const BinaryForm& p) {
  std::size_t k = 0;
  while (k < p.coeffs().size() && sgn(p[k]) == 0) ++k;
  return k;
}

// p(u, 1) as an ascending univariate polynomial in u = x0.
UPoly dehomogenize(const BinaryForm& p) {
  const std::size_t d = p.degree();
  UPoly u(d + 1);
  for (std::size_t i = 0; i <= d; ++i) u[d - i] = p[i];
  trim(u);
  return u;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i * i != n) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate_upoly(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (u - r), assuming r is a root.
UPoly deflate(const UPoly& p, const Rational& r) {
  UPoly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    carry = p[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::from_qpoly(const QPoly& p, std::size_t degree) {
  if (p.nvars() != 2) throw InputError("binary form needs exactly two variables");
  BinaryForm f = zero(degree);
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<std::size_t>(e[0] + e[1]) != degree) throw InputError("binary form is not homogeneous");
    f.coeffs_[static_cast<std::size_t>(e[1])] = c;
  }
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Rational BinaryForm::evaluate(const Rational& x0, const Rational& x1) const {
  const std::size_t d = degree();
  Rational sum = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    Rational term = coeffs_[i];
    for (std::size_t k = 0; k < d - i; ++k) term *= x0;
    for (std::size_t k = 0; k < i; ++k) term *= x1;
    sum += term;
  }
  return sum;
}

QPoly BinaryForm::to_qpoly(std::vector<std::string> vars) const {
  QPoly p(std::move(vars));
  const int d = static_cast<int>(degree());
  for (int i = 0; i <= d; ++i) p.add_term({d - i, i}, coeffs_[static_cast<std::size_t>(i)]);
  return p;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rational> c(a.degree() + b.degree() + 1);
  for (std::size_t i = 0; i <= a.degree(); ++i)
    for (std::size_t j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
  return BinaryForm(std::move(c));
}

std::string BinaryForm::to_string() const { return to_qpoly().to_string(); }

Rational resultant_binary(const BinaryForm& p, const BinaryForm& q) {
  if (p.is_zero() || q.is_zero()) throw InputError("resultant of zero form");
  const std::size_t m = p.degree();
  const std::size_t n = q.degree();
  const std::size_t size = m + n;
  if (size == 0) return 1;
  QMatrix s(size, size);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = p[i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = q[i];
  return s.determinant();
}

BinaryForm gcd_binary(const BinaryForm& p, const BinaryForm& q) {
  if (p.is_zero() && q.is_zero()) throw InputError("gcd of two zero forms");
  // Roots at [1:0] are invisible after setting x1 = 1, so the power of x1 is
  // tracked separately and multiplied back in.
  std::size_t k;
  UPoly g;
  if (p.is_zero()) {
    k = x1_valuation(q);
    g = univariate_gcd(dehomogenize(q), {});
  } else if (q.is_zero()) {
    k = x1_valuation(p);
    g = univariate_gcd(dehomogenize(p), {});
  } else {
    k = std::min(x1_valuation(p), x1_valuation(q));
    g = univariate_gcd(dehomogenize(p), dehomogenize(q));
  }
  const std::size_t gdeg = g.size() - 1;
  std::vector<Rational> coeffs(k + gdeg + 1);
  // u^j maps to x0^j x1^(gdeg-j), then times x1^k.
  for (std::size_t j = 0; j <= gdeg; ++j) coeffs[k + (gdeg - j)] = g[j];
  return BinaryForm(std::move(coeffs));
}

BinaryForm exact_divide(const BinaryForm& p, const BinaryForm& divisor) {
  if (divisor.is_zero()) throw InputError("division by zero form");
  if (divisor.degree() > p.degree()) throw InputError("divisor degree exceeds dividend");
  // Long division on the coefficient sequence, starting from the first
  // nonzero coefficient of the divisor.
  const std::size_t lead = x1_valuation(divisor);
  const std::size_t qdeg = p.degree() - divisor.degree();
  std::vector<Rational> rem = p.coeffs();
  std::vector<Rational> quot(qdeg + 1);
  for (std::size_t i = 0; i <= qdeg; ++i) {
    if (i + lead >= rem.size()) break;
    const Rational f = rem[i + lead] / divisor[lead];
    quot[i] = f;
    for (std::size_t j = 0; j <= divisor.degree(); ++j) rem[i + j] -= f * divisor[j];
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) throw InputError("binary form division is not exact");
  return BinaryForm(std::move(quot));
}

std::vector<BinaryRoot> rational_roots(const BinaryForm& p) {
  if (p.is_zero()) throw InputError("roots of the zero form");
  std::vector<BinaryRoot> roots;
  const std::size_t k = x1_valuation(p);
  if (k > 0) roots.push_back({1, 0, static_cast<int>(k)});

  UPoly u = dehomogenize(p);
  // Roots at u = 0 are the point [0:1].
  std::size_t zeros = 0;
  while (zeros < u.size() && sgn(u[zeros]) == 0) ++zeros;
  u.erase(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(zeros));

  std::vector<std::pair<Rational, int>> finite;
  if (zeros > 0) finite.push_back({0, static_cast<int>(zeros)});

  if (u.size() > 1) {
    Integer scale = 1;
    for (const auto& c : u) scale = lcm(scale, c.get_den());
    std::vector<Integer> ints;
    for (const auto& c : u) ints.push_back(Rational(c * scale).get_num());
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& a : nums)
      for (const auto& b : dens)
        for (int s : {1, -1}) {
          Rational r(a * s, b);
          r.canonicalize();
          candidates.push_back(r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (u.size() > 1 && sgn(evaluate_upoly(u, r)) == 0) {
        u = deflate(u, r);
        ++mult;
      }
      if (mult > 0) finite.push_back({r, mult});
    }
  }
  std::sort(finite.begin(), finite.end());
  for (const auto& [r, mult] : finite) {
    if (sgn(r) == 0)
      roots.push_back({0, 1, mult});
    else
      roots.push_back({1, 1 / r, mult});
  }
  return roots;
}

std::size_t span_dimension(const std::vector<BinaryForm>& forms) {
  if (forms.empty()) return 0;
  QMatrix m(forms.size(), forms.front().degree() + 1);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].degree() != forms.front().degree()) throw InputError("forms of unequal degree");
    for (std::size_t c = 0; c <= forms[r].degree(); ++c) m(r, c) = forms[r][c];
  }
  return m.rank();
}

}  // namespace cubic
