#include "sphcert/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphcert {

SphereRationalFunction::SphereRationalFunction(int ambient_dim) : num_(ambient_dim) {}

SphereRationalFunction::SphereRationalFunction(SpherePolynomial numerator)
    : num_(std::move(numerator)) {}

SphereRationalFunction::SphereRationalFunction(SpherePolynomial numerator,
                                               const SpherePolynomial& denominator)
    : SphereRationalFunction(std::move(numerator), denominator, 1) {}

SphereRationalFunction::SphereRationalFunction(SpherePolynomial numerator,
                                               const SpherePolynomial& base, unsigned exponent)
    : num_(std::move(numerator)) {
  if (base.ambient_dim() != num_.ambient_dim())
    throw std::invalid_argument("numerator and denominator live in different rings");
  if (base.is_zero()) throw std::domain_error("zero denominator");
  add_factor(base, exponent);
}

SphereRationalFunction SphereRationalFunction::constant(int ambient_dim, const Rational& c) {
  return SphereRationalFunction(SpherePolynomial::constant(ambient_dim, c));
}

SphereRationalFunction SphereRationalFunction::coordinate(int ambient_dim, int var) {
  return SphereRationalFunction(SpherePolynomial::coordinate(ambient_dim, var));
}

void SphereRationalFunction::add_factor(const SpherePolynomial& base, unsigned exponent) {
  if (exponent == 0) return;
  const Polynomial& rep = base.representative();
  if (rep.is_zero()) throw std::domain_error("zero denominator");
  // Scalars go to the numerator; bases stay primitive with positive leading coefficient.
  Rational scale = rep.content();
  if (rep.terms().begin()->second < 0) scale = -scale;
  Rational inv_pow(1);
  for (unsigned e = 0; e < exponent; ++e) inv_pow /= scale;
  num_ *= inv_pow;
  if (rep.degree() == 0) return;
  SpherePolynomial primitive = base * (Rational(1) / scale);
  std::string key = to_string(primitive);
  auto it = std::lower_bound(den_.begin(), den_.end(), key,
                             [](const Factor& f, const std::string& k) { return f.key < k; });
  if (it != den_.end() && it->key == key) {
    it->exponent += exponent;
  } else {
    den_.insert(it, Factor{std::move(primitive), exponent, std::move(key)});
  }
}

SpherePolynomial SphereRationalFunction::denominator() const {
  SpherePolynomial d = SpherePolynomial::constant(ambient_dim(), Rational(1));
  for (const auto& f : den_) d = d * f.base.pow(f.exponent);
  return d;
}

void SphereRationalFunction::check_same_ring(const SphereRationalFunction& other) const {
  if (ambient_dim() != other.ambient_dim())
    throw std::invalid_argument("rational function dimension mismatch");
}

std::pair<SpherePolynomial, SpherePolynomial> SphereRationalFunction::common_numerators(
    const SphereRationalFunction& a, const SphereRationalFunction& b,
    std::vector<Factor>& common) {
  SpherePolynomial na = a.num_, nb = b.num_;
  common.clear();
  auto ia = a.den_.begin(), ib = b.den_.begin();
  while (ia != a.den_.end() || ib != b.den_.end()) {
    if (ib == b.den_.end() || (ia != a.den_.end() && ia->key < ib->key)) {
      nb = nb * ia->base.pow(ia->exponent);
      common.push_back(*ia++);
    } else if (ia == a.den_.end() || ib->key < ia->key) {
      na = na * ib->base.pow(ib->exponent);
      common.push_back(*ib++);
    } else {
      if (ia->exponent < ib->exponent) {
        na = na * ia->base.pow(ib->exponent - ia->exponent);
        common.push_back(*ib);
      } else {
        if (ib->exponent < ia->exponent) nb = nb * ib->base.pow(ia->exponent - ib->exponent);
        common.push_back(*ia);
      }
      ++ia;
      ++ib;
    }
  }
  return {std::move(na), std::move(nb)};
}

SphereRationalFunction& SphereRationalFunction::operator+=(const SphereRationalFunction& other) {
  check_same_ring(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::vector<Factor> common;
  auto [na, nb] = common_numerators(*this, other, common);
  num_ = na + nb;
  den_ = std::move(common);
  if (num_.is_zero()) den_.clear();
  return *this;
}

SphereRationalFunction& SphereRationalFunction::operator-=(const SphereRationalFunction& other) {
  return *this += -other;
}

SphereRationalFunction& SphereRationalFunction::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

SphereRationalFunction operator*(const SphereRationalFunction& a, const SphereRationalFunction& b) {
  a.check_same_ring(b);
  SphereRationalFunction r(a.num_ * b.num_);
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  for (const auto& f : b.den_) {
    auto it = std::lower_bound(r.den_.begin(), r.den_.end(), f.key,
                               [](const auto& x, const std::string& k) { return x.key < k; });
    if (it != r.den_.end() && it->key == f.key) {
      it->exponent += f.exponent;
    } else {
      r.den_.insert(it, f);
    }
  }
  return r;
}

SphereRationalFunction SphereRationalFunction::operator-() const {
  SphereRationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool SphereRationalFunction::operator==(const SphereRationalFunction& other) const {
  if (ambient_dim() != other.ambient_dim()) return false;
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  std::vector<Factor> common;
  auto [na, nb] = common_numerators(*this, other, common);
  return na == nb;
}

Rational SphereRationalFunction::evaluate(std::span<const Rational> point) const {
  Rational value = num_.evaluate(point);  // checks the sphere relation
  for (const auto& f : den_) {
    const Rational b = f.base.representative().evaluate(point);
    if (b == 0) throw std::domain_error("denominator vanishes at evaluation point");
    for (unsigned e = 0; e < f.exponent; ++e) value /= b;
  }
  return value;
}

double SphereRationalFunction::evaluate(std::span<const double> point) const {
  double value = num_.evaluate(point);
  for (const auto& f : den_) {
    const double b = f.base.evaluate(point);
    for (unsigned e = 0; e < f.exponent; ++e) value /= b;
  }
  return value;
}

SphereRationalFunction SphereRationalFunction::derive(
    const std::function<SpherePolynomial(const SpherePolynomial&)>& d) const {
  // D(n / prod q_i^e_i) = (D(n) prod_S q_i - n sum_S e_i D(q_i) prod_{S\i} q_j)
  //                       / (prod q_i^e_i * prod_S q_i),
  // where S are the factors with D(q_i) != 0.
  const int m = ambient_dim();
  std::vector<std::size_t> active;
  std::vector<SpherePolynomial> dq;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    SpherePolynomial di = d(den_[i].base);
    if (!di.is_zero()) {
      active.push_back(i);
      dq.push_back(std::move(di));
    }
  }
  SpherePolynomial all = SpherePolynomial::constant(m, Rational(1));
  for (auto i : active) all = all * den_[i].base;
  SpherePolynomial num = d(num_) * all;
  if (!num_.is_zero()) {
    for (std::size_t a = 0; a < active.size(); ++a) {
      SpherePolynomial others = dq[a] * Rational(den_[active[a]].exponent);
      for (std::size_t b = 0; b < active.size(); ++b)
        if (b != a) others = others * den_[active[b]].base;
      num -= num_ * others;
    }
  }
  SphereRationalFunction r(std::move(num));
  if (r.num_.is_zero()) return r;
  r.den_ = den_;
  for (auto i : active) r.den_[i].exponent += 1;
  return r;
}

SphereRationalFunction rotate(const SphereRationalFunction& f, const std::vector<std::vector<Rational>>& a) {
  const std::size_t m = static_cast<std::size_t>(f.ambient_dim());
  if (a.size() != m) throw std::invalid_argument("rotation matrix has wrong size");
  std::vector<std::vector<Rational>> at(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != m) throw std::invalid_argument("rotation matrix has wrong size");
    for (std::size_t j = 0; j < m; ++j) at[j][i] = a[i][j];
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < m; ++k) s += a[k][i] * a[k][j];
      if (s != (i == j ? 1 : 0)) throw std::invalid_argument("rotation matrix is not orthogonal");
    }
  auto move = [&at](const SpherePolynomial& p) { return SpherePolynomial(substitute_linear(p.representative(), at)); };
  SphereRationalFunction r(move(f.numerator()));
  for (const auto& fac : f.factors()) r = r * SphereRationalFunction(SpherePolynomial::constant(f.ambient_dim(), Rational(1)), move(fac.base), fac.exponent);
  return r;
}

std::string to_string(const SphereRationalFunction& f) {
  std::string out = "(" + to_string(f.numerator()) + ")";
  if (f.factors().empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& fac : f.factors()) {
    if (!first) out += '*';
    first = false;
    out += "(" + fac.key + ")^" + std::to_string(fac.exponent);
  }
  return out + ")";
}

}  // namespace sphcert
