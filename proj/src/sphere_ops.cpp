#include "sphcert/sphere_ops.hpp"

#include <algorithm>
#include <functional>

#include "sphcert/matrix.hpp"

namespace sphcert {

RotationField::RotationField(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j <= i) throw std::out_of_range("rotation field needs 1 <= i < j");
}

std::string to_string(const RotationField& x) {
  return "X" + std::to_string(x.i) + "," + std::to_string(x.j);
}

std::vector<RotationField> rotation_fields(int m) {
  std::vector<RotationField> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
  return out;
}

namespace {

void check_field(const RotationField& x, int m) {
  if (x.j > m) throw std::out_of_range("rotation field " + to_string(x) + " exceeds ambient dimension");
}

}  // namespace

Polynomial apply_rotation_field(const RotationField& x, const Polynomial& p) {
  check_field(x, p.num_vars());
  const int m = p.num_vars();
  Polynomial r(m);
  for (const auto& [mon, c] : p.terms()) {
    // x_i d_j
    if (const int ej = mon.exponent(x.j); ej > 0) {
      Monomial t = mon;
      t.set_exponent(x.j, ej - 1);
      t.set_exponent(x.i, t.exponent(x.i) + 1);
      r.add_term(t, c * ej);
    }
    // - x_j d_i
    if (const int ei = mon.exponent(x.i); ei > 0) {
      Monomial t = mon;
      t.set_exponent(x.i, ei - 1);
      t.set_exponent(x.j, t.exponent(x.j) + 1);
      r.add_term(t, -c * ei);
    }
  }
  return r;
}

SpherePolynomial apply_rotation_field(const RotationField& x, const SpherePolynomial& p) {
  return SpherePolynomial(apply_rotation_field(x, p.representative()));
}

SphereRationalFunction apply_rotation_field(const RotationField& x, const SphereRationalFunction& f) {
  check_field(x, f.ambient_dim());
  return f.derive([&x](const SpherePolynomial& p) { return apply_rotation_field(x, p); });
}

FieldCombination::FieldCombination(int ambient_dim, const RotationField& x, const Rational& c)
    : ambient_dim_(ambient_dim) {
  add(x, c);
}

FieldCombination& FieldCombination::add(const RotationField& x, const Rational& c) {
  check_field(x, ambient_dim_);
  if (c == 0) return *this;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x, [](const auto& t, const RotationField& f) {
    return std::pair(t.first.i, t.first.j) < std::pair(f.i, f.j);
  });
  if (it != terms_.end() && it->first == x) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {x, c});
  }
  return *this;
}

FieldCombination& FieldCombination::operator+=(const FieldCombination& other) {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("field dimension mismatch");
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

FieldCombination FieldCombination::operator*(const Rational& c) const {
  FieldCombination r(ambient_dim_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

SpherePolynomial FieldCombination::apply(const SpherePolynomial& p) const {
  if (p.ambient_dim() != ambient_dim_) throw std::invalid_argument("field dimension mismatch");
  Polynomial acc(ambient_dim_);
  for (const auto& [x, c] : terms_) acc += apply_rotation_field(x, p.representative()) * c;
  return SpherePolynomial(acc);
}

SphereRationalFunction FieldCombination::apply(const SphereRationalFunction& f) const {
  if (f.ambient_dim() != ambient_dim_) throw std::invalid_argument("field dimension mismatch");
  return f.derive([this](const SpherePolynomial& p) { return apply(p); });
}

std::string to_string(const FieldCombination& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [x, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * " + to_string(x);
  }
  return out;
}

SphereRationalFunction apply_word(const OperatorWord& word, const SphereRationalFunction& f) {
  SphereRationalFunction r = f;
  for (const auto& x : word) r = apply_rotation_field(x, r);
  return r;
}

std::vector<OperatorWord> enumerate_words(int m, int length) {
  const auto fields = rotation_fields(m);
  std::vector<OperatorWord> words{OperatorWord{}};
  for (int l = 0; l < length; ++l) {
    std::vector<OperatorWord> next;
    next.reserve(words.size() * fields.size());
    for (const auto& w : words)
      for (const auto& x : fields) {
        next.push_back(w);
        next.back().push_back(x);
      }
    words = std::move(next);
  }
  return words;
}

SphereRationalFunction laplace_sphere(const SphereRationalFunction& f) {
  SphereRationalFunction acc(f.ambient_dim());
  for (const auto& x : rotation_fields(f.ambient_dim()))
    acc += apply_rotation_field(x, apply_rotation_field(x, f));
  return acc;
}

SpherePolynomial laplace_sphere(const SpherePolynomial& p) {
  return SpherePolynomial(rotation_sum_of_squares(p.representative()));
}

Polynomial rotation_sum_of_squares(const Polynomial& p) {
  Polynomial acc(p.num_vars());
  for (const auto& x : rotation_fields(p.num_vars()))
    acc += apply_rotation_field(x, apply_rotation_field(x, p));
  return acc;
}

Polynomial laplace_euclid(const Polynomial& p) {
  Polynomial acc(p.num_vars());
  for (int v = 1; v <= p.num_vars(); ++v) acc += partial_derivative(partial_derivative(p, v), v);
  return acc;
}

Polynomial euler_operator(const Polynomial& p) {
  // Each monomial is an eigenvector with eigenvalue its degree.
  Polynomial r(p.num_vars());
  for (const auto& [mon, c] : p.terms()) r.add_term(mon, c * mon.degree());
  return r;
}

bool check_sum_of_squares_identity(const Polynomial& p) {
  const int m = p.num_vars();
  Polynomial r2(m);
  for (int v = 1; v <= m; ++v) r2 += Polynomial::variable(m, v) * Polynomial::variable(m, v);
  const Polynomial ep = euler_operator(p);
  const Polynomial rhs = r2 * laplace_euclid(p) - euler_operator(ep) - ep * Rational(m - 2);
  return rotation_sum_of_squares(p) == rhs;
}

std::vector<Monomial> homogeneous_monomials(int m, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == m) {
      cur.set_exponent(var, left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set_exponent(var, e);
      rec(var + 1, left - e);
    }
    cur.set_exponent(var, 0);
  };
  rec(1, d);
  return out;
}

namespace {

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long harmonic_space_dimension(int m, int d) {
  return binomial(m + d - 1, d) - binomial(m + d - 3, d - 2);
}

std::vector<Polynomial> generate_harmonic_basis(int m, int d) {
  if (m < 2 || d < 0) throw std::invalid_argument("harmonic basis needs m >= 2, d >= 0");
  const auto source = homogeneous_monomials(m, d);
  const auto target = homogeneous_monomials(m, d - 2);
  Matrix lap(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const Polynomial img = laplace_euclid(Polynomial::monomial(m, source[c], Rational(1)));
    for (std::size_t r = 0; r < target.size(); ++r) lap(r, c) = img.coefficient(target[r]);
  }
  std::vector<Polynomial> basis;
  if (target.empty()) {
    for (const auto& mon : source) basis.push_back(Polynomial::monomial(m, mon, Rational(1)));
    return basis;
  }
  for (const auto& v : kernel_basis(lap)) {
    Polynomial p(m);
    for (std::size_t c = 0; c < source.size(); ++c) p.add_term(source[c], v[c]);
    basis.push_back(std::move(p));
  }
  return basis;
}

bool check_commutation(const RotationField& x, const SphereRationalFunction& f) {
  return apply_rotation_field(x, laplace_sphere(f)) == laplace_sphere(apply_rotation_field(x, f));
}

bool check_spherical_eigenvalue(const Polynomial& p) {
  if (!p.is_homogeneous()) throw PreconditionError("eigenvalue check needs a homogeneous polynomial");
  if (!laplace_euclid(p).is_zero()) throw PreconditionError("eigenvalue check needs a harmonic polynomial");
  const int m = p.num_vars();
  const int l = std::max(p.degree(), 0);
  const SpherePolynomial restricted(p);
  return laplace_sphere(restricted) == restricted * Rational(-l * (l + m - 2));
}

}  // namespace sphcert
