#include "sphcert/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sphcert {

void Monomial::set_exponent(int var, int e) {
  if (e < 0 || e > std::numeric_limits<std::uint8_t>::max())
    throw std::overflow_error("monomial exponent out of range");
  exps_[var - 1] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > std::numeric_limits<std::uint8_t>::max())
      throw std::overflow_error("monomial exponent out of range");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int v = 1; v <= kMaxVariables; ++v) {
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
  }
  return false;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1 || num_vars > kMaxVariables)
    throw std::invalid_argument("unsupported number of variables: " +
                                std::to_string(num_vars));
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int var) {
  if (var < 1 || var > num_vars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set_exponent(var, 1);
  return monomial(num_vars, m, Rational(1));
}

Polynomial Polynomial::monomial(int num_vars, const Monomial& m, const Rational& c) {
  Polynomial p(num_vars);
  for (int v = num_vars + 1; v <= kMaxVariables; ++v)
    if (m.exponent(v) != 0) throw std::out_of_range("monomial uses a variable beyond num_vars");
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("polynomial dimension mismatch: " +
                                std::to_string(num_vars_) + " vs " +
                                std::to_string(other.num_vars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.num_vars_);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(num_vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum(0), term;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (int v = 1; v <= num_vars_; ++v) {
      for (int e = m.exponent(v); e > 0; --e) term *= point[v - 1];
    }
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (int v = 1; v <= num_vars_; ++v) {
      for (int e = m.exponent(v); e > 0; --e) term *= point[v - 1];
    }
    sum += term;
  }
  return sum;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

Polynomial partial_derivative(const Polynomial& p, int var) {
  if (var < 1 || var > p.num_vars()) throw std::out_of_range("derivative index out of range");
  Polynomial r(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(var);
    if (e == 0) continue;
    Monomial dm = m;
    dm.set_exponent(var, e - 1);
    r.add_term(dm, c * e);
  }
  return r;
}

Polynomial substitute_linear(const Polynomial& p,
                             const std::vector<std::vector<Rational>>& a) {
  const int n = p.num_vars();
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("substitution matrix has wrong size");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(a[i - 1].size()) != n)
      throw std::invalid_argument("substitution matrix has wrong size");
    Polynomial img(n);
    for (int j = 1; j <= n; ++j) img += Polynomial::variable(n, j) * a[i - 1][j - 1];
    images.push_back(std::move(img));
  }
  Polynomial r(n);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int v = 1; v <= n; ++v) {
      if (m.exponent(v) > 0) term = term * images[v - 1].pow(m.exponent(v));
    }
    r += term;
  }
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c);
    if (m.degree() == 0) continue;
    out += " * ";
    bool first_var = true;
    for (int v = 1; v <= p.num_vars(); ++v) {
      if (m.exponent(v) == 0) continue;
      if (!first_var) out += '*';
      first_var = false;
      out += 'x' + std::to_string(v) + '^' + std::to_string(m.exponent(v));
    }
  }
  return out;
}

namespace {

int parse_small_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 4) throw std::invalid_argument("bad integer in polynomial: " + std::string(whole));
  int v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad integer in polynomial: " + std::string(whole));
    v = v * 10 + (ch - '0');
  }
  return v;
}

Monomial parse_monomial(std::string_view text, int num_vars) {
  Monomial m;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto star = text.find('*', pos);
    const auto factor = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    const auto caret = factor.find('^');
    if (factor.size() < 2 || factor[0] != 'x' || caret == std::string_view::npos)
      throw std::invalid_argument("bad monomial factor: " + std::string(factor));
    const int var = parse_small_int(factor.substr(1, caret - 1), text);
    const int exp = parse_small_int(factor.substr(caret + 1), text);
    if (var < 1 || var > num_vars) throw std::invalid_argument("variable out of range: " + std::string(factor));
    if (exp == 0 || m.exponent(var) != 0)
      throw std::invalid_argument("non-canonical monomial: " + std::string(text));
    m.set_exponent(var, exp);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int num_vars) {
  Polynomial p(num_vars);
  if (text == "0") return p;
  constexpr std::string_view kSep = " + ";
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(kSep, pos);
    const auto frag = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    const auto mul = frag.find(" * ");
    const Rational c = parse_rational(frag.substr(0, mul));
    Monomial m;
    if (mul != std::string_view::npos) m = parse_monomial(frag.substr(mul + 3), num_vars);
    if (c == 0) throw std::invalid_argument("zero coefficient in polynomial text");
    if (p.coefficient(m) != 0) throw std::invalid_argument("repeated monomial in polynomial text");
    p.add_term(m, c);
    if (next == std::string_view::npos) break;
    pos = next + kSep.size();
  }
  return p;
}

}  // namespace sphcert
