#include "sphcert/certificates.hpp"

#include <chrono>
#include <stdexcept>

#include "sphcert/parallel.hpp"

namespace sphcert {

SphereRationalFunction delta_power(const SphereRationalFunction& f, int k) {
  if (k < 0) throw std::invalid_argument("delta_power needs k >= 0");
  SphereRationalFunction r = f;
  for (int i = 0; i < k; ++i) r = laplace_sphere(r);
  return r;
}

std::vector<SphereRationalFunction> sos_certificate(const HarmonicFunction& h, int k, unsigned workers) {
  if (k < 1) throw std::invalid_argument("certificate needs k >= 1");
  const int m = h.value().ambient_dim();
  const auto fields = rotation_fields(m);
  // Level by level so shared prefixes are differentiated once. Index
  // parent * F + field reproduces the enumerate_words order.
  std::vector<SphereRationalFunction> level{h.value()};
  for (int depth = 0; depth < k; ++depth) {
    const std::size_t n = level.size() * fields.size();
    level = parallel_map(n, workers, [&](std::size_t idx) {
      return apply_rotation_field(fields[idx % fields.size()], level[idx / fields.size()]);
    });
  }
  return level;
}

bool CertificateReport::all_samples_nonnegative() const {
  for (const auto& s : samples)
    if (!s.nonnegative) return false;
  return true;
}

bool CertificateReport::passed() const {
  return equality_verified && terms_harmonic && all_samples_nonnegative();
}

CertificateSample sample_certificate_value(const SphereRationalFunction& value, const CapDomain& cap,
                                           const SpherePoint& point) {
  if (point == cap.pole) throw std::domain_error("cannot sample at the excluded pole");
  CertificateSample s{point, value.evaluate(point), false};
  s.nonnegative = s.value >= 0;
  return s;
}

CertificateReport verify_certificate(const HarmonicFunction& h, int k, const CertificateOptions& options) {
  if (k < 0) throw std::invalid_argument("certificate power must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  CertificateReport report;
  report.family = h.provenance();
  report.ambient_dim = h.value().ambient_dim();
  report.k = k;
  report.seed = options.seed;
  report.cap_radius = h.domain().radius;

  const SphereRationalFunction square = h.value() * h.value();
  const SphereRationalFunction lhs = delta_power(square, k);
  const bool constant = h.value().factors().empty() && h.value().numerator().representative().degree() <= 0;
  if (k == 0) {
    // The empty word: h^2 itself.
    report.trivial = true;
    report.term_count = 1;
    report.equality_verified = true;
    report.terms_harmonic = true;
  } else if (constant) {
    // Every X_w h vanishes; the sum is empty.
    report.trivial = true;
    report.term_count = 0;
    report.equality_verified = lhs.is_zero();
    report.terms_harmonic = true;
  } else {
    const auto terms = sos_certificate(h, k, options.workers);
    report.term_count = terms.size();
    const auto harmonic = parallel_map(terms.size(), options.workers,
                                       [&](std::size_t i) { return laplace_sphere(terms[i]).is_zero(); });
    report.terms_harmonic = std::all_of(harmonic.begin(), harmonic.end(), [](bool b) { return b; });
    SphereRationalFunction sum(report.ambient_dim);
    for (const auto& t : terms) sum += t * t;  // canonical word order
    sum *= Rational(Integer(1) << k);
    report.equality_verified = lhs == sum;
  }

  SpherePointSampler sampler(report.ambient_dim, options.seed);
  for (int i = 0; i < options.sample_count; ++i)
    report.samples.push_back(sample_certificate_value(lhs, h.domain(), sampler.next_in_cap(h.domain().radius)));

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Polynomial euclid_delta_power(const Polynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("delta power needs k >= 0");
  Polynomial r = p;
  for (int i = 0; i < k; ++i) r = laplace_euclid(r);
  return r;
}

EuclidCertificateReport euclid_certificate(const Polynomial& p, int k) {
  if (!laplace_euclid(p).is_zero()) throw PreconditionError("euclid_certificate needs a harmonic polynomial");
  if (k < 0) throw std::invalid_argument("certificate power must be >= 0");
  const int m = p.num_vars();
  EuclidCertificateReport report(m);
  report.k = k;
  report.delta_power_value = euclid_delta_power(p * p, k);

  std::vector<Polynomial> level{p};
  for (int depth = 0; depth < k; ++depth) {
    std::vector<Polynomial> next;
    next.reserve(level.size() * static_cast<std::size_t>(m));
    for (const auto& q : level)
      for (int v = 1; v <= m; ++v) next.push_back(partial_derivative(q, v));
    level = std::move(next);
  }
  report.term_count = level.size();
  Polynomial sum(m);
  for (const auto& t : level) sum += t * t;
  sum *= Rational(Integer(1) << k);
  report.equality_verified = sum == report.delta_power_value;

  const std::vector<Rational> grid{make_rational(-1), make_rational(-1, 2), make_rational(0), make_rational(1, 2),
                                   make_rational(1)};
  std::vector<std::size_t> idx(m, 0);
  report.grid_nonnegative = true;
  for (;;) {
    std::vector<Rational> pt(m);
    for (int v = 0; v < m; ++v) pt[v] = grid[idx[v]];
    if (report.delta_power_value.evaluate(pt) < 0) report.grid_nonnegative = false;
    ++report.grid_points;
    int v = 0;
    while (v < m && ++idx[v] == grid.size()) idx[v++] = 0;
    if (v == m) break;
  }
  return report;
}

}  // namespace sphcert
