#include "crbelt/catalog.hpp"

#include <cmath>
#include <numbers>

#include "crbelt/beltrami.hpp"
#include "crbelt/circular.hpp"
#include "crbelt/errors.hpp"

namespace crbelt {

namespace {

constexpr double kEpsCap = 0.2;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex random_phase(std::mt19937_64& rng) {
  return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

Complex random_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

// Direction in an annulus of the chart plane, bounded away from both axes.
Complex random_chart_direction(std::mt19937_64& rng) {
  return std::polar(std::exp(uniform(rng, -1.2, 1.2)), uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

std::function<CPoint(std::mt19937_64&)> circular_sampler(std::shared_ptr<const JetEvaluator> jets) {
  return [jets](std::mt19937_64& rng) -> CPoint {
    const Complex zeta = random_chart_direction(rng);
    const double s = ray_crossing(*jets, {zeta, Complex(1.0)});
    const Complex phase = random_phase(rng);
    return {zeta * s * phase, s * phase};
  };
}

void expect_params(const std::string& name, const std::vector<double>& params, std::size_t n) {
  if (params.size() != n)
    throw BadParams("fixture '" + name + "' takes " + std::to_string(n) + " parameter(s)");
}

double check_eps(const std::string& name, double eps) {
  if (!(eps > 0.0) || eps >= kEpsCap)
    throw BadParams("fixture '" + name + "' requires 0 < eps < 0.2");
  return eps;
}

}  // namespace

Fixture fixture(const std::string& name, const std::vector<double>& params) {
  Fixture f;
  f.name = name;
  f.admissible = [](const CPoint&) { return true; };

  if (name == "sphere") {
    expect_params(name, params, 0);
    f.defining = parse("abs2(z1)+abs2(z2)-1");
    f.closed_form_b = [](const CPoint&) { return Complex(0.0); };
    f.sampler = [](std::mt19937_64& rng) -> CPoint {
      const Complex a = random_gaussian(rng), b = random_gaussian(rng);
      const double n = std::sqrt(std::norm(a) + std::norm(b));
      return {a / n, b / n};
    };
    f.complete_circular = true;
  } else if (name == "heisenberg") {
    expect_params(name, params, 0);
    f.defining = parse("abs2(z1)-im(z2)");
    f.closed_form_b = [](const CPoint&) { return Complex(0.0); };
    f.sampler = [](std::mt19937_64& rng) -> CPoint {
      const Complex z1 = 0.7 * random_gaussian(rng);
      return {z1, Complex(uniform(rng, -1.0, 1.0), std::norm(z1))};
    };
  } else if (name == "lp") {
    expect_params(name, params, 1);
    const double p = params[0];
    if (!(p > 0.0)) throw BadParams("fixture 'lp' requires p > 0");
    f.defining = add(powr(parse("abs2(z1)"), p / 2.0),
                     sub(powr(parse("abs2(z2)"), p / 2.0), constant(1.0)));
    f.closed_form_b = [p](const CPoint& z) {
      const Complex w = z.z1 * z.z2;
      return (2.0 - p) / p * std::conj(w) / w;
    };
    f.admissible = [](const CPoint& z) { return std::abs(z.z1 * z.z2) > 1e-6; };
    f.complete_circular = true;
  } else if (name == "bulge") {
    expect_params(name, params, 0);
    f.defining = parse("(abs2(z1)+abs2(z2))^2+abs2(z1)^2+abs2(z2)^2-2");
    f.closed_form_b = [](const CPoint& z) {
      const Complex w = z.z1 * z.z1 * z.z2 * z.z2;
      const double q1 = std::norm(z.z1), q2 = std::norm(z.z2);
      return -3.0 * std::conj(w) / (2.0 * (q1 * q1 + 4.0 * q1 * q2 + q2 * q2));
    };
    f.complete_circular = true;
  } else if (name == "torus") {
    expect_params(name, params, 1);
    const double eps = check_eps(name, params[0]);
    const ExprPtr l1 = mul(constant(0.5), log(parse("abs2(z1)")));
    const ExprPtr l2 = mul(constant(0.5), log(parse("abs2(z2)")));
    f.defining = add(powi(l1, 2), sub(powi(l2, 2), constant(eps * eps)));
    f.closed_form_b = [](const CPoint& z) {
      const Complex w = z.z1 * z.z2;
      return -std::conj(w) / w;  // up to a 1 + O(eps) factor
    };
    f.sampler = [eps](std::mt19937_64& rng) -> CPoint {
      const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      return {std::exp(eps * std::cos(theta)) * random_phase(rng),
              std::exp(eps * std::sin(theta)) * random_phase(rng)};
    };
    f.admissible = [](const CPoint& z) { return std::abs(z.z1 * z.z2) > 1e-6; };
  } else if (name == "deformed_sphere") {
    expect_params(name, params, 1);
    const double eps = check_eps(name, params[0]);
    f.defining = add(parse("abs2(z1)+abs2(z2)-1"),
                     mul(constant(eps), parse("re(z1^2*conj(z2)^2)")));
    f.complete_circular = true;
  } else {
    throw UnknownFixture("unknown fixture '" + name + "'");
  }

  f.jets = std::make_shared<JetEvaluator>(f.defining);
  if (!f.sampler) f.sampler = circular_sampler(f.jets);
  return f;
}

std::vector<std::string> fixture_names() {
  return {"sphere", "heisenberg", "lp", "bulge", "torus", "deformed_sphere"};
}

FixtureReport verify_fixture(const Fixture& f, int n_samples, std::uint64_t seed) {
  if (!f.closed_form_b)
    throw InvalidExpression("fixture '" + f.name + "' has no closed-form coefficient");
  std::mt19937_64 rng(seed);
  FixtureReport report;
  while (report.samples < n_samples) {
    const CPoint p = f.sampler(rng);
    if (!f.admissible(p)) continue;
    const Complex numeric = beltrami_coeff(*f.jets, p).coeff;
    const double dev = std::abs(numeric - f.closed_form_b(p));
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst_point = p;
    }
    ++report.samples;
  }
  return report;
}

namespace {

double fitted_loglog_slope(const std::vector<double>& d, const std::vector<double>& gap) {
  const std::size_t n = d.size();
  double mx = 0.0, my = 0.0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = std::log(d[k]);
    ys[k] = std::log(gap[k]);
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    num += (xs[k] - mx) * (ys[k] - my);
    den += (xs[k] - mx) * (xs[k] - mx);
  }
  return num / den;
}

double axis_contact_slope(const JetEvaluator& bulge, const JetEvaluator& ellipsoid,
                          bool z1_axis) {
  std::vector<double> ds, gaps;
  for (int k = 0; k < 25; ++k) {
    const double alpha = 1e-3 * std::pow(100.0, k / 24.0);
    const double c = std::cos(alpha), s = std::sin(alpha);
    const CPoint dir = z1_axis ? CPoint{Complex(c), Complex(s)} : CPoint{Complex(s), Complex(c)};
    const double s_bulge = ray_crossing(bulge, dir);
    const double s_ell = ray_crossing(ellipsoid, dir);
    ds.push_back(alpha);
    gaps.push_back(std::abs(s_bulge - s_ell));
  }
  return fitted_loglog_slope(ds, gaps);
}

}  // namespace

ContactReport fourth_order_contact_check() {
  const JetEvaluator bulge(parse("(abs2(z1)+abs2(z2))^2+abs2(z1)^2+abs2(z2)^2-2"));
  const JetEvaluator ell1(parse("2*abs2(z1)+abs2(z2)-2"));
  const JetEvaluator ell2(parse("abs2(z1)+2*abs2(z2)-2"));
  ContactReport report;
  report.slope_z1_axis = axis_contact_slope(bulge, ell1, true);
  report.slope_z2_axis = axis_contact_slope(bulge, ell2, false);

  const JetEvaluator sphere_a(parse("abs2(z1)+abs2(z2)-1"));
  const JetEvaluator sphere_b(parse("abs2(z1)+abs2(z2)-1"));
  for (int k = 0; k < 25; ++k) {
    const double alpha = 1e-3 * std::pow(100.0, k / 24.0);
    const CPoint dir{Complex(std::cos(alpha)), Complex(std::sin(alpha))};
    report.sphere_self_gap = std::max(
        report.sphere_self_gap, std::abs(ray_crossing(sphere_a, dir) - ray_crossing(sphere_b, dir)));
  }
  return report;
}

}  // namespace crbelt
