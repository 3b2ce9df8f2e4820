#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "crbelt/circular.hpp"
#include "crbelt/errors.hpp"
#include "crbelt/reports.hpp"
#include "crbelt/winding.hpp"

using namespace crbelt;

TEST_CASE("eval report fields and stable order") {
  const Fixture sphere = fixture("sphere");
  const double s = 1.0 / std::sqrt(2.0);
  const std::string a = eval_report_json(sphere, {Complex(s), Complex(s)});
  const std::string b = eval_report_json(sphere, {Complex(s), Complex(s)});
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["coeff"][0].get<double>() == 0.0);
  CHECK(j["coeff"][1].get<double>() == 0.0);
  CHECK(j["beta"].get<double>() == 0.0);
  CHECK(j["contact_order"] == "at_least_3");
  CHECK(j["projective_umbilic"] == true);
  CHECK(j["strongly_c_convex_here"] == true);
}

TEST_CASE("scan CSV: bulge minimum sits at the grid point nearest zero") {
  const CircularSurface bulge(fixture("bulge").defining);
  const std::string csv = scan_csv(bulge, {Complex(0.0), 2.0, 41, 2});
  // Parse rows, find min |b|.
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "re_zeta,im_zeta,re_b,im_b,abs_b");
  double best = 1e300, best_re = -1, best_im = -1;
  int rows = 0;
  while (std::getline(in, line)) {
    double re, im, rb, ib, ab;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &re, &im, &rb, &ib, &ab) == 5);
    if (ab < best) {
      best = ab;
      best_re = re;
      best_im = im;
    }
    ++rows;
  }
  CHECK(rows == 41 * 41);
  CHECK(best_re == 0.0);
  CHECK(best_im == 0.0);
  CHECK(best <= 1e-12);
}

TEST_CASE("scan emits nan sentinels on inadmissible grid points") {
  const CircularSurface lp4(fixture("lp", {4.0}).defining);
  const std::string csv = scan_csv(lp4, {Complex(0.0), 1.0, 3, 1});
  // The center point zeta = 0 has z1 = 0, outside the smooth locus.
  CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("find-umbilics report on the L4 ball is empty with a warning") {
  const CircularSurface lp4(fixture("lp", {4.0}).defining);
  const UmbilicSearchRequest req{Complex(0.0), 1.5, 1e-2, 1e-5, 20.0};
  const auto j = nlohmann::json::parse(find_umbilics_report_json(lp4, req));
  CHECK(j["cells"].empty());
  CHECK(!j["rejected_cells"].empty());
  CHECK(j["stokes_consistent"] == true);
  CHECK(j["index_sum"].get<int>() == -2);
  bool smoothness_warning = false;
  for (const auto& w : j["warnings"])
    if (w.get<std::string>().find("not smooth") != std::string::npos) smoothness_warning = true;
  CHECK(smoothness_warning);
}

TEST_CASE("find-umbilics report on the bulge confirms the origin cell") {
  const CircularSurface bulge(fixture("bulge").defining);
  const UmbilicSearchRequest req{Complex(0.0), 0.5, 1e-2, 1e-5, 20.0};
  const auto j = nlohmann::json::parse(find_umbilics_report_json(bulge, req));
  CHECK(!j["cells"].empty());
  CHECK(j["index_sum"].get<int>() == -2);
  CHECK(j["stokes_consistent"] == true);
  CHECK(j["axis"]["axis_hypothesis"] == false);
  bool axis_warning = false;
  for (const auto& w : j["warnings"])
    if (w.get<std::string>().find("z1-axis") != std::string::npos) axis_warning = true;
  CHECK(axis_warning);
}

TEST_CASE("scan minima agree with locate_zero_cells on the deformed sphere") {
  const CircularSurface s(fixture("deformed_sphere", {0.05}).defining);
  const auto cells = locate_zero_cells(s, {Complex(0.0), 2.0}, 0.05);
  std::vector<Complex> zeros;
  for (const ZeroCell& c : cells) zeros.push_back(refine_zero(s, c));
  REQUIRE(zeros.size() == 4);

  const std::string csv = scan_csv(s, {Complex(0.0), 2.0, 81, 2});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  double best = 1e300;
  Complex argmin;
  while (std::getline(in, line)) {
    double re, im, rb, ib, ab;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &re, &im, &rb, &ib, &ab) == 5);
    if (ab < best) {
      best = ab;
      argmin = Complex(re, im);
    }
  }
  double dist = 1e300;
  for (const Complex& z : zeros) dist = std::min(dist, std::abs(argmin - z));
  CHECK(dist <= 0.1);  // within two grid steps of a located zero
}

TEST_CASE("catalog entries resolve") {
  const std::string catalog = R"([
    {"name": "bulge"},
    {"name": "flat4", "fixture": "lp", "params": [4.0]},
    {"name": "custom", "expression": "abs2(z1)+abs2(z2)-1"}
  ])";
  CHECK_THROWS_AS(load_catalog_entry(catalog, ""), BadParams);
  const SurfaceSpec bulge = load_catalog_entry(catalog, "bulge");
  CHECK(bulge.fixture_name == "bulge");
  const SurfaceSpec flat4 = load_catalog_entry(catalog, "flat4");
  CHECK(flat4.fixture_name == "lp");
  REQUIRE(flat4.params.size() == 1);
  CHECK(flat4.params[0] == 4.0);
  CHECK(resolve_surface(flat4).name == "lp");
  const SurfaceSpec custom = load_catalog_entry(catalog, "custom");
  CHECK(custom.expression == "abs2(z1)+abs2(z2)-1");
  const Fixture f = resolve_surface(custom);
  CHECK(std::abs(eval(f.defining, {Complex(1.0), Complex(0.0)})) <= 1e-15);
  CHECK_THROWS_AS(load_catalog_entry(catalog, "missing"), BadParams);
}

TEST_CASE("transform report stays within tolerance") {
  const auto j = nlohmann::json::parse(transform_report_json(fixture("bulge"), 5, 2));
  CHECK(j["max_residual"].get<double>() <= 1e-7 * 2.0);
  CHECK(j["checks"].get<int>() == 10);
}

TEST_CASE("rossi report") {
  const auto j = nlohmann::json::parse(rossi_report_json(0.3, 100));
  CHECK(j["expected_axis_ratio"].get<double>() == doctest::Approx(13.0 / 7.0));
  CHECK(j["max_ratio_deviation"].get<double>() <= 1e-9);
  CHECK(j["max_direction_deviation"].get<double>() <= 1e-9);
}
