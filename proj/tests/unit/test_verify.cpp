#include <catch_amalgamated.hpp>

#include <cmath>
#include <nlohmann/json.hpp>

#include "radii/radii.hpp"
#include "radii/verify.hpp"

using namespace radii;

TEST_CASE("tightness examples", "[verify]") {
  const VerificationReport lem = verify_radius_tightness(Region::of(RegionKind::Lemniscate), ClassParams::h1(1, 1, 2));
  CHECK(lem.passed());
  CHECK(lem.skipped.empty());
  CHECK(lem.suite == "tightness");

  const VerificationReport quartic = verify_radius_tightness(Region::starlike(0), ClassParams::h3(0, 0));
  CHECK(quartic.passed());
  CHECK(quartic.skipped.empty());
  CHECK(quartic.cases_run >= 6);

  const VerificationReport parabolic = verify_radius_tightness(Region::of(RegionKind::Parabolic), ClassParams::h2(1, 1, 2));
  CHECK(parabolic.passed());
  REQUIRE(parabolic.skipped.size() == 1);
  CHECK(parabolic.skipped[0].find("not claimed sharp") != std::string::npos);

  // Sign conditions fail: u = 6b - 4c < 0.
  const VerificationReport unsigned_params =
      verify_radius_tightness(Region::of(RegionKind::Sine), ClassParams::h1(0.2, 0.5, 1));
  CHECK(unsigned_params.passed());
  REQUIRE(unsigned_params.skipped.size() == 1);
  CHECK(unsigned_params.skipped[0].find("sign conditions") != std::string::npos);

  CHECK_THROWS_AS(verify_radius_tightness(Region::starlike(0), ClassParams::h3(0, 0), 0.0), Error);
  CHECK_THROWS_AS(verify_radius_tightness(Region::starlike(0), ClassParams::h3(0, 0), 0.2), Error);
  CHECK_THROWS_AS(verify_tightness_at(Region::starlike(0), ClassParams::h3(0, 0), 1.5), Error);
}

TEST_CASE("tightness fails around a radius that is too large", "[verify]") {
  for (RegionKind kind : all_region_kinds()) {
    for (const ClassParams& p : {ClassParams::h1(1, 1, 2), ClassParams::h2(1, 1, 2), ClassParams::h3(1, 2)}) {
      const Region region = kind == RegionKind::StarlikeOrder ? Region::starlike(0) : Region::of(kind);
      const double rho = compute_radius(region, p).radius;
      INFO(to_string(kind) << " " << to_string(p.kind()));
      CHECK(verify_tightness_at(region, p, rho).passed());
      CHECK_FALSE(verify_tightness_at(region, p, rho * 1.1).passed());
    }
  }
  // Too small a radius breaks check (b) for a sharp pair.
  const Region sine = Region::of(RegionKind::Sine);
  const ClassParams h1 = ClassParams::h1(1, 1, 2);
  const VerificationReport small = verify_tightness_at(sine, h1, 0.9 * compute_radius(sine, h1).radius);
  CHECK_FALSE(small.passed());
  CHECK(small.failures[0].inputs.find("check=b") != std::string::npos);
}

TEST_CASE("tightness suite", "[verify]") {
  const VerificationReport report = verify_tightness_suite(3, 42);
  CHECK(report.passed());
  CHECK(report.cases_run > 30 * 4);
  // Non-sharp parts are skipped at every parameter set, never failed.
  std::size_t not_sharp = 0;
  for (const auto& s : report.skipped) {
    if (s.find("not claimed sharp") != std::string::npos) ++not_sharp;
  }
  CHECK(not_sharp == 5 * 4);
}

TEST_CASE("lemma suite", "[verify]") {
  const VerificationReport report = verify_lemma_bounds(100000, 42);
  CHECK(report.passed());
  CHECK(report.cases_run == 100000);
  CHECK(report.suite == "lemmas");

  CHECK(verify_lemma_bounds(1, 3).cases_run == 1);
  CHECK_FALSE(verify_lemma_bounds(100000, 7, 0.999).passed());
  CHECK_THROWS_AS(verify_lemma_bounds(0, 1), Error);
}

TEST_CASE("crosscheck suite", "[verify]") {
  const VerificationReport report = verify_polynomial_crosscheck(200, 1);
  CHECK(report.passed());
  CHECK(report.cases_run >= 6000);
  CHECK(report.max_residual <= 1e-9);
  bool parabolic = false, nephroid = false;
  for (const auto& f : report.flagged) {
    parabolic = parabolic || f.part == "parabolic/h2";
    nephroid = nephroid || f.part == "nephroid/h3";
    CHECK(f.part != "sine/h1");
  }
  CHECK(parabolic);
  CHECK(nephroid);

  const VerificationReport one = verify_polynomial_crosscheck(1, 1);
  CHECK(one.passed());
  CHECK(one.cases_run >= 30);

  CHECK_FALSE(verify_polynomial_crosscheck(20, 1, 0.0).passed());
}

TEST_CASE("reports are deterministic and serialize", "[verify]") {
  CHECK(to_json(verify_lemma_bounds(500, 9), false) == to_json(verify_lemma_bounds(500, 9), false));
  // Failures list the sampled inputs, so different seeds must differ there.
  CHECK(to_json(verify_lemma_bounds(50, 9, 0.5), false) != to_json(verify_lemma_bounds(50, 10, 0.5), false));
  CHECK(to_json(verify_polynomial_crosscheck(10, 2), false) == to_json(verify_polynomial_crosscheck(10, 2), false));
  CHECK(to_json(verify_tightness_suite(1, 2), false) == to_json(verify_tightness_suite(1, 2), false));

  const auto j = nlohmann::json::parse(to_json(verify_lemma_bounds(10, 1, 0.5)));
  for (const char* key : {"suite", "cases_run", "failures", "max_residual", "elapsed_ms", "skipped", "flagged"}) {
    CHECK(j.contains(key));
  }
  CHECK_FALSE(j["failures"].empty());
  CHECK(j["failures"][0].contains("tolerance"));
  CHECK_FALSE(nlohmann::json::parse(to_json(verify_lemma_bounds(10, 1), false)).contains("elapsed_ms"));
}

TEST_CASE("random streams", "[verify]") {
  auto a = suite_rng(1, "lemmas");
  auto b = suite_rng(1, "lemmas");
  auto c = suite_rng(1, "crosscheck");
  const auto first = a();
  CHECK(first == b());
  CHECK(first != c());
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(a);
    CHECK((u >= 0.0 && u < 1.0));
  }
  for (ClassKind kind : {ClassKind::H1, ClassKind::H2, ClassKind::H3}) {
    for (int i = 0; i < 200; ++i) {
      const ClassParams p = random_admissible(kind, a);
      CHECK(p.kind() == kind);
    }
  }
}
