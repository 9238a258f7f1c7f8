#include <doctest.h>

#include "surfgerm/etypes.hpp"
#include "surfgerm/sweeps.hpp"

using namespace surfgerm;

TEST_CASE("continuant sweep passes") {
  const auto r = verify_continuants(500, 7);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.first_failure);
    CHECK(c.passed());
  }
  CHECK(r.all_pass());
  CHECK(r.trials == 500);
}

TEST_CASE("lemma sweep passes") {
  const auto r = verify_lemmas(500, 7);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.first_failure);
    CHECK(c.passed());
  }
  CHECK(r.all_pass());
}

TEST_CASE("parallel sweeps reproduce the serial reference") {
  for (std::uint64_t seed : {1u, 7u, 12345u}) {
    CHECK(verify_continuants(120, seed, Exec::Parallel) == verify_continuants(120, seed, Exec::Serial));
    CHECK(verify_lemmas(120, seed, Exec::Parallel) == verify_lemmas(120, seed, Exec::Serial));
  }
}

TEST_CASE("sweeps are deterministic in the seed") {
  const auto a = verify_lemmas(60, 99);
  CHECK(a == verify_lemmas(60, 99));
  const auto b = verify_lemmas(60, 100);
  bool differs = false;
  for (std::size_t k = 0; k < a.checks.size(); ++k) differs = differs || a.checks[k].cases != b.checks[k].cases;
  CHECK(differs);
}
