#pragma once

// Randomized two-path checks for every identity the library realizes.
// Each check draws seeded random parameters, evaluates the identity's two
// independent computation routes, and reports the worst observed error.
// Shared by the `verify` CLI subcommand and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qmlf::verify {

// Deterministic uniform draws: the raw 64-bit stream is mapped to doubles
// explicitly so reports are identical across standard libraries.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi); // inclusive bounds

  private:
    std::mt19937_64 gen_;
};

struct IdentityCheck {
    std::string id;
    // Which acceptance criterion the check belongs to (1-based).
    int criterion;
    double tolerance;
    int default_trials;
    // Runs `trials` seeded draws, returns the largest error observed.
    double (*run)(Rng&, int trials);
};

struct IdentityResult {
    std::string id;
    int criterion = 0;
    int trials = 0;
    double max_abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// The full registry, in report order.
const std::vector<IdentityCheck>& identity_suite();

// Runs every identity. trials <= 0 keeps each check's default count
// (the acceptance-criteria counts); otherwise the override applies to all.
std::vector<IdentityResult> run_identity_suite(std::uint64_t seed, int trials = 0);

} // namespace qmlf::verify
