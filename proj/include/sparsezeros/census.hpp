#ifndef SPARSEZEROS_CENSUS_HPP
#define SPARSEZEROS_CENSUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sparsezeros/newton.hpp"
#include "sparsezeros/roots.hpp"
#include "sparsezeros/trees.hpp"

namespace sparsezeros {

/// Moebius mu, by trial division.
int mobius(std::int64_t n);

/// (p, m) with q = p^m; rejects non prime powers.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q);

/// Per-degree counts c_j = sum_{i|j} q^{ik} mu(j/i) and their total
/// B = sum_{j<=d} c_j, the degree-bound theorem's constant.  Cross-checked
/// against direct enumeration of F_{q^lcm(1..d)}[X]_{<k} by coefficient
/// field whenever the enumeration fits the cap.
struct BoundTable {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::int64_t d = 0;
    std::vector<std::uint64_t> per_degree; // c_1..c_d
    std::uint64_t total = 0;
    bool enumerated = false; // whether the enumeration cross-check ran
};
BoundTable bound_table(std::uint64_t q, std::size_t k, std::int64_t d);

/// Random-corpus configuration.  Coefficients are exact Laurent polynomials
/// with support in [coeff_lo, coeff_hi]; exponents are distinct in
/// [0, exp_cap]; everything is driven by (seed, instance index) only, so
/// reports are reproducible at any fan-out.
struct CorpusSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::size_t k_min = 1;
    std::size_t k_max = 3;
    std::int64_t exp_cap = 20;
    std::int64_t coeff_lo = -3;
    std::int64_t coeff_hi = 6;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::int64_t prec = 16;
    std::size_t oracle_every = 0; // check every Nth instance against the oracle (0 = off)
    std::int64_t oracle_prec = 8;
    std::int64_t oracle_lo = -3;
    std::int64_t oracle_hi = 4;
    std::size_t distance_centers = 10;
    bool check_trees = true;
    bool check_phi = true;
    bool check_recenter_rank = true;
    bool check_transforms = false;
    std::size_t jobs = 1;
};

struct InstanceReport {
    std::size_t index = 0;
    std::string poly;
    std::size_t k = 0;
    std::size_t count = 0;
    std::uint64_t bound = 0;
    bool equality = false;
    std::size_t unresolved = 0;
    std::vector<std::string> violations; // empty = instance passed
    std::vector<std::string> notes;      // skipped sub-checks etc.
    bool oracle_checked = false;

    bool ok() const { return violations.empty(); }
};

struct VerifyReport {
    CorpusSpec spec;
    std::vector<InstanceReport> instances;
    std::size_t violations = 0;
    std::size_t equality_hits = 0;
    std::size_t max_count = 0;
    std::size_t unresolved_total = 0;
    std::int64_t elapsed_ms = 0;
    bool all_ok = false;
};

/// Every check the campaign runs, applied to a single polynomial.
InstanceReport verify_instance(const SparsePoly& f, const CorpusSpec& opts, std::size_t index);

/// Sample `samples` random sparse polynomials and verify each; any
/// assertion failure is recorded with the instance's text-grammar
/// serialization as reproducer.  Deterministic in (seed); `jobs` fans out.
VerifyReport run_campaign(const CorpusSpec& spec);

/// The instance sampler (exposed for tests and the CLI).
SparsePoly sample_instance(const CorpusSpec& spec, std::size_t index);

} // namespace sparsezeros

#endif
