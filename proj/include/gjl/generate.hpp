#ifndef GJL_GENERATE_HPP
#define GJL_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gjl/models.hpp"

namespace gjl {

/// splitmix64; fixed across platforms so sampled checks are reproducible.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool flip() { return below(2) == 0; }
};

Term random_term(Rng& rng, std::size_t max_depth, unsigned constants = 2,
                 unsigned variables = 3);
JFormula random_jformula(Rng& rng, std::size_t max_depth, unsigned atoms = 3,
                         std::size_t term_depth = 1);
MFormula random_mformula(Rng& rng, std::size_t max_depth, unsigned atoms = 3);

/// Values from the grid {0, 1/4, 1/3, 1/2, 2/3, 3/4, 1}.
TruthValue random_truth_value(Rng& rng);
Valuation random_valuation(Rng& rng, unsigned atoms = 3);

/// A FiniteSpec/AllOnes model passing the exact class check, by biased
/// generation plus retry; nullopt when the attempt budget runs out (factive
/// classes with negative introspection have no finitely-described members).
std::optional<Model> random_model_for_class(Rng& rng, ModelClass cls,
                                            std::size_t attempts = 64);

/// An axiom instance of the scheme with small random bindings.
JFormula random_axiom_instance(Rng& rng, SchemeName scheme);
JFormula random_axiom_instance(Rng& rng, JCalc calculus);

/// A checking Hilbert proof: assumptions, axiom instances, CS members and
/// all the modus-ponens compositions the line pool happens to admit.
JProof random_proof(Rng& rng, JCalc calculus, const ConstantSpec& cs,
                    std::size_t max_lines, unsigned max_assumptions);

struct UniverseBuild {
  std::vector<EvidenceKey> pairs;
  std::vector<JFormula> cs_sample;
  std::string error;
  explicit operator bool() const { return error.empty(); }
};

/// Universe for sampled class checks of x-rooted models: the given seed pairs
/// plus a deterministic batch of (a) pairs over refuted formulas and (b)
/// certified provable pairs with their closure partners, every one of them
/// decided in the oracle before use.
UniverseBuild build_provability_universe(TheoremhoodOracle& oracle, Rng& rng,
                                         std::size_t target_size,
                                         const std::vector<EvidenceKey>& seed_pairs,
                                         std::size_t cs_sample_size = 20);

} // namespace gjl

#endif
