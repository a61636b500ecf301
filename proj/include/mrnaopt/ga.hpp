#ifndef MRNAOPT_GA_HPP
#define MRNAOPT_GA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mrnaopt/codon_tables.hpp"
#include "mrnaopt/metrics.hpp"
#include "mrnaopt/sequence.hpp"

namespace mrnaopt {

/// splitmix64 stream. Streams derived from (seed, generation, slot) are
/// independent, which keeps runs reproducible no matter how evaluation is
/// scheduled across threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}
    static RngStream derive(std::uint64_t seed, std::uint64_t generation, std::uint64_t slot);

    std::uint64_t next_u64();
    double next_double(); // [0,1)
    std::size_t uniform_index(std::size_t n);
    std::size_t weighted_index(const std::vector<double>& weights);

private:
    std::uint64_t state_;
};

struct Individual {
    NucleicSequence cds;
    std::optional<MetricVector> metrics;
    std::optional<double> fitness;
};

using Population = std::vector<Individual>;

/// Eq.-style weighted-sum coefficients; must be nonnegative and sum to 1.
struct FitnessWeights {
    double cai = 0.20;
    double tai = 0.15;
    double cpb = 0.10;
    double mfe_global = 0.15;
    double unpaired30 = 0.10;
    double gc = 0.10;
    double immune = 0.10;
    double utr_balance = 0.03;
    double motif = 0.02;
    double embed = 0.05;

    double sum() const;
    void validate() const;
};

/// Normalization bands: a value inside [lo, hi] scores 1; outside it decays
/// linearly over `falloff` and clamps at 0.
struct Bands {
    double gc_lo = 0.55, gc_hi = 0.70, gc_falloff = 0.15;
    double mfe_lo = -360.0, mfe_hi = -330.0, mfe_falloff = 100.0;
    double motif_lo = 90.0, motif_hi = 110.0, motif_falloff = 50.0;
    double utr_lo = 0.60, utr_hi = 0.70, utr_falloff = 0.30;
    double immune_max = 100.0;
    double cpb_scale = 1.0;
};

double band_score(double value, double lo, double hi, double falloff);

struct NormalizedScores {
    double cai = 0, tai = 0, cpb = 0, mfe_global = 0, unpaired30 = 0;
    double gc = 0, immune = 0, utr_balance = 0, motif = 0, embed = 0;
};

/// Map raw metrics into [0,1]: cai/tai/unpaired30/embed pass through, gc /
/// mfe / motif / utr get band scores, immune maps to 1 - raw/immune_max
/// (clamped), cpb through a logistic.
NormalizedScores normalize_metrics(const MetricVector& m, const Bands& bands);

/// Weighted sum of the normalized scores; in [0,1] by construction.
double fitness(const MetricVector& m, const FitnessWeights& w, const Bands& bands);

struct GaConfig {
    int pop_init = 220;
    int pop_cap = 1000;
    int growth_step = 20;
    double mutation_rate = 0.2;    // per-offspring probability of a mutation pass
    double per_codon_rate = 0.01;  // within a pass, per-codon substitution rate
    double crossover_rate = 0.8;
    int tournament_size = 3;
    int elitism = 2;
    double plateau_eps = 1e-4;
    int plateau_window = 5;
    int max_generations = 60;
    std::uint64_t rng_seed = 1;
    int eval_threads = 0; // 0 = hardware concurrency
    Bands bands;
    FitnessWeights weights;

    void validate() const;
};

struct MetricMeans {
    double cai = 0, tai = 0, cpb_raw = 0, gc = 0, immune_raw = 0, unpaired30 = 0;
    double mfe_global = 0, mfe_local = 0, utr_balance = 0, motif_total = 0, embed_sim = 0;
};

struct GenerationStats {
    int generation = 0;
    std::size_t pop_size = 0;
    double fitness_mean = 0, fitness_max = 0, fitness_min = 0;
    MetricMeans means;
};

/// Fixed run inputs shared by every evaluation.
struct EvalContext {
    MetricTables tables;
    const Folder* folder = nullptr;
    EvalConfig eval;
    NucleicSequence utr5, utr3; // may be empty

    Construct construct_for(const NucleicSequence& cds) const { return Construct(utr5, cds, utr3); }
};

/// Usage-weighted seeding: codon i sampled from the synonym family of
/// residue i proportional to usage, stop codon sampled from stop usage.
/// The target must begin with M so individuals can satisfy the CDS rules.
Population seed_population(const ProteinSequence& target, const CodonUsageTable& usage, int n,
                           RngStream& rng, const GeneticCode& code = GeneticCode::standard());

/// Deterministic rendering of the target with each family's most used codon
/// (ties to the lexicographically first). Default embedding reference.
NucleicSequence preferred_codon_cds(const ProteinSequence& target, const CodonUsageTable& usage,
                                    const GeneticCode& code = GeneticCode::standard());

struct ImportResult {
    Population individuals;
    std::vector<std::string> dropped; // "header: reason" per discarded record
};

/// FASTA import; records failing validation against the target are dropped
/// with a reason. Zero surviving records is an error.
ImportResult import_population(const std::string& fasta_path, const ProteinSequence& target,
                               const GeneticCode& code = GeneticCode::standard());

/// k uniform draws with replacement; returns the index of the fittest
/// sampled individual, ties broken by the lowest population index.
std::size_t tournament_select(const Population& pop, int k, RngStream& rng);

/// Single codon-boundary cut point in (0, L); suffixes swap with
/// probability crossover_rate, otherwise the children are copies.
std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b,
                                            double crossover_rate, RngStream& rng);

/// With probability mutation_rate, substitute each internal codon with
/// probability per_codon_rate by a family synonym sampled by usage.
Individual mutate(const Individual& ind, const CodonUsageTable& usage, double mutation_rate,
                  double per_codon_rate, RngStream& rng,
                  const GeneticCode& code = GeneticCode::standard());

/// Evaluate metrics+fitness for individuals that lack them; parallel over
/// individuals when cfg.eval_threads allows.
void evaluate_population(Population& pop, const GaConfig& cfg, const EvalContext& ctx);

GenerationStats population_stats(const Population& pop, int generation);

/// One generation: grow toward the cap, copy elites, breed the remainder
/// via tournament -> crossover -> mutate, evaluate, summarize.
Population evolve_generation(const Population& pop, const GaConfig& cfg, const EvalContext& ctx,
                             int generation, GenerationStats* stats);

struct RunResult {
    std::vector<GenerationStats> stats;
    Population final_population;
    std::vector<std::size_t> top_k; // indices into final_population, fitness-descending
    bool plateau_stopped = false;
};

using GenerationObserver = std::function<void(int generation, const Population&)>;

/// Full generational loop with plateau stopping: stops once best-fitness
/// improvement over the trailing plateau_window generations falls below
/// plateau_eps, or at max_generations.
RunResult run(const ProteinSequence& target, const GaConfig& cfg, const EvalContext& ctx,
              int top_k = 10, Population initial = {}, const GenerationObserver& observer = {});

} // namespace mrnaopt

#endif
