#include "mrnaopt/ga.hpp"

#include "mrnaopt/fasta.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mrnaopt {

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
    return splitmix64_next(s);
}

} // namespace

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t generation, std::uint64_t slot) {
    return RngStream(mix(mix(seed, generation), slot));
}

std::uint64_t RngStream::next_u64() { return splitmix64_next(state_); }

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RngStream::uniform_index(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("uniform_index over an empty range");
    return static_cast<std::size_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

std::size_t RngStream::weighted_index(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw std::invalid_argument("negative sampling weight");
        total += w;
    }
    if (total <= 0.0)
        throw std::invalid_argument("weighted_index needs a positive total weight");
    double r = next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (r < acc)
            return i;
    }
    return weights.size() - 1;
}

double FitnessWeights::sum() const {
    return cai + tai + cpb + mfe_global + unpaired30 + gc + immune + utr_balance + motif + embed;
}

void FitnessWeights::validate() const {
    for (double w : {cai, tai, cpb, mfe_global, unpaired30, gc, immune, utr_balance, motif, embed})
        if (w < 0.0)
            throw std::invalid_argument("fitness weights must be nonnegative");
    if (std::fabs(sum() - 1.0) > 1e-9)
        throw std::invalid_argument("fitness weights must sum to 1 (got " +
                                    std::to_string(sum()) + ")");
}

void GaConfig::validate() const {
    if (pop_init < 1 || pop_cap < 1 || pop_init > pop_cap)
        throw std::invalid_argument("population sizes must satisfy 1 <= pop_init <= pop_cap");
    if (growth_step < 0)
        throw std::invalid_argument("growth_step must be nonnegative");
    for (double r : {mutation_rate, per_codon_rate, crossover_rate})
        if (r < 0.0 || r > 1.0)
            throw std::invalid_argument("rates must lie in [0,1]");
    if (tournament_size < 1)
        throw std::invalid_argument("tournament_size must be at least 1");
    if (elitism < 0 || elitism > pop_init)
        throw std::invalid_argument("elitism must lie in [0, pop_init]");
    if (plateau_window < 1 || max_generations < 1)
        throw std::invalid_argument("plateau_window and max_generations must be positive");
    weights.validate();
}

double band_score(double value, double lo, double hi, double falloff) {
    if (value >= lo && value <= hi)
        return 1.0;
    double excess = value < lo ? lo - value : value - hi;
    return std::max(0.0, 1.0 - excess / falloff);
}

NormalizedScores normalize_metrics(const MetricVector& m, const Bands& bands) {
    NormalizedScores s;
    s.cai = m.cai;
    s.tai = m.tai;
    s.unpaired30 = m.unpaired30;
    s.embed = m.embed_sim;
    s.gc = band_score(m.gc, bands.gc_lo, bands.gc_hi, bands.gc_falloff);
    s.mfe_global = band_score(m.mfe_global, bands.mfe_lo, bands.mfe_hi, bands.mfe_falloff);
    s.motif = band_score(m.motif_total, bands.motif_lo, bands.motif_hi, bands.motif_falloff);
    s.utr_balance = band_score(m.utr_balance, bands.utr_lo, bands.utr_hi, bands.utr_falloff);
    s.immune = 1.0 - std::min(1.0, m.immune_raw / bands.immune_max);
    s.cpb = 1.0 / (1.0 + std::exp(-m.cpb_raw / bands.cpb_scale));
    return s;
}

double fitness(const MetricVector& m, const FitnessWeights& w, const Bands& bands) {
    w.validate();
    NormalizedScores s = normalize_metrics(m, bands);
    return w.cai * s.cai + w.tai * s.tai + w.cpb * s.cpb + w.mfe_global * s.mfe_global +
           w.unpaired30 * s.unpaired30 + w.gc * s.gc + w.immune * s.immune +
           w.utr_balance * s.utr_balance + w.motif * s.motif + w.embed * s.embed;
}

Population seed_population(const ProteinSequence& target, const CodonUsageTable& usage, int n,
                           RngStream& rng, const GeneticCode& code) {
    if (n < 1)
        throw std::invalid_argument("seed_population needs n >= 1");
    if (target.size() == 0)
        throw std::invalid_argument("empty target protein");
    if (target.at(0) != 'M')
        throw std::invalid_argument(
            "target protein must begin with M so the CDS can start with ATG");

    // per-residue family weight vectors, built once
    std::vector<const std::vector<int>*> families(target.size());
    for (std::size_t i = 0; i < target.size(); ++i)
        families[i] = &code.family(target.at(i));

    const auto& stops = code.stop_codons();
    std::vector<double> stop_weights;
    for (int c : stops)
        stop_weights.push_back(usage.stop_freq(c));

    Population pop;
    pop.reserve(n);
    std::vector<double> weights;
    for (int k = 0; k < n; ++k) {
        std::string cds;
        cds.reserve(3 * (target.size() + 1));
        for (std::size_t i = 0; i < target.size(); ++i) {
            const auto& fam = *families[i];
            weights.clear();
            for (int c : fam)
                weights.push_back(usage.at(c));
            cds += codon_text(fam[rng.weighted_index(weights)]);
        }
        cds += codon_text(stops[rng.weighted_index(stop_weights)]);
        pop.push_back(Individual{NucleicSequence(cds), std::nullopt, std::nullopt});
    }
    return pop;
}

NucleicSequence preferred_codon_cds(const ProteinSequence& target, const CodonUsageTable& usage,
                                    const GeneticCode& code) {
    if (target.size() == 0)
        throw std::invalid_argument("empty target protein");
    if (target.at(0) != 'M')
        throw std::invalid_argument(
            "target protein must begin with M so the CDS can start with ATG");
    std::string cds;
    cds.reserve(3 * (target.size() + 1));
    for (std::size_t i = 0; i < target.size(); ++i) {
        const auto& fam = code.family(target.at(i));
        int best = fam[0];
        for (int c : fam)
            if (usage.at(c) > usage.at(best))
                best = c;
        cds += codon_text(best);
    }
    int best_stop = code.stop_codons()[0];
    for (int c : code.stop_codons())
        if (usage.stop_freq(c) > usage.stop_freq(best_stop))
            best_stop = c;
    cds += codon_text(best_stop);
    return NucleicSequence(cds);
}

ImportResult import_population(const std::string& fasta_path, const ProteinSequence& target,
                               const GeneticCode& code) {
    auto records = parse_fasta(fasta_path);
    ImportResult out;
    for (const auto& [header, text] : records) {
        NucleicSequence cds;
        try {
            cds = NucleicSequence::from_any(text).to_dna();
        } catch (const std::exception& e) {
            out.dropped.push_back(header + ": " + e.what());
            continue;
        }
        CdsReport report = validate_cds(cds, target, code);
        if (!report.valid()) {
            out.dropped.push_back(header + ": " + report.describe());
            continue;
        }
        out.individuals.push_back(Individual{cds, std::nullopt, std::nullopt});
    }
    if (out.individuals.empty())
        throw std::runtime_error("no valid records in " + fasta_path);
    return out;
}

std::size_t tournament_select(const Population& pop, int k, RngStream& rng) {
    if (pop.empty())
        throw std::invalid_argument("tournament over an empty population");
    if (k < 1)
        throw std::invalid_argument("tournament size must be at least 1");
    std::size_t best = pop.size();
    for (int t = 0; t < k; ++t) {
        std::size_t i = rng.uniform_index(pop.size());
        if (!pop[i].fitness.has_value())
            throw std::logic_error("tournament over an unevaluated individual");
        if (best == pop.size() || *pop[i].fitness > *pop[best].fitness ||
            (*pop[i].fitness == *pop[best].fitness && i < best))
            best = i;
    }
    return best;
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b,
                                            double crossover_rate, RngStream& rng) {
    if (a.cds.size() != b.cds.size())
        throw std::logic_error("crossover parents must have equal CDS lengths");
    Individual c1{a.cds, std::nullopt, std::nullopt};
    Individual c2{b.cds, std::nullopt, std::nullopt};
    const std::size_t codons = a.cds.size() / 3;
    if (codons >= 2 && rng.next_double() < crossover_rate) {
        std::size_t cut = 1 + rng.uniform_index(codons - 1); // codon boundary in (0, L)
        std::string s1 = a.cds.dna().substr(0, 3 * cut) + b.cds.dna().substr(3 * cut);
        std::string s2 = b.cds.dna().substr(0, 3 * cut) + a.cds.dna().substr(3 * cut);
        c1.cds = NucleicSequence(s1);
        c2.cds = NucleicSequence(s2);
    } else {
        // keep metrics of verbatim copies
        c1.metrics = a.metrics;
        c1.fitness = a.fitness;
        c2.metrics = b.metrics;
        c2.fitness = b.fitness;
    }
    return {std::move(c1), std::move(c2)};
}

Individual mutate(const Individual& ind, const CodonUsageTable& usage, double mutation_rate,
                  double per_codon_rate, RngStream& rng, const GeneticCode& code) {
    if (rng.next_double() >= mutation_rate)
        return ind;
    const std::size_t codons = ind.cds.size() / 3;
    std::string cds = ind.cds.dna();
    bool changed = false;
    std::vector<double> weights;
    for (std::size_t c = 1; c + 1 < codons; ++c) { // skip start and stop
        if (rng.next_double() >= per_codon_rate)
            continue;
        int id = codon_id(cds[3 * c], cds[3 * c + 1], cds[3 * c + 2]);
        const auto& fam = code.family_of(id);
        if (fam.size() == 1)
            continue;
        weights.clear();
        for (int syn : fam)
            weights.push_back(usage.at(syn));
        int pick = fam[rng.weighted_index(weights)];
        if (pick != id) {
            cds.replace(3 * c, 3, codon_text(pick));
            changed = true;
        }
    }
    if (!changed)
        return ind;
    return Individual{NucleicSequence(cds), std::nullopt, std::nullopt};
}

void evaluate_population(Population& pop, const GaConfig& cfg, const EvalContext& ctx) {
    if (ctx.folder == nullptr)
        throw std::logic_error("EvalContext has no folding backend");

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < pop.size(); ++i)
        if (!pop[i].metrics.has_value())
            todo.push_back(i);
    if (todo.empty())
        return;

    int threads = cfg.eval_threads > 0
                      ? cfg.eval_threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, static_cast<int>(todo.size()));

    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mu;

    auto worker = [&]() {
        for (;;) {
            std::size_t t = cursor.fetch_add(1);
            if (t >= todo.size() || failed.load())
                return;
            std::size_t i = todo[t];
            try {
                Construct construct = ctx.construct_for(pop[i].cds);
                MetricVector m = evaluate_all(construct, ctx.tables, *ctx.folder, ctx.eval);
                pop[i].metrics = m;
                pop[i].fitness = fitness(m, cfg.weights, cfg.bands);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true))
                    error = e.what();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failed.load())
        throw std::runtime_error("evaluation failed: " + error);
}

GenerationStats population_stats(const Population& pop, int generation) {
    if (pop.empty())
        throw std::invalid_argument("stats over an empty population");
    GenerationStats s;
    s.generation = generation;
    s.pop_size = pop.size();
    s.fitness_max = -1.0;
    s.fitness_min = 2.0;
    for (const auto& ind : pop) {
        if (!ind.fitness.has_value() || !ind.metrics.has_value())
            throw std::logic_error("stats over an unevaluated population");
        double f = *ind.fitness;
        s.fitness_mean += f;
        s.fitness_max = std::max(s.fitness_max, f);
        s.fitness_min = std::min(s.fitness_min, f);
        const MetricVector& m = *ind.metrics;
        s.means.cai += m.cai;
        s.means.tai += m.tai;
        s.means.cpb_raw += m.cpb_raw;
        s.means.gc += m.gc;
        s.means.immune_raw += m.immune_raw;
        s.means.unpaired30 += m.unpaired30;
        s.means.mfe_global += m.mfe_global;
        s.means.mfe_local += m.mfe_local;
        s.means.utr_balance += m.utr_balance;
        s.means.motif_total += m.motif_total;
        s.means.embed_sim += m.embed_sim;
    }
    const double n = static_cast<double>(pop.size());
    s.fitness_mean /= n;
    s.means.cai /= n;
    s.means.tai /= n;
    s.means.cpb_raw /= n;
    s.means.gc /= n;
    s.means.immune_raw /= n;
    s.means.unpaired30 /= n;
    s.means.mfe_global /= n;
    s.means.mfe_local /= n;
    s.means.utr_balance /= n;
    s.means.motif_total /= n;
    s.means.embed_sim /= n;
    return s;
}

namespace {

std::vector<std::size_t> indices_by_fitness(const Population& pop) {
    std::vector<std::size_t> order(pop.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (*pop[a].fitness != *pop[b].fitness)
            return *pop[a].fitness > *pop[b].fitness;
        return a < b;
    });
    return order;
}

} // namespace

Population evolve_generation(const Population& pop, const GaConfig& cfg, const EvalContext& ctx,
                             int generation, GenerationStats* stats) {
    if (pop.empty())
        throw std::invalid_argument("evolve_generation over an empty population");

    const std::size_t target_size =
        std::min<std::size_t>(cfg.pop_cap, pop.size() + static_cast<std::size_t>(cfg.growth_step));

    Population next;
    next.reserve(target_size);

    auto order = indices_by_fitness(pop);
    const std::size_t elites = std::min<std::size_t>(cfg.elitism, pop.size());
    for (std::size_t e = 0; e < elites && next.size() < target_size; ++e)
        next.push_back(pop[order[e]]); // metrics and fitness carried over

    while (next.size() < target_size) {
        // one stream per offspring pair, keyed by the slot it fills
        RngStream rng = RngStream::derive(cfg.rng_seed, static_cast<std::uint64_t>(generation),
                                          next.size());
        const Individual& pa = pop[tournament_select(pop, cfg.tournament_size, rng)];
        const Individual& pb = pop[tournament_select(pop, cfg.tournament_size, rng)];
        auto [c1, c2] = crossover(pa, pb, cfg.crossover_rate, rng);
        c1 = mutate(c1, ctx.tables.usage, cfg.mutation_rate, cfg.per_codon_rate, rng);
        c2 = mutate(c2, ctx.tables.usage, cfg.mutation_rate, cfg.per_codon_rate, rng);
        next.push_back(std::move(c1));
        if (next.size() < target_size)
            next.push_back(std::move(c2));
    }

    evaluate_population(next, cfg, ctx);
    if (stats != nullptr)
        *stats = population_stats(next, generation);
    return next;
}

RunResult run(const ProteinSequence& target, const GaConfig& cfg, const EvalContext& ctx,
              int top_k, Population initial, const GenerationObserver& observer) {
    cfg.validate();
    if (top_k < 1)
        throw std::invalid_argument("top_k must be positive");

    RunResult result;
    Population pop = std::move(initial);
    if (pop.empty()) {
        RngStream rng = RngStream::derive(cfg.rng_seed, 0, 0);
        pop = seed_population(target, ctx.tables.usage, cfg.pop_init, rng);
    }
    for (const auto& ind : pop) {
        CdsReport report = validate_cds(ind.cds, target);
        if (!report.valid())
            throw std::invalid_argument("initial individual invalid: " + report.describe());
    }
    evaluate_population(pop, cfg, ctx);
    if (observer)
        observer(0, pop);

    for (int g = 1; g <= cfg.max_generations; ++g) {
        GenerationStats stats;
        pop = evolve_generation(pop, cfg, ctx, g, &stats);
        result.stats.push_back(stats);
        if (observer)
            observer(g, pop);

        const int window = cfg.plateau_window;
        if (static_cast<int>(result.stats.size()) > window) {
            double now = result.stats.back().fitness_max;
            double before = result.stats[result.stats.size() - 1 - window].fitness_max;
            if (now - before < cfg.plateau_eps) {
                result.plateau_stopped = true;
                break;
            }
        }
    }

    auto order = indices_by_fitness(pop);
    order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(top_k)));
    result.top_k = std::move(order);
    result.final_population = std::move(pop);
    return result;
}

} // namespace mrnaopt
