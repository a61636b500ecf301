#include "mrnaopt/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mrnaopt {

namespace {

constexpr double kLogClamp = 1e-9;

double geometric_mean_log(double log_sum, int count) {
    return std::exp(log_sum / count);
}

} // namespace

double cai_score(const NucleicSequence& cds, const AdaptivenessTable& w,
                 const GeneticCode& code) {
    if (cds.size() % 3 != 0)
        throw std::invalid_argument("CDS length not a multiple of 3");
    const int atg = codon_id("ATG"), tgg = codon_id("TGG");
    double log_sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i + 2 < cds.size(); i += 3) {
        int c = codon_id(cds.at(i), cds.at(i + 1), cds.at(i + 2));
        if (code.is_stop(c) || c == atg || c == tgg)
            continue;
        log_sum += std::log(std::max(w.at(c), kLogClamp));
        ++count;
    }
    if (count == 0)
        throw std::invalid_argument("CAI undefined: no scorable codons (only ATG/TGG/stop)");
    return geometric_mean_log(log_sum, count);
}

double tai_score(const NucleicSequence& cds, const TaiWeightTable& s, const GeneticCode& code) {
    if (cds.size() % 3 != 0)
        throw std::invalid_argument("CDS length not a multiple of 3");
    double log_sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i + 2 < cds.size(); i += 3) {
        int c = codon_id(cds.at(i), cds.at(i + 1), cds.at(i + 2));
        if (code.is_stop(c))
            continue;
        log_sum += std::log(std::max(s.at(c), kLogClamp));
        ++count;
    }
    if (count == 0)
        throw std::invalid_argument("tAI undefined: no sense codons");
    return geometric_mean_log(log_sum, count);
}

double codon_pair_bias(const NucleicSequence& cds, const CodonPairTable& table,
                       const GeneticCode& code) {
    if (cds.size() % 3 != 0)
        throw std::invalid_argument("CDS length not a multiple of 3");
    double sum = 0.0;
    int count = 0;
    std::size_t n_codons = cds.size() / 3;
    for (std::size_t c = 0; c + 1 < n_codons; ++c) {
        int a = codon_id(cds.at(3 * c), cds.at(3 * c + 1), cds.at(3 * c + 2));
        int b = codon_id(cds.at(3 * c + 3), cds.at(3 * c + 4), cds.at(3 * c + 5));
        if (code.is_sense(a) && code.is_sense(b)) {
            sum += table.at(a, b);
            ++count;
        }
    }
    if (count == 0)
        throw std::invalid_argument("codon-pair bias undefined for a single-codon CDS");
    return sum / count;
}

double gc_content(const NucleicSequence& seq) {
    if (seq.empty())
        throw std::invalid_argument("GC content of an empty sequence");
    std::size_t gc = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq.at(i) == 'G' || seq.at(i) == 'C')
            ++gc;
    return static_cast<double>(gc) / static_cast<double>(seq.size());
}

double immune_score(const NucleicSequence& seq, double upa_weight) {
    double cg = 0.0, ta = 0.0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq.at(i) == 'C' && seq.at(i + 1) == 'G')
            cg += 1.0;
        else if (seq.at(i) == 'T' && seq.at(i + 1) == 'A')
            ta += 1.0;
    }
    return cg + upa_weight * ta;
}

double immune_score(const Construct& construct, double upa_weight) {
    return immune_score(construct.transcript(), upa_weight);
}

double unpaired30(const Construct& construct, const Folder& folder, int radius) {
    StartWindow w = window_around_start(construct, radius);
    SecondaryStructure s = folder.fold(w.seq);
    return 1.0 - paired_fraction(s, 0, w.length());
}

double utr_balance(const Construct& construct, const SecondaryStructure& global_structure,
                   bool* utr_empty) {
    const std::size_t len = construct.transcript_length();
    if (global_structure.dot_bracket.size() != len)
        throw std::invalid_argument("global structure does not match the transcript");
    const std::size_t utr_len = construct.utr5().size() + construct.utr3().size();
    if (utr_empty != nullptr)
        *utr_empty = utr_len == 0;
    if (utr_len == 0)
        return 0.0;

    std::size_t paired = 0;
    for (std::size_t i = 0; i < construct.utr5().size(); ++i)
        if (global_structure.dot_bracket[i] != '.')
            ++paired;
    for (std::size_t i = construct.cds_start() + construct.cds().size(); i < len; ++i)
        if (global_structure.dot_bracket[i] != '.')
            ++paired;
    return static_cast<double>(paired) / static_cast<double>(utr_len);
}

double CodonFrequencyScorer::similarity(const NucleicSequence& a, const NucleicSequence& b) const {
    const GeneticCode& code = GeneticCode::standard();
    auto counts = [&](const NucleicSequence& seq) {
        std::array<double, 64> v{};
        int total = 0;
        for (std::size_t i = 0; i + 2 < seq.size(); i += 3) {
            int c = codon_id(seq.at(i), seq.at(i + 1), seq.at(i + 2));
            if (code.is_sense(c)) {
                v[c] += 1.0;
                ++total;
            }
        }
        if (total == 0)
            throw std::invalid_argument("codon-frequency embedding of a stop-only sequence");
        return v;
    };
    auto va = counts(a), vb = counts(b);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (int c = 0; c < 64; ++c) {
        dot += va[c] * vb[c];
        na += va[c] * va[c];
        nb += vb[c] * vb[c];
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double embed_similarity(const NucleicSequence& candidate, const NucleicSequence& reference,
                        const EmbeddingScorer& scorer) {
    return scorer.similarity(candidate, reference);
}

MetricVector evaluate_all(const Construct& construct, const MetricTables& tables,
                          const Folder& folder, const EvalConfig& config) {
    if (config.reference_cds.empty())
        throw std::invalid_argument("evaluate_all: no reference CDS configured");

    MetricVector m;
    m.cai = cai_score(construct.cds(), tables.adaptiveness);
    m.tai = tai_score(construct.cds(), tables.tai);
    m.cpb_raw = codon_pair_bias(construct.cds(), tables.pairs);
    m.gc = gc_content(construct.cds());
    m.immune_raw = immune_score(construct, config.upa_weight);

    SecondaryStructure global_structure = folder.fold(construct.transcript());
    if (!global_structure.energy.has_value())
        throw std::runtime_error("folding backend returned no energy");
    m.mfe_global = *global_structure.energy;
    m.motif_total = count_motifs(global_structure).total();
    m.utr_balance = utr_balance(construct, global_structure, &m.utr_empty);

    StartWindow w = window_around_start(construct, config.window_radius);
    SecondaryStructure local_structure = folder.fold(w.seq);
    if (!local_structure.energy.has_value())
        throw std::runtime_error("folding backend returned no energy");
    m.mfe_local = *local_structure.energy;
    m.unpaired30 = 1.0 - paired_fraction(local_structure, 0, w.length());

    static const CodonFrequencyScorer default_scorer;
    const EmbeddingScorer& scorer = config.scorer ? *config.scorer : default_scorer;
    m.embed_sim = embed_similarity(construct.cds(), config.reference_cds, scorer);
    return m;
}

} // namespace mrnaopt
