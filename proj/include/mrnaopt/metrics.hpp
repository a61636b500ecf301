#ifndef MRNAOPT_METRICS_HPP
#define MRNAOPT_METRICS_HPP

#include <optional>
#include <string>

#include "mrnaopt/codon_tables.hpp"
#include "mrnaopt/folding.hpp"
#include "mrnaopt/sequence.hpp"

namespace mrnaopt {

/// Raw values of every evaluation metric for one construct. All fields are
/// populated by evaluate_all; there are no partial vectors.
struct MetricVector {
    double cai = 0.0;        // [0,1]
    double tai = 0.0;        // [0,1]
    double cpb_raw = 0.0;    // mean codon-pair score, dimensionless
    double gc = 0.0;         // CDS GC fraction, [0,1]
    double immune_raw = 0.0; // CpG + weight*UpA count over the transcript
    double unpaired30 = 0.0; // [0,1]
    double mfe_global = 0.0; // kcal/mol
    double mfe_local = 0.0;  // kcal/mol, +-radius window fold
    double utr_balance = 0.0; // paired fraction over UTR positions, [0,1]
    int motif_total = 0;
    double embed_sim = 0.0; // [0,1]
    bool utr_empty = false; // utr_balance fell back to 0 over empty UTRs
};

/// Geometric mean of relative adaptiveness over the CDS, computed in log
/// space. ATG and TGG (single-codon families) and the terminal stop are
/// excluded, as is conventional for CAI.
double cai_score(const NucleicSequence& cds, const AdaptivenessTable& w,
                 const GeneticCode& code = GeneticCode::standard());

/// Geometric mean of tAI weights over all sense codons of the CDS
/// (terminal stop excluded), log space.
double tai_score(const NucleicSequence& cds, const TaiWeightTable& s,
                 const GeneticCode& code = GeneticCode::standard());

/// Arithmetic mean codon-pair score over adjacent sense-codon pairs.
double codon_pair_bias(const NucleicSequence& cds, const CodonPairTable& table,
                       const GeneticCode& code = GeneticCode::standard());

/// (#G + #C) / length.
double gc_content(const NucleicSequence& seq);

/// Overlapping dinucleotide scan: #CG + upa_weight * #TA (UpA in RNA).
double immune_score(const NucleicSequence& seq, double upa_weight = 1.0);
double immune_score(const Construct& construct, double upa_weight = 1.0);

/// Unpaired fraction of the +-radius window around the start codon; the
/// window is extracted and folded on its own by the given backend.
double unpaired30(const Construct& construct, const Folder& folder, int radius = 30);

/// Paired fraction restricted to UTR positions (5' and 3' pooled) of the
/// global structure. Defined as 0 over empty UTRs, with the flag set.
double utr_balance(const Construct& construct, const SecondaryStructure& global_structure,
                   bool* utr_empty = nullptr);

/// Pluggable sequence-similarity hook standing in for embedding models.
class EmbeddingScorer {
public:
    virtual ~EmbeddingScorer() = default;
    virtual double similarity(const NucleicSequence& a, const NucleicSequence& b) const = 0;
};

/// Default scorer: cosine similarity of 61-dimensional codon-frequency
/// vectors (nonnegative, 1 on identical inputs).
class CodonFrequencyScorer final : public EmbeddingScorer {
public:
    double similarity(const NucleicSequence& a, const NucleicSequence& b) const override;
};

double embed_similarity(const NucleicSequence& candidate, const NucleicSequence& reference,
                        const EmbeddingScorer& scorer);

struct EvalConfig {
    double upa_weight = 1.0;
    int window_radius = 30;
    NucleicSequence reference_cds; // required; embed_sim target
    const EmbeddingScorer* scorer = nullptr; // null -> CodonFrequencyScorer
};

/// Populate every metric for one construct: the transcript is folded
/// globally, the start window locally, both through `folder`.
MetricVector evaluate_all(const Construct& construct, const MetricTables& tables,
                          const Folder& folder, const EvalConfig& config);

} // namespace mrnaopt

#endif
