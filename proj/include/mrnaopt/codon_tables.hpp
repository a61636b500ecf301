#ifndef MRNAOPT_CODON_TABLES_HPP
#define MRNAOPT_CODON_TABLES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mrnaopt/sequence.hpp"

namespace mrnaopt {

/// Per-family codon usage fractions over the 61 sense codons. Stop-codon
/// entries in an input table are kept separately (stop_freq) for seeding;
/// they default to uniform when absent.
class CodonUsageTable {
public:
    /// Build from raw per-codon values (counts or frequencies). Within each
    /// synonym family: freq = (value + pseudocount) / (sum + n*pseudocount).
    /// Every sense codon must be present; resulting frequencies must be > 0.
    static CodonUsageTable from_values(const std::map<std::string, double>& values,
                                       double pseudocount, std::string provenance);

    /// Parse the CODON<TAB>value format ('#' comments ignored).
    static CodonUsageTable load(const std::string& path, double pseudocount = 0.0);
    static CodonUsageTable parse(std::string_view text, double pseudocount,
                                 std::string provenance);

    /// Bundled human table (Kazusa-style per-1000 values, see data/).
    static const CodonUsageTable& bundled_human();

    double at(int codon) const { return freq_[codon]; }
    double at(std::string_view codon) const;

    /// Fraction of stops among stop codons (sums to 1).
    double stop_freq(int codon) const { return stop_freq_[codon]; }

    const std::string& provenance() const { return provenance_; }

private:
    std::array<double, 64> freq_{};
    std::array<double, 64> stop_freq_{};
    std::string provenance_;
};

/// Sharp-Li relative adaptiveness: w = freq / max(freq over family), so the
/// most used codon of every family scores exactly 1.
class AdaptivenessTable {
public:
    static AdaptivenessTable from_usage(const CodonUsageTable& usage);

    double at(int codon) const { return w_[codon]; }
    double at(std::string_view codon) const;

private:
    std::array<double, 64> w_{};
};

/// tRNA adaptation weights in (0,1], global max exactly 1.
class TaiWeightTable {
public:
    static TaiWeightTable load(const std::string& path);
    static TaiWeightTable parse(std::string_view text, std::string provenance);
    static const TaiWeightTable& bundled_human();

    double at(int codon) const { return s_[codon]; }
    double at(std::string_view codon) const;
    const std::string& provenance() const { return provenance_; }

private:
    std::array<double, 64> s_{};
    std::string provenance_;
};

/// Codon-pair scores (natural-log observed/expected ratio) over all 61x61
/// sense pairs, smoothed so every pair is defined.
class CodonPairTable {
public:
    /// Count adjacent sense-codon pairs over the corpus and derive scores.
    /// Every corpus sequence must pass the structural CDS rules. Counting is
    /// order-free over sequences. Pair counts are smoothed with the
    /// pseudocount before the log ratio.
    static CodonPairTable build(const std::vector<NucleicSequence>& corpus,
                                double pseudocount = 0.5,
                                const GeneticCode& code = GeneticCode::standard());

    /// All-zero table for runs without a reference corpus.
    static CodonPairTable neutral();

    static CodonPairTable load(const std::string& path);
    void save(const std::string& path) const;

    double at(int first, int second) const { return cps_[(first << 6) | second]; }
    double at(std::string_view first, std::string_view second) const;

    std::int64_t pair_count_total() const { return pair_count_total_; }
    const std::string& provenance() const { return provenance_; }

    bool operator==(const CodonPairTable& o) const {
        return cps_ == o.cps_ && pair_count_total_ == o.pair_count_total_;
    }

private:
    std::vector<double> cps_ = std::vector<double>(64 * 64, 0.0);
    std::int64_t pair_count_total_ = 0;
    std::string provenance_;
};

/// The full reference-table bundle the metric layer consumes.
struct MetricTables {
    CodonUsageTable usage;
    AdaptivenessTable adaptiveness;
    TaiWeightTable tai;
    CodonPairTable pairs;
};

} // namespace mrnaopt

#endif
