#ifndef MRNAOPT_FOLDING_HPP
#define MRNAOPT_FOLDING_HPP

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mrnaopt/sequence.hpp"

namespace mrnaopt {

/// Dot-bracket structure plus energy. Nussinov results carry no energy,
/// only the pair count (which is set for every structure).
struct SecondaryStructure {
    std::string dot_bracket;
    std::optional<double> energy; // kcal/mol
    int pair_count = 0;
};

/// Parse a dot-bracket string into a pair list sorted by opening position.
/// Rejects characters outside {'(', ')', '.'} and unbalanced brackets.
std::vector<std::pair<int, int>> parse_dot_bracket(std::string_view s);

/// Allowed pairs: AU, UA, GC, CG, GU, UG (T read as U). Returns the pair
/// type index used by the energy model, or -1 if the bases cannot pair.
int pair_type(char a, char b);

/// Reduced nearest-neighbor model: stacking energies over pair-type
/// doublets plus size-dependent loop penalties and affine multiloop
/// constants. Energies are held in integer hundredths of kcal/mol so the
/// DP and the exhaustive oracle agree exactly.
class EnergyModel {
public:
    static EnergyModel parse(std::string_view text, std::string provenance);
    static EnergyModel load(const std::string& path);
    static const EnergyModel& bundled();

    int stack_cents(int outer_type, int inner_type) const { return stack_[outer_type][inner_type]; }
    int hairpin_cents(int size) const;
    int bulge_cents(int size) const;
    int internal_cents(int size) const;

    int ml_close_cents = 0;
    int ml_branch_cents = 0;
    int ml_unpaired_cents = 0;
    int hairpin_min = 3;
    int max_interior_span = 16;

    bool operator==(const EnergyModel& o) const;

private:
    int extend_cents(int base, int size, int table_max) const;
    std::array<std::array<int, 6>, 6> stack_{};
    std::vector<int> hairpin_, bulge_, internal_; // indexed by loop size
    int ext_coef_cents_ = 108;
    std::string provenance_;
};

/// Maximum-pairing fold (Nussinov DP). Deterministic traceback: pairing is
/// preferred over leaving a position unpaired, and the smallest partner is
/// taken first.
SecondaryStructure fold_nussinov(const NucleicSequence& seq, int hairpin_min = 3);

/// Minimum-free-energy fold (Zuker-style DP over the reduced model), same
/// traceback convention as fold_nussinov. Energy in kcal/mol, always <= 0.
SecondaryStructure fold_mfe(const NucleicSequence& seq,
                            const EnergyModel& model = EnergyModel::bundled());

/// Split an engine output line "STRUCTURE (ENERGY)" into its parts; spaces
/// inside the parentheses are tolerated.
std::pair<std::string, double> split_structure_energy(std::string_view line);

struct ExternalFolderConfig {
    /// Shell command; the sequence is written to its standard input as a
    /// single RNA line, output read from standard output.
    std::string command;
};

/// Invoke an external RNAfold-compatible engine and parse its two-line
/// output (sequence echo, then structure with trailing "(energy)").
SecondaryStructure fold_external(const NucleicSequence& seq, const ExternalFolderConfig& cfg);

/// Loop decomposition counts. total() counts loops only; stems are
/// reported separately.
struct MotifCounts {
    int hairpins = 0;
    int bulges = 0;
    int internal_loops = 0;
    int multiloops = 0;
    int stems = 0;
    int total() const { return hairpins + bulges + internal_loops + multiloops; }
};

MotifCounts count_motifs(const SecondaryStructure& s);

/// Fraction of positions in [begin, end) that are paired. Empty ranges are
/// an error.
double paired_fraction(const SecondaryStructure& s, std::size_t begin, std::size_t end);

struct StartWindow {
    std::size_t begin = 0, end = 0; // transcript coordinates, half-open
    NucleicSequence seq;
    std::size_t length() const { return end - begin; }
};

/// Window [start-radius, start+radius) around the first CDS base, clipped
/// to the transcript.
StartWindow window_around_start(const Construct& construct, int radius);

/// Checks structure/sequence consistency: length, bracket balance, pair
/// legality, and the minimum hairpin span. Throws on violation.
void validate_structure(const NucleicSequence& seq, const SecondaryStructure& s,
                        int hairpin_min = 3);

/// Folding backend used by the metric layer.
class Folder {
public:
    virtual ~Folder() = default;
    virtual SecondaryStructure fold(const NucleicSequence& seq) const = 0;
};

class BuiltinFolder final : public Folder {
public:
    explicit BuiltinFolder(EnergyModel model = EnergyModel::bundled(),
                           std::size_t max_len = 2000, bool allow_long = false)
        : model_(std::move(model)), max_len_(max_len), allow_long_(allow_long) {}
    SecondaryStructure fold(const NucleicSequence& seq) const override;

private:
    EnergyModel model_;
    std::size_t max_len_;
    bool allow_long_;
};

class ExternalFolder final : public Folder {
public:
    explicit ExternalFolder(ExternalFolderConfig cfg) : cfg_(std::move(cfg)) {}
    SecondaryStructure fold(const NucleicSequence& seq) const override {
        return fold_external(seq, cfg_);
    }

private:
    ExternalFolderConfig cfg_;
};

/// Thread-safe memoization wrapper keyed on the canonical base string.
class CachingFolder final : public Folder {
public:
    explicit CachingFolder(const Folder& inner) : inner_(inner) {}
    SecondaryStructure fold(const NucleicSequence& seq) const override;

private:
    const Folder& inner_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, SecondaryStructure> cache_;
};

} // namespace mrnaopt

#endif
