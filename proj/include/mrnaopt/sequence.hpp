#ifndef MRNAOPT_SEQUENCE_HPP
#define MRNAOPT_SEQUENCE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mrnaopt {

enum class SeqKind { Dna, Rna };

/// Nucleic-acid sequence. Bases are stored in canonical DNA form (T
/// alphabet); the kind flag only controls rendering, so a sequence and its
/// RNA view compare equal base-by-base via dna().
class NucleicSequence {
public:
    NucleicSequence() = default;

    /// Parse from text. Lowercase is accepted and normalized; the declared
    /// alphabet is enforced (DNA: ACGT, RNA: ACGU). Empty or ambiguous
    /// input (N, R, Y, ...) is an error.
    NucleicSequence(std::string_view text, SeqKind kind = SeqKind::Dna);

    /// Parse accepting either T or U; kind is inferred (U present -> RNA).
    static NucleicSequence from_any(std::string_view text);

    SeqKind kind() const { return kind_; }
    std::size_t size() const { return bases_.size(); }
    bool empty() const { return bases_.empty(); }

    /// Canonical DNA base at position i (one of ACGT).
    char at(std::size_t i) const { return bases_[i]; }

    /// Whole sequence in canonical DNA letters.
    const std::string& dna() const { return bases_; }

    /// Rendered per kind: T for DNA, U for RNA.
    std::string str() const;

    NucleicSequence to_rna() const;
    NucleicSequence to_dna() const;

    NucleicSequence subseq(std::size_t pos, std::size_t len) const;

    bool operator==(const NucleicSequence& o) const { return bases_ == o.bases_ && kind_ == o.kind_; }

private:
    std::string bases_;
    SeqKind kind_ = SeqKind::Dna;
};

/// Protein in one-letter code, stops not representable.
class ProteinSequence {
public:
    ProteinSequence() = default;
    explicit ProteinSequence(std::string_view residues);

    const std::string& str() const { return residues_; }
    std::size_t size() const { return residues_.size(); }
    char at(std::size_t i) const { return residues_[i]; }

    bool operator==(const ProteinSequence& o) const = default;

private:
    std::string residues_;
};

/// Codon id in [0,64): lexicographic over A<C<G<T, id = 16*b0 + 4*b1 + b2.
/// Returns -1 for anything that is not three ACGT bases.
int codon_id(std::string_view codon);
int codon_id(char a, char b, char c);
std::string codon_text(int id);

/// Standard genetic code: 61 sense codons, 3 stops (TAA, TAG, TGA), and the
/// synonym families used for mutation.
class GeneticCode {
public:
    static const GeneticCode& standard();

    /// Amino acid for a codon id, '*' for stop.
    char amino_acid(int id) const { return table_[id]; }
    bool is_stop(int id) const { return table_[id] == '*'; }
    bool is_sense(int id) const { return table_[id] != '*'; }

    const std::vector<int>& family(char aa) const;
    const std::vector<int>& family_of(int codon) const { return family(table_[codon]); }
    const std::vector<int>& stop_codons() const { return stops_; }
    const std::vector<int>& sense_codons() const { return sense_; }

    /// Full synonym family of the amino acid the codon encodes, input
    /// included. Stop codons are an error.
    std::vector<std::string> synonymous_codons(std::string_view codon) const;

private:
    GeneticCode();
    std::array<char, 64> table_{};
    std::array<std::vector<int>, 26> families_{};
    std::vector<int> stops_, sense_;
};

struct TranslationResult {
    ProteinSequence protein;
    bool stop_seen = false;
};

/// First-frame translation; halts at the first stop codon. Length must be a
/// multiple of three.
TranslationResult translate(const NucleicSequence& cds,
                            const GeneticCode& code = GeneticCode::standard());

enum class CdsRule {
    LengthMultipleOf3,
    StartsWithAtg,
    NoInternalStop,
    TerminalStop,
    TranslationMatches,
};

std::string_view cds_rule_name(CdsRule r);

struct CdsReport {
    std::vector<CdsRule> violations;
    bool valid() const { return violations.empty(); }
    bool violated(CdsRule r) const;
    std::string describe() const;
};

/// Structural CDS checks only (no target comparison).
CdsReport validate_cds(const NucleicSequence& cds,
                       const GeneticCode& code = GeneticCode::standard());

/// Full check including translation against the target protein.
CdsReport validate_cds(const NucleicSequence& cds, const ProteinSequence& target,
                       const GeneticCode& code = GeneticCode::standard());

/// Full transcript: fixed 5'UTR + evolvable CDS + fixed 3'UTR. The CDS must
/// satisfy all structural rules; UTRs may be empty.
class Construct {
public:
    Construct(NucleicSequence utr5, NucleicSequence cds, NucleicSequence utr3);

    const NucleicSequence& utr5() const { return utr5_; }
    const NucleicSequence& cds() const { return cds_; }
    const NucleicSequence& utr3() const { return utr3_; }

    /// Index of the first CDS base (the A of ATG) within the transcript.
    std::size_t cds_start() const { return utr5_.size(); }
    std::size_t transcript_length() const { return utr5_.size() + cds_.size() + utr3_.size(); }

    /// Concatenated transcript, canonical DNA letters.
    NucleicSequence transcript() const;

private:
    NucleicSequence utr5_, cds_, utr3_;
};

} // namespace mrnaopt

#endif
