#ifndef MRNAOPT_FASTA_HPP
#define MRNAOPT_FASTA_HPP

#include <string>
#include <utility>
#include <vector>

namespace mrnaopt {

/// Standard FASTA: '>' headers, multi-line bodies joined, records in file
/// order. Empty records and leading junk before the first header are
/// errors. Sequence alphabet is NOT checked here; callers decide.
std::vector<std::pair<std::string, std::string>> parse_fasta(const std::string& path);
std::vector<std::pair<std::string, std::string>> parse_fasta_text(const std::string& text);

void write_fasta(const std::string& path,
                 const std::vector<std::pair<std::string, std::string>>& records,
                 std::size_t wrap = 60);

} // namespace mrnaopt

#endif
