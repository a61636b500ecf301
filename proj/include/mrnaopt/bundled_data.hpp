#ifndef MRNAOPT_BUNDLED_DATA_HPP
#define MRNAOPT_BUNDLED_DATA_HPP

#include <string_view>

// Embedded copies of the files under data/, byte-identical to what ships
// there (checked by the table tests), so the library works without paths.
namespace mrnaopt::bundled {

std::string_view usage_tsv();
std::string_view tai_tsv();
std::string_view energy_tsv();

} // namespace mrnaopt::bundled

#endif
