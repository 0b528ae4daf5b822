#ifndef QGB_CLI_HPP
#define QGB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qgb {

/// Command-line driver. Deterministic bytes for fixed inputs; exit 2 on
/// argument errors, 1 on certification failure or fixture mismatch,
/// 0 otherwise.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgb

#endif
