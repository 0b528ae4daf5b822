#ifndef QGB_EXEC_HPP
#define QGB_EXEC_HPP

namespace qgb {

/// Kernel execution policy. Parallel is the production path (OpenMP);
/// Serial is the reference implementation kept for testing and benchmarks.
enum class Exec { Serial, Parallel };

}  // namespace qgb

#endif
