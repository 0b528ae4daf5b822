#ifndef QGB_ERRORS_HPP
#define QGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A deformation matrix failed validation; carries the offending entry.
struct BadMatrixError : Error {
    int i, j;
    BadMatrixError(int i_, int j_, const std::string& what_)
        : Error("bad deformation matrix at (" + std::to_string(i_) + "," +
                std::to_string(j_) + "): " + what_),
          i(i_), j(j_) {}
};

/// Evaluation requested for a parameter the assignment does not cover.
struct MissingParameterError : Error {
    int param;
    explicit MissingParameterError(int param_, const std::string& name)
        : Error("missing parameter in assignment: " + name), param(param_) {}
};

/// reduce_step called at a position whose adjacent pair is already ordered.
struct NotReducibleError : Error {
    using Error::Error;
};

/// A reduction loop exceeded its iteration bound.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace qgb

#endif
