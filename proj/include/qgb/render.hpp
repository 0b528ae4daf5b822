#ifndef QGB_RENDER_HPP
#define QGB_RENDER_HPP

#include <optional>
#include <string>

#include "qgb/qspace.hpp"

namespace qgb {

struct RenderOptions {
    bool color = false;
    /// When set, every coefficient is evaluated to an exact rational.
    const ParamAssignment* assign = nullptr;
};

std::string render_word(const Word& w, const std::vector<std::string>& labels);

/// Paper-style text: "y1*y2 - q y0*y3"; unit coefficients render with no
/// scalar prefix; exponents as "q^2", inverses as "q^-1".
std::string render_relation(const BinomialRelation& rel, const std::vector<std::string>& labels,
                            const ParamSet& params, const RenderOptions& opts = {});

std::string render_presentation(const Presentation& p, const ParamSet& params,
                                const RenderOptions& opts = {});

std::string render_matrix(const DeformationMatrix& m, const ParamSet& params,
                          const RenderOptions& opts = {});

}  // namespace qgb

#endif
