#include "qgb/render.hpp"

#include <sstream>

namespace qgb {

namespace {

std::string colored(const std::string& s, bool color) {
    return color ? "\x1b[36m" + s + "\x1b[0m" : s;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string render_word(const Word& w, const std::vector<std::string>& labels) {
    if (w.size() == 0) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += '*';
        out += labels.at(static_cast<std::size_t>(w[k]));
    }
    return out;
}

std::string render_relation(const BinomialRelation& rel, const std::vector<std::string>& labels,
                            const ParamSet& params, const RenderOptions& opts) {
    std::string out = render_word(rel.lead, labels);
    if (opts.assign) {
        const Rational v = rel.coeff.eval(*opts.assign, params);
        if (v < 0)
            out += " + " + colored(rational_str(-v), opts.color) + " ";
        else if (v == 1)
            out += " - ";
        else
            out += " - " + colored(rational_str(v), opts.color) + " ";
    } else if (rel.coeff.is_unit()) {
        out += " - ";
    } else {
        out += " - " + colored(rel.coeff.str(params), opts.color) + " ";
    }
    out += render_word(rel.tail, labels);
    return out;
}

std::string render_presentation(const Presentation& p, const ParamSet& params,
                                const RenderOptions& opts) {
    std::string out;
    for (const auto& rel : p.relations) out += render_relation(rel, p.generator_labels, params, opts) + "\n";
    for (const auto& w : p.monomial_relations) out += render_word(w, p.generator_labels) + "\n";
    return out;
}

std::string render_matrix(const DeformationMatrix& m, const ParamSet& params,
                          const RenderOptions& opts) {
    std::string out;
    for (int i = 0; i < m.n_plus_1(); ++i) {
        out += "[";
        for (int j = 0; j < m.n_plus_1(); ++j) {
            const LaurentMonomial& e = m.at(i, j);
            out += ' ';
            if (opts.assign)
                out += rational_str(e.eval(*opts.assign, params));
            else
                out += e.str(params);
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace qgb
