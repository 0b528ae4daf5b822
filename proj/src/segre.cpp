#include "qgb/segre.hpp"

namespace qgb {

Segre::Segre(QuantumSpace x_space, QuantumSpace y_space)
    : x_(std::move(x_space)), y_(std::move(y_space)) {}

std::vector<std::string> Segre::generator_labels() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(big_n()) + 1);
    for (int i = 0; i <= n(); ++i)
        for (int a = 0; a <= m(); ++a) out.push_back(indexed_label2("z", i, a));
    return out;
}

DeformationMatrix Segre::matrix() const {
    const int count = big_n() + 1;
    std::vector<LaurentMonomial> entries(static_cast<std::size_t>(count) *
                                         static_cast<std::size_t>(count));
    for (int r = 0; r < count; ++r) {
        const SegreIndex u = SegreIndex::of_flat(r, m());
        for (int c = 0; c < count; ++c) {
            const SegreIndex v = SegreIndex::of_flat(c, m());
            entries[static_cast<std::size_t>(r) * count + c] =
                x_.matrix().at(u.i, v.i) * y_.matrix().at(u.alpha, v.alpha);
        }
    }
    return DeformationMatrix::from_entries(count, std::move(entries));
}

Presentation Segre::space_relations() const {
    QuantumSpace derived(big_n(), matrix());
    Presentation p = derived.presentation();
    p.generator_labels = generator_labels();
    p.provenance = Provenance::SegreSpace;
    return p;
}

std::vector<SegreQuadruple> Segre::quadruples() const {
    std::vector<SegreQuadruple> out;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            for (int a = 0; a < m(); ++a)
                for (int b = a + 1; b <= m(); ++b) out.push_back({i, j, a, b});
    return out;
}

Presentation Segre::kernel_gb() const {
    Presentation p;
    p.generator_labels = generator_labels();
    p.provenance = Provenance::SegreKernel;
    for (const SegreQuadruple& q : quadruples()) {
        const Letter lead0 = SegreIndex{q.i, q.beta}.flat(m());
        const Letter lead1 = SegreIndex{q.j, q.alpha}.flat(m());
        const Letter tail0 = SegreIndex{q.i, q.alpha}.flat(m());
        const Letter tail1 = SegreIndex{q.j, q.beta}.flat(m());
        p.relations.push_back(
            {Word{lead0, lead1}, y_.matrix().at(q.beta, q.alpha), Word{tail0, tail1}});
    }
    return p;
}

TensorValue Segre::tensor_eval(const Word& w) const {
    Word xw, yw;
    xw.letters.reserve(w.size());
    yw.letters.reserve(w.size());
    for (Letter l : w.letters) {
        const SegreIndex s = SegreIndex::of_flat(l, m());
        xw.letters.push_back(s.i);
        yw.letters.push_back(s.alpha);
    }
    const NormalTerm xnf = x_.normal_form(xw);
    const NormalTerm ynf = y_.normal_form(yw);
    return {xnf.coeff * ynf.coeff, xnf.term, ynf.term};
}

BigInt Segre::hilbert_dim(std::int64_t t) const {
    return binomial(n() + t, t) * binomial(m() + t, t);
}

}  // namespace qgb
