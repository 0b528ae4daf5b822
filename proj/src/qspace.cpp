#include "qgb/qspace.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qgb {

Word Word::concat(const Word& rhs) const {
    Word out = *this;
    out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return out;
}

std::int32_t ExponentVector::degree() const {
    return std::accumulate(alpha.begin(), alpha.end(), std::int32_t{0});
}

Word ExponentVector::to_word() const {
    Word w;
    w.letters.reserve(static_cast<std::size_t>(degree()));
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::int32_t k = 0; k < alpha[i]; ++k) w.letters.push_back(static_cast<Letter>(i));
    return w;
}

ExponentVector ExponentVector::of_word(const Word& w, std::size_t n_plus_1) {
    ExponentVector ev;
    ev.alpha.assign(n_plus_1, 0);
    for (Letter l : w.letters) ++ev.alpha[static_cast<std::size_t>(l)];
    return ev;
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::QuantumSpace: return "QuantumSpace";
        case Provenance::VeroneseR1: return "VeroneseR1";
        case Provenance::VeroneseR2: return "VeroneseR2";
        case Provenance::VeroneseR1Prime: return "VeroneseR1Prime";
        case Provenance::VeroneseKernel: return "VeroneseKernel";
        case Provenance::LiftedKernel: return "LiftedKernel";
        case Provenance::SegreSpace: return "SegreSpace";
        case Provenance::SegreKernel: return "SegreKernel";
        case Provenance::KoszulDual: return "KoszulDual";
    }
    throw Error("unknown provenance");
}

Provenance provenance_from_name(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(Provenance::KoszulDual); ++k) {
        auto p = static_cast<Provenance>(k);
        if (provenance_name(p) == s) return p;
    }
    throw Error("unknown provenance name: " + s);
}

Ordering deglex_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size() ? Ordering::LT : Ordering::GT;
    if (u.letters < v.letters) return Ordering::LT;
    if (u.letters == v.letters) return Ordering::EQ;
    return Ordering::GT;
}

DeformationMatrix DeformationMatrix::from_entries(int n_plus_1,
                                                  std::vector<LaurentMonomial> entries) {
    if (n_plus_1 <= 0) throw BadMatrixError(0, 0, "size must be positive");
    const auto sz = static_cast<std::size_t>(n_plus_1);
    if (entries.size() != sz * sz)
        throw BadMatrixError(0, 0, "entry count does not match size");
    DeformationMatrix m;
    m.size_ = n_plus_1;
    m.entries_ = std::move(entries);
    for (int i = 0; i < n_plus_1; ++i) {
        if (!m.at(i, i).is_unit()) throw BadMatrixError(i, i, "diagonal entry is not 1");
        for (int j = i + 1; j < n_plus_1; ++j)
            if (!(m.at(i, j) * m.at(j, i)).is_unit())
                throw BadMatrixError(i, j, "q(i,j)*q(j,i) != 1");
    }
    return m;
}

std::string pair_param_name(const std::string& prefix, int j, int i, bool single) {
    if (single) return prefix;
    if (j >= 10 || i >= 10) return prefix + std::to_string(j) + "_" + std::to_string(i);
    return prefix + std::to_string(j) + std::to_string(i);
}

DeformationMatrix DeformationMatrix::generic(int n, ParamSet& params, const std::string& prefix) {
    if (n < 0) throw BadMatrixError(0, 0, "n must be non-negative");
    DeformationMatrix m;
    m.size_ = n + 1;
    m.entries_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1),
                      LaurentMonomial::unit());
    const bool single = (n == 1);
    for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
            ParamId p = params.add(pair_param_name(prefix, j, i, single));
            auto idx = [&](int r, int c) {
                return static_cast<std::size_t>(r) * static_cast<std::size_t>(n + 1) +
                       static_cast<std::size_t>(c);
            };
            m.entries_[idx(j, i)] = LaurentMonomial::param(p);
            m.entries_[idx(i, j)] = LaurentMonomial::param(p, -1);
        }
    }
    return m;
}

DeformationMatrix DeformationMatrix::ones(int n) {
    DeformationMatrix m;
    m.size_ = n + 1;
    m.entries_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1),
                      LaurentMonomial::unit());
    return m;
}

std::string indexed_label(const std::string& prefix, int i) {
    return prefix + std::to_string(i);
}

std::string indexed_label2(const std::string& prefix, int i, int j) {
    if (i >= 10 || j >= 10) return prefix + std::to_string(i) + "_" + std::to_string(j);
    return prefix + std::to_string(i) + std::to_string(j);
}

QuantumSpace::QuantumSpace(int n, DeformationMatrix q) : n_(n), q_(std::move(q)) {
    if (q_.n_plus_1() != n + 1)
        throw BadMatrixError(0, 0, "matrix size does not match generator count");
}

std::vector<std::string> QuantumSpace::generator_labels() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n_) + 1);
    for (int i = 0; i <= n_; ++i) out.push_back(indexed_label("x", i));
    return out;
}

Presentation QuantumSpace::presentation() const {
    Presentation p;
    p.generator_labels = generator_labels();
    p.provenance = Provenance::QuantumSpace;
    for (int j = 1; j <= n_; ++j)
        for (int i = 0; i < j; ++i)
            p.relations.push_back({Word{j, i}, q_.at(j, i), Word{i, j}});
    return p;
}

NormalTerm QuantumSpace::normal_form(const Word& w) const {
    std::vector<LaurentMonomial::Entry> acc;
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t pp = p + 1; pp < w.size(); ++pp) {
            const Letter a = w[p], b = w[pp];
            if (a > b) {
                const auto& q = q_.at(a, b);
                acc.insert(acc.end(), q.entries().begin(), q.entries().end());
            }
        }
    }
    NormalTerm t;
    t.coeff = LaurentMonomial::from_entries(std::move(acc));
    t.term = ExponentVector::of_word(w, static_cast<std::size_t>(n_) + 1);
    return t;
}

std::pair<LaurentMonomial, Word> QuantumSpace::reduce_step(const Word& w,
                                                           std::size_t position) const {
    if (position + 1 >= w.size())
        throw NotReducibleError("position out of range");
    const Letter a = w[position], b = w[position + 1];
    if (a <= b) throw NotReducibleError("adjacent pair already ordered");
    Word out = w;
    std::swap(out.letters[position], out.letters[position + 1]);
    return {q_.at(a, b), out};
}

NormalTerm QuantumSpace::normal_form_oracle(const Word& w, Strategy strategy,
                                            std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    Word cur = w;
    LaurentMonomial coeff = LaurentMonomial::unit();
    std::vector<std::size_t> reducible;
    for (;;) {
        reducible.clear();
        for (std::size_t p = 0; p + 1 < cur.size(); ++p)
            if (cur[p] > cur[p + 1]) reducible.push_back(p);
        if (reducible.empty()) break;
        std::size_t pos = reducible.front();
        switch (strategy) {
            case Strategy::Leftmost: pos = reducible.front(); break;
            case Strategy::Rightmost: pos = reducible.back(); break;
            case Strategy::RandomSeeded:
                pos = reducible[std::uniform_int_distribution<std::size_t>(
                    0, reducible.size() - 1)(rng)];
                break;
        }
        auto [c, next] = reduce_step(cur, pos);
        coeff = coeff * c;
        cur = std::move(next);
    }
    NormalTerm t;
    t.coeff = std::move(coeff);
    t.term = ExponentVector::of_word(cur, static_cast<std::size_t>(n_) + 1);
    return t;
}

NormalTerm QuantumSpace::bullet(const NormalTerm& a, const NormalTerm& b) const {
    NormalTerm nf = normal_form(a.term.to_word().concat(b.term.to_word()));
    nf.coeff = a.coeff * b.coeff * nf.coeff;
    return nf;
}

BigInt QuantumSpace::hilbert_dim(std::int64_t d) const {
    return binomial(n_ + d, d);
}

Presentation QuantumSpace::koszul_dual() const {
    Presentation p;
    p.provenance = Provenance::KoszulDual;
    for (int i = 0; i <= n_; ++i) p.generator_labels.push_back(indexed_label("xi", i));
    for (int j = 1; j <= n_; ++j)
        for (int i = 0; i < j; ++i)
            p.relations.push_back({Word{j, i}, q_.at(j, i).inverse(), Word{i, j}});
    for (int j = 0; j <= n_; ++j) p.monomial_relations.push_back(Word{j, j});
    return p;
}

}  // namespace qgb
