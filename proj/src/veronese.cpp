#include "qgb/veronese.hpp"

#include <algorithm>

namespace qgb {

namespace {

void enumerate_compositions(int parts, int total, std::vector<std::int32_t>& cur,
                            std::vector<ExponentVector>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur.push_back(k);
        enumerate_compositions(parts - 1, total - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TermTable::TermTable(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 1) throw Error("term table requires n >= 0, d >= 1");
    std::vector<std::int32_t> cur;
    enumerate_compositions(n + 1, d, cur, terms_);
    std::sort(terms_.begin(), terms_.end(), [](const ExponentVector& a, const ExponentVector& b) {
        return deglex_compare(a.to_word(), b.to_word()) == Ordering::LT;
    });
    for (std::size_t k = 0; k < terms_.size(); ++k)
        index_[terms_[k].alpha] = static_cast<int>(k);
}

int TermTable::index_of(const ExponentVector& ev) const {
    auto it = index_.find(ev.alpha);
    if (it == index_.end()) throw Error("exponent vector not in term table");
    return it->second;
}

int TermTable::m_of(int j) const {
    const auto& a = term(j).alpha;
    for (std::size_t s = 0; s < a.size(); ++s)
        if (a[s] >= 1) return static_cast<int>(s);
    throw Error("zero term in table");
}

int TermTable::M_of(int j) const {
    const auto& a = term(j).alpha;
    for (std::size_t s = a.size(); s-- > 0;)
        if (a[s] >= 1) return static_cast<int>(s);
    throw Error("zero term in table");
}

PairClassification classify_pairs(const TermTable& table) {
    PairClassification out;
    const int count = table.count();
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j)
            (table.M_of(i) <= table.m_of(j) ? out.c2 : out.mv).emplace_back(i, j);
    return out;
}

std::vector<std::array<int, 3>> c3_set(const TermTable& table) {
    const int count = table.count();
    std::vector<char> in_c2(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j)
            if (table.M_of(i) <= table.m_of(j))
                in_c2[static_cast<std::size_t>(i) * count + j] = 1;
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j) {
            if (!in_c2[static_cast<std::size_t>(i) * count + j]) continue;
            for (int k = j; k < count; ++k)
                if (in_c2[static_cast<std::size_t>(j) * count + k]) out.push_back({i, j, k});
        }
    return out;
}

PhiEntry phi(int i, int j, const QuantumSpace& space, const TermTable& table) {
    PhiEntry e;
    e.i = i;
    e.j = j;
    const NormalTerm nf = space.normal_form(table.word_of(i).concat(table.word_of(j)));
    e.phi = nf.coeff;
    // The sorted word splits as w_{i'} w_{j'} at position d (Lemma "orders"
    // bijection): both halves are ordered and M(i') <= m(j').
    const Word sorted = nf.term.to_word();
    const int d = table.d();
    Word first, second;
    first.letters.assign(sorted.letters.begin(), sorted.letters.begin() + d);
    second.letters.assign(sorted.letters.begin() + d, sorted.letters.end());
    const auto n_plus_1 = static_cast<std::size_t>(table.n()) + 1;
    e.i_prime = table.index_of(ExponentVector::of_word(first, n_plus_1));
    e.j_prime = table.index_of(ExponentVector::of_word(second, n_plus_1));
    return e;
}

PhiTable::PhiTable(const QuantumSpace& space, const TermTable& table, Exec exec)
    : count_(table.count()) {
    const std::size_t total = static_cast<std::size_t>(count_) * static_cast<std::size_t>(count_);
    entries_.resize(total);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(total); ++k)
            entries_[static_cast<std::size_t>(k)] =
                phi(static_cast<int>(k / count_), static_cast<int>(k % count_), space, table);
    } else {
        for (std::size_t k = 0; k < total; ++k)
            entries_[k] =
                phi(static_cast<int>(k / count_), static_cast<int>(k % count_), space, table);
    }
}

Veronese::Veronese(const QuantumSpace& space, int d, Exec exec)
    : space_(space),
      d_(d),
      table_(space.n(), d),
      pairs_(classify_pairs(table_)),
      phi_(space_, table_, exec) {}

std::vector<std::string> Veronese::generator_labels() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(table_.count()));
    for (int k = 0; k < table_.count(); ++k) out.push_back(indexed_label("y", k));
    return out;
}

VeronesePresentation Veronese::presentation() const {
    VeronesePresentation out;
    const int count = table_.count();
    const auto labels = generator_labels();

    out.r1.generator_labels = labels;
    out.r1.provenance = Provenance::VeroneseR1;
    out.r1_prime.generator_labels = labels;
    out.r1_prime.provenance = Provenance::VeroneseR1Prime;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const PhiEntry& ji = phi_.at(j, i);
            out.r1.relations.push_back(
                {Word{j, i}, ji.phi, Word{ji.i_prime, ji.j_prime}});
            const PhiEntry& ij = phi_.at(i, j);
            out.r1_prime.relations.push_back(
                {Word{j, i}, ji.phi * ij.phi.inverse(), Word{i, j}});
        }
    }

    out.r2.generator_labels = labels;
    out.r2.provenance = Provenance::VeroneseR2;
    for (const auto& [i, j] : pairs_.mv) {
        const PhiEntry& ij = phi_.at(i, j);
        out.r2.relations.push_back({Word{i, j}, ij.phi, Word{ij.i_prime, ij.j_prime}});
    }
    return out;
}

DeformationMatrix Veronese::derived_matrix() const {
    const int count = table_.count();
    std::vector<LaurentMonomial> entries(static_cast<std::size_t>(count) *
                                         static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < count; ++i)
            entries[static_cast<std::size_t>(j) * count + i] =
                phi_.at(j, i).phi * phi_.at(i, j).phi.inverse();
    return DeformationMatrix::from_entries(count, std::move(entries));
}

Presentation Veronese::kernel_gb() const {
    Presentation p;
    p.generator_labels = generator_labels();
    p.provenance = Provenance::VeroneseKernel;
    for (const auto& [i, j] : pairs_.mv) {
        const PhiEntry& ij = phi_.at(i, j);
        p.relations.push_back({Word{i, j}, ij.phi, Word{ij.i_prime, ij.j_prime}});
    }
    return p;
}

LiftedKernel Veronese::lifted_kernel_gb() const {
    VeronesePresentation pres = presentation();
    LiftedKernel out;
    out.re1 = std::move(pres.r1);
    out.re1.provenance = Provenance::LiftedKernel;
    out.re2 = std::move(pres.r2);
    out.re2.provenance = Provenance::LiftedKernel;
    return out;
}

BigInt Veronese::image_dim(std::int64_t k) const {
    return binomial(space_.n() + k * d_, space_.n());
}

}  // namespace qgb
