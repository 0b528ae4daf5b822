#include "qgb/gbcheck.hpp"

#include <algorithm>

namespace qgb {

std::string setting_name(Setting s) {
    return s == Setting::FreeAlgebra ? "FreeAlgebra" : "QuantumSpace";
}

RewriteSystem::RewriteSystem(Setting s, int alphabet, std::optional<QuantumSpace> ambient)
    : setting_(s), alphabet_(alphabet), ambient_(std::move(ambient)) {
    if (alphabet_ <= 0) throw Error("rewrite system needs a positive alphabet");
    lookup_.assign(static_cast<std::size_t>(alphabet_) * static_cast<std::size_t>(alphabet_), -1);
}

const QuantumSpace& RewriteSystem::ambient() const {
    if (!ambient_) throw Error("free-algebra system has no ambient space");
    return *ambient_;
}

void RewriteSystem::add_rule(const BinomialRelation& rel) {
    if (rel.lead.size() != 2 || rel.tail.size() != 2)
        throw Error("rewrite rules must be quadratic");
    if (deglex_compare(rel.tail, rel.lead) != Ordering::LT)
        throw Error("rule tail must be strictly smaller than its lead");
    const Letter a = rel.lead[0], b = rel.lead[1];
    if (a < 0 || b < 0 || a >= alphabet_ || b >= alphabet_)
        throw Error("rule letter out of alphabet range");
    if (setting_ == Setting::QuantumSpace && a > b)
        throw Error("quantum-space leads must be ordered words");
    auto& slot = lookup_[static_cast<std::size_t>(a) * static_cast<std::size_t>(alphabet_) +
                         static_cast<std::size_t>(b)];
    if (slot >= 0) throw Error("duplicate lead word in rewrite system");
    slot = static_cast<int>(rules_.size());
    rules_.push_back({a, b, rel.coeff, rel.tail[0], rel.tail[1]});
}

RewriteSystem RewriteSystem::free_system(int alphabet_size, const Presentation& p) {
    RewriteSystem sys(Setting::FreeAlgebra, alphabet_size, std::nullopt);
    for (const auto& rel : p.relations) sys.add_rule(rel);
    return sys;
}

RewriteSystem RewriteSystem::quantum_system(QuantumSpace ambient, const Presentation& p) {
    const int alphabet = ambient.n() + 1;
    RewriteSystem sys(Setting::QuantumSpace, alphabet, std::move(ambient));
    for (const auto& rel : p.relations) sys.add_rule(rel);
    return sys;
}

namespace {

std::size_t iteration_bound(const RewriteSystem& sys, const Word& w) {
    const std::size_t len = std::max<std::size_t>(w.size(), 2);
    const auto k = static_cast<std::size_t>(sys.alphabet_size());
    return len * len * k * k + 16;
}

ReducedTerm reduce_free(const RewriteSystem& sys, ReducedTerm t, ReduceDir dir,
                        std::vector<ReducedTerm>* trace) {
    const std::size_t bound = iteration_bound(sys, t.word);
    for (std::size_t iter = 0;; ++iter) {
        if (iter > bound) throw InternalError("free reduction exceeded its iteration bound");
        bool changed = false;
        const std::size_t len = t.word.size();
        for (std::size_t step = 0; step + 1 < len; ++step) {
            const std::size_t p = dir == ReduceDir::Leftmost ? step : len - 2 - step;
            if (auto r = sys.rule_for(t.word[p], t.word[p + 1])) {
                const RewriteRule& rule = sys.rules()[static_cast<std::size_t>(*r)];
                t.coeff = t.coeff * rule.coeff;
                t.word.letters[p] = rule.c;
                t.word.letters[p + 1] = rule.d;
                if (trace) trace->push_back(t);
                changed = true;
                break;
            }
        }
        if (!changed) return t;
    }
}

/// One quantum-space reduction: T_alpha = zeta_L^{-1} (T_beta bullet lead),
/// so replacing the lead by coeff*tail yields coeff * zeta_R * zeta_L^{-1}
/// on T_{beta + tail}.
ReducedTerm apply_quantum_rule(const QuantumSpace& space, const RewriteRule& rule,
                               ReducedTerm t) {
    ExponentVector beta = ExponentVector::of_word(t.word, static_cast<std::size_t>(space.n()) + 1);
    --beta.alpha[static_cast<std::size_t>(rule.a)];
    --beta.alpha[static_cast<std::size_t>(rule.b)];
    const Word base = beta.to_word();
    const LaurentMonomial zeta_lead =
        space.normal_form(base.concat(Word{rule.a, rule.b})).coeff;
    const NormalTerm rhs = space.normal_form(base.concat(Word{rule.c, rule.d}));
    ReducedTerm out;
    out.coeff = t.coeff * rule.coeff * rhs.coeff * zeta_lead.inverse();
    out.word = rhs.term.to_word();
    return out;
}

ReducedTerm reduce_quantum(const RewriteSystem& sys, ReducedTerm t, ReduceDir dir,
                           std::vector<ReducedTerm>* trace) {
    const QuantumSpace& space = sys.ambient();
    {
        const NormalTerm nf = space.normal_form(t.word);
        t.coeff = t.coeff * nf.coeff;
        t.word = nf.term.to_word();
    }
    const std::size_t bound = iteration_bound(sys, t.word);
    const auto& rules = sys.rules();
    for (std::size_t iter = 0;; ++iter) {
        if (iter > bound) throw InternalError("quantum reduction exceeded its iteration bound");
        ExponentVector ev = ExponentVector::of_word(t.word, static_cast<std::size_t>(space.n()) + 1);
        bool changed = false;
        for (std::size_t step = 0; step < rules.size(); ++step) {
            const std::size_t r = dir == ReduceDir::Leftmost ? step : rules.size() - 1 - step;
            const RewriteRule& rule = rules[r];
            const auto ea = ev.alpha[static_cast<std::size_t>(rule.a)];
            const auto eb = ev.alpha[static_cast<std::size_t>(rule.b)];
            const bool divides = rule.a == rule.b ? ea >= 2 : (ea >= 1 && eb >= 1);
            if (divides) {
                t = apply_quantum_rule(space, rule, std::move(t));
                if (trace) trace->push_back(t);
                changed = true;
                break;
            }
        }
        if (!changed) return t;
    }
}

}  // namespace

ReducedTerm reduce_term(const RewriteSystem& sys, const ReducedTerm& t, ReduceDir dir,
                        std::vector<ReducedTerm>* trace) {
    return sys.setting() == Setting::FreeAlgebra ? reduce_free(sys, t, dir, trace)
                                                 : reduce_quantum(sys, t, dir, trace);
}

std::vector<ReducedTerm> reduce_word(const RewriteSystem& sys, const Word& w, ReduceDir dir) {
    return {reduce_term(sys, {LaurentMonomial::unit(), w}, dir)};
}

std::vector<Composition> overlap_compositions(const RewriteSystem& sys) {
    if (sys.setting() != Setting::FreeAlgebra)
        throw Error("overlap compositions are defined in the free-algebra setting");
    std::vector<Composition> out;
    const auto& rules = sys.rules();
    for (std::size_t r1 = 0; r1 < rules.size(); ++r1) {
        for (std::size_t r2 = 0; r2 < rules.size(); ++r2) {
            if (rules[r1].b != rules[r2].a) continue;
            Composition c;
            c.left_rule = static_cast<int>(r1);
            c.right_rule = static_cast<int>(r2);
            c.overlap_word = Word{rules[r1].a, rules[r1].b, rules[r2].b};
            c.left_start = {rules[r1].coeff, Word{rules[r1].c, rules[r1].d, rules[r2].b}};
            c.right_start = {rules[r2].coeff, Word{rules[r1].a, rules[r2].c, rules[r2].d}};
            out.push_back(std::move(c));
        }
    }
    return out;
}

SolvabilityCheck check_solvable(const RewriteSystem& sys, const Composition& comp) {
    SolvabilityCheck out;
    out.left_nf = reduce_term(sys, comp.left_start, ReduceDir::Leftmost, &out.left_trace);
    out.right_nf = reduce_term(sys, comp.right_start, ReduceDir::Leftmost, &out.right_trace);
    out.solvable = out.left_nf == out.right_nf;
    return out;
}

namespace {

std::vector<char> allowed_matrix(const RewriteSystem& sys) {
    const auto k = static_cast<std::size_t>(sys.alphabet_size());
    std::vector<char> allowed(k * k, 1);
    for (const RewriteRule& r : sys.rules())
        allowed[static_cast<std::size_t>(r.a) * k + static_cast<std::size_t>(r.b)] = 0;
    return allowed;
}

}  // namespace

BigInt count_normal_words_free(const RewriteSystem& sys, int length, Exec exec) {
    if (sys.setting() != Setting::FreeAlgebra)
        throw Error("count_normal_words_free needs the free-algebra setting");
    const auto k = static_cast<std::size_t>(sys.alphabet_size());
    if (length < 0) throw Error("length must be non-negative");
    if (length == 0) return 1;
    if (length == 1) return static_cast<std::int64_t>(k);
    const std::vector<char> allowed = allowed_matrix(sys);

    if (length == 3) {
        // 1^T M^2 1: row sums first, then one pass over the matrix.
        std::vector<std::uint64_t> row_sum(k, 0);
        std::uint64_t total = 0;
        if (exec == Exec::Parallel) {
#pragma omp parallel for
            for (std::int64_t b = 0; b < static_cast<std::int64_t>(k); ++b) {
                std::uint64_t s = 0;
                for (std::size_t c = 0; c < k; ++c)
                    s += allowed[static_cast<std::size_t>(b) * k + c];
                row_sum[static_cast<std::size_t>(b)] = s;
            }
#pragma omp parallel for reduction(+ : total)
            for (std::int64_t a = 0; a < static_cast<std::int64_t>(k); ++a) {
                std::uint64_t s = 0;
                for (std::size_t b = 0; b < k; ++b)
                    if (allowed[static_cast<std::size_t>(a) * k + b]) s += row_sum[b];
                total += s;
            }
        } else {
            for (std::size_t b = 0; b < k; ++b)
                for (std::size_t c = 0; c < k; ++c) row_sum[b] += allowed[b * k + c];
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    if (allowed[a * k + b]) total += row_sum[b];
        }
        return total;
    }

    // General length: vector iteration of the transition matrix.
    std::vector<BigInt> v(k, 1);
    for (int step = 1; step < length; ++step) {
        std::vector<BigInt> next(k, 0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b)
                if (allowed[a * k + b]) next[a] += v[b];
        v = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& x : v) total += x;
    return total;
}

BigInt count_normal_ordered_words(const RewriteSystem& sys, int length, Exec exec) {
    if (sys.setting() != Setting::QuantumSpace)
        throw Error("count_normal_ordered_words needs the quantum-space setting");
    const auto k = static_cast<std::size_t>(sys.alphabet_size());
    if (length < 0) throw Error("length must be non-negative");
    if (length == 0) return 1;
    if (length == 1) return static_cast<std::int64_t>(k);
    const std::vector<char> allowed = allowed_matrix(sys);

    if (length == 3) {
        std::uint64_t total = 0;
        if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(+ : total)
            for (std::int64_t b = 0; b < static_cast<std::int64_t>(k); ++b) {
                std::uint64_t left = 0, right = 0;
                for (std::size_t a = 0; a <= static_cast<std::size_t>(b); ++a)
                    left += allowed[a * k + static_cast<std::size_t>(b)];
                for (std::size_t c = static_cast<std::size_t>(b); c < k; ++c)
                    right += allowed[static_cast<std::size_t>(b) * k + c];
                total += left * right;
            }
        } else {
            for (std::size_t b = 0; b < k; ++b) {
                std::uint64_t left = 0, right = 0;
                for (std::size_t a = 0; a <= b; ++a) left += allowed[a * k + b];
                for (std::size_t c = b; c < k; ++c) right += allowed[b * k + c];
                total += left * right;
            }
        }
        return total;
    }

    // f_{t+1}[b] = sum over a <= b with (a,b) allowed of f_t[a].
    std::vector<BigInt> v(k, 1);
    for (int step = 1; step < length; ++step) {
        std::vector<BigInt> next(k, 0);
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t a = 0; a <= b; ++a)
                if (allowed[a * k + b]) next[b] += v[a];
        v = std::move(next);
    }
    BigInt total = 0;
    for (const BigInt& x : v) total += x;
    return total;
}

CertificationReport certify_quadratic_gb(const RewriteSystem& sys, std::uint64_t expected_dim3,
                                         const std::string& system_id, Exec exec) {
    CertificationReport report;
    report.system_id = system_id;
    report.setting = sys.setting();
    report.expected_dim3 = expected_dim3;

    const BigInt count = sys.setting() == Setting::FreeAlgebra
                             ? count_normal_words_free(sys, 3, exec)
                             : count_normal_ordered_words(sys, 3, exec);
    report.normal3_count = static_cast<std::uint64_t>(count);

    bool all_solvable = true;
    if (sys.setting() == Setting::FreeAlgebra) {
        const std::vector<Composition> comps = overlap_compositions(sys);
        report.n_overlaps = static_cast<int>(comps.size());
        std::vector<char> solvable(comps.size(), 0);
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(comps.size()); ++c)
                solvable[static_cast<std::size_t>(c)] =
                    check_solvable(sys, comps[static_cast<std::size_t>(c)]).solvable ? 1 : 0;
        } else {
            for (std::size_t c = 0; c < comps.size(); ++c)
                solvable[c] = check_solvable(sys, comps[c]).solvable ? 1 : 0;
        }
        for (char s : solvable)
            if (s) ++report.n_solvable;
        all_solvable = report.n_solvable == report.n_overlaps;
    }

    report.pass = all_solvable && count == BigInt(expected_dim3);
    return report;
}

}  // namespace qgb
