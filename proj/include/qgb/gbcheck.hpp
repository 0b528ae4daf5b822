#ifndef QGB_GBCHECK_HPP
#define QGB_GBCHECK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgb/exec.hpp"
#include "qgb/qspace.hpp"

namespace qgb {

enum class Setting { FreeAlgebra, QuantumSpace };

/// A quadratic binomial rule: lead (a,b) rewrites to coeff * (c,d) with
/// (c,d) strictly smaller in deglex.
struct RewriteRule {
    Letter a, b;
    LaurentMonomial coeff;
    Letter c, d;
};

/// Quadratic binomial rewriting system, either over the free algebra or
/// inside an ambient quantum space (where leads are ordered 2-letter words
/// and reduction happens on the normal basis). Leads form an antichain.
class RewriteSystem {
public:
    static RewriteSystem free_system(int alphabet_size, const Presentation& p);
    static RewriteSystem quantum_system(QuantumSpace ambient, const Presentation& p);

    Setting setting() const { return setting_; }
    int alphabet_size() const { return alphabet_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const QuantumSpace& ambient() const;

    /// Index of the rule with lead (a,b), or nullopt.
    std::optional<int> rule_for(Letter a, Letter b) const {
        const int r = lookup_[static_cast<std::size_t>(a) * static_cast<std::size_t>(alphabet_) +
                              static_cast<std::size_t>(b)];
        return r < 0 ? std::nullopt : std::optional<int>(r);
    }

private:
    RewriteSystem(Setting s, int alphabet, std::optional<QuantumSpace> ambient);
    void add_rule(const BinomialRelation& rel);

    Setting setting_;
    int alphabet_;
    std::optional<QuantumSpace> ambient_;
    std::vector<RewriteRule> rules_;
    std::vector<int> lookup_;  // dense (a,b) -> rule index, -1 when absent
};

enum class ReduceDir { Leftmost, Rightmost };

/// One coefficient-word term of a reduced representation.
struct ReducedTerm {
    LaurentMonomial coeff;
    Word word;

    bool operator==(const ReducedTerm&) const = default;
};

/// Fully reduce w modulo the system. For the binomial systems in scope the
/// result always has exactly one term. Throws InternalError if the
/// defensive iteration bound |w|^2 * alphabet^2 is exceeded.
std::vector<ReducedTerm> reduce_word(const RewriteSystem& sys, const Word& w,
                                     ReduceDir dir = ReduceDir::Leftmost);

/// Reduce a term that already carries a coefficient.
ReducedTerm reduce_term(const RewriteSystem& sys, const ReducedTerm& t,
                        ReduceDir dir = ReduceDir::Leftmost,
                        std::vector<ReducedTerm>* trace = nullptr);

/// Overlap ambiguity: omega = abt where ab and bt are both leads. The two
/// branch terms are the results of applying each rule once.
struct Composition {
    Word overlap_word;  // 3 letters
    int left_rule, right_rule;
    ReducedTerm left_start, right_start;
};

/// All overlap compositions (including self-overlaps), in (left rule,
/// right rule) index order. FreeAlgebra setting only.
std::vector<Composition> overlap_compositions(const RewriteSystem& sys);

struct SolvabilityCheck {
    bool solvable = false;
    ReducedTerm left_nf, right_nf;
    std::vector<ReducedTerm> left_trace, right_trace;  // state after each step
};

/// Reduce both branches to normal form and compare; solvable iff they agree.
SolvabilityCheck check_solvable(const RewriteSystem& sys, const Composition& comp);

/// Number of length-`length` words over the alphabet avoiding every lead as
/// a factor (FreeAlgebra setting). At length 3 this is 1^T M^2 1 for the
/// allowed-transition matrix M, the production OpenMP kernel.
BigInt count_normal_words_free(const RewriteSystem& sys, int length, Exec exec = Exec::Parallel);

/// Number of ordered words z_a z_b z_c... (weakly increasing flat indices)
/// avoiding the lead set (QuantumSpace setting).
BigInt count_normal_ordered_words(const RewriteSystem& sys, int length,
                                  Exec exec = Exec::Parallel);

struct CertificationReport {
    std::string system_id;
    Setting setting = Setting::FreeAlgebra;
    int n_overlaps = 0;
    int n_solvable = 0;
    std::uint64_t normal3_count = 0;
    std::uint64_t expected_dim3 = 0;
    bool pass = false;
};

/// PASS iff the degree-3 normal-word count equals expected_dim3 and, in the
/// FreeAlgebra setting, every overlap composition is solvable. Composition
/// checks run in parallel; the report is assembled in composition order.
CertificationReport certify_quadratic_gb(const RewriteSystem& sys, std::uint64_t expected_dim3,
                                         const std::string& system_id,
                                         Exec exec = Exec::Parallel);

std::string setting_name(Setting s);

}  // namespace qgb

#endif
