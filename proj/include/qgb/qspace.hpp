#ifndef QGB_QSPACE_HPP
#define QGB_QSPACE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qgb/coeff.hpp"

namespace qgb {

using Letter = std::int32_t;

/// Word in the free monoid: a finite sequence of generator indices.
/// The empty word is the monoid unit.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    Letter operator[](std::size_t i) const { return letters[i]; }
    bool operator==(const Word&) const = default;

    Word concat(const Word& rhs) const;
};

/// Commutative multi-degree alpha in N_0^{n+1}. Corresponds to the unique
/// ordered monomial T_alpha = x_0^{a_0}...x_n^{a_n}.
struct ExponentVector {
    std::vector<std::int32_t> alpha;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::int32_t> a) : alpha(std::move(a)) {}

    std::size_t n_plus_1() const { return alpha.size(); }
    std::int32_t degree() const;
    bool operator==(const ExponentVector&) const = default;

    /// T_alpha as a word (letters in weakly increasing order).
    Word to_word() const;
    /// Letter multiset of a word, with alphabet size n_plus_1.
    static ExponentVector of_word(const Word& w, std::size_t n_plus_1);
};

/// coeff * T_alpha. The coefficient is never the zero scalar.
struct NormalTerm {
    LaurentMonomial coeff;
    ExponentVector term;

    bool operator==(const NormalTerm&) const = default;
};

/// lead - coeff*tail with lead > tail in deglex; homogeneous of degree 2
/// throughout this library.
struct BinomialRelation {
    Word lead;
    LaurentMonomial coeff;
    Word tail;

    bool operator==(const BinomialRelation&) const = default;
};

enum class Provenance {
    QuantumSpace,
    VeroneseR1,
    VeroneseR2,
    VeroneseR1Prime,
    VeroneseKernel,
    LiftedKernel,
    SegreSpace,
    SegreKernel,
    KoszulDual,
};

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& s);

/// Generators plus relations, tagged with which construction produced them.
/// monomial_relations is only populated by the Koszul dual (the xi_j^2).
struct Presentation {
    std::vector<std::string> generator_labels;
    std::vector<BinomialRelation> relations;
    Provenance provenance = Provenance::QuantumSpace;
    std::vector<Word> monomial_relations;

    bool operator==(const Presentation&) const = default;
};

enum class Ordering { LT, EQ, GT };

/// Degree-lexicographic order: shorter word first, equal lengths compared
/// lexicographically by letter index.
Ordering deglex_compare(const Word& u, const Word& v);

/// Multiplicatively anti-symmetric matrix of Laurent monomials:
/// entry(i,i) = 1 and entry(i,j)*entry(j,i) = 1.
class DeformationMatrix {
public:
    DeformationMatrix() = default;

    /// Validates the anti-symmetry invariants; throws BadMatrixError.
    static DeformationMatrix from_entries(int n_plus_1, std::vector<LaurentMonomial> entries);

    /// Generic symbolic matrix for n+1 generators: one fresh parameter per
    /// pair i<j, placed at entry(j,i); entry(i,j) is its inverse.
    /// With n == 1 the single parameter is named just `prefix`; otherwise
    /// names are `prefix{j}{i}` (with '_' separators once indices reach 10).
    static DeformationMatrix generic(int n, ParamSet& params, const std::string& prefix = "q");

    /// All-unit matrix (the commutative case).
    static DeformationMatrix ones(int n);

    int n_plus_1() const { return size_; }
    const LaurentMonomial& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                        static_cast<std::size_t>(j)];
    }
    bool operator==(const DeformationMatrix&) const = default;

private:
    int size_ = 0;
    std::vector<LaurentMonomial> entries_;  // row-major (i,j)
};

/// Name of the parameter attached to the pair i<j of a generic matrix:
/// "q" when there is a single pair indexed as in a 2-generator space,
/// otherwise "q{j}{i}" / "q{j}_{i}".
std::string pair_param_name(const std::string& prefix, int j, int i, bool single);

enum class Strategy { Leftmost, Rightmost, RandomSeeded };

/// Quantum space A^n_q: n+1 generators x_0..x_n with defining relations
/// x_j x_i = q_{ji} x_i x_j for i < j. Immutable after construction; all
/// operations are pure.
class QuantumSpace {
public:
    QuantumSpace(int n, DeformationMatrix q);

    int n() const { return n_; }
    const DeformationMatrix& matrix() const { return q_; }

    /// The defining relations {x_j x_i - q_{ji} x_i x_j : i<j} in
    /// lexicographic (j,i) order.
    Presentation presentation() const;

    /// Closed-form normal form: the coefficient is the product of q(a,b)
    /// over all inversion pairs of w; the term is the letter multiset.
    NormalTerm normal_form(const Word& w) const;

    /// One application of a defining relation at `position`. Throws
    /// NotReducibleError when the adjacent pair is already ordered.
    std::pair<LaurentMonomial, Word> reduce_step(const Word& w, std::size_t position) const;

    /// Step-wise reduction to the normal form; the independent oracle for
    /// the closed form. Must agree with normal_form for every strategy.
    NormalTerm normal_form_oracle(const Word& w, Strategy strategy,
                                  std::uint64_t seed = 0) const;

    /// a • b = Nor(ab) on the normal basis.
    NormalTerm bullet(const NormalTerm& a, const NormalTerm& b) const;

    /// dim A_d = binomial(n+d, d).
    BigInt hilbert_dim(std::int64_t d) const;

    /// Koszul dual presentation: {xi_j xi_i - q_{ji}^{-1} xi_i xi_j : i<j}
    /// plus the monomial relations {xi_j^2}.
    Presentation koszul_dual() const;

    std::vector<std::string> generator_labels() const;

private:
    int n_;
    DeformationMatrix q_;
};

/// Generator label conventions: "x0", "y12", "z1_0" (underscore separators
/// for double-index labels once an index reaches 10).
std::string indexed_label(const std::string& prefix, int i);
std::string indexed_label2(const std::string& prefix, int i, int j);

}  // namespace qgb

#endif
