#ifndef QGB_VERONESE_HPP
#define QGB_VERONESE_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qgb/exec.hpp"
#include "qgb/qspace.hpp"

namespace qgb {

/// Degree-d ordered monomials over x_0..x_n in increasing deglex order:
/// terms[0] = x_0^d, terms[N] = x_n^d, N+1 = binomial(n+d, d).
class TermTable {
public:
    TermTable(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    /// N+1 = binomial(n+d, d).
    int count() const { return static_cast<int>(terms_.size()); }

    const ExponentVector& term(int j) const { return terms_.at(static_cast<std::size_t>(j)); }
    Word word_of(int j) const { return term(j).to_word(); }
    int index_of(const ExponentVector& ev) const;

    /// Smallest generator index with positive exponent in term j.
    int m_of(int j) const;
    /// Largest generator index with positive exponent in term j.
    int M_of(int j) const;

private:
    int n_, d_;
    std::vector<ExponentVector> terms_;
    std::map<std::vector<std::int32_t>, int> index_;
};

/// Partition of all pairs i <= j: C(n,2,d) (concatenation stays an ordered
/// monomial, M(i) <= m(j)) against MV(n,d) (it does not).
struct PairClassification {
    std::vector<std::pair<int, int>> c2;
    std::vector<std::pair<int, int>> mv;
};

PairClassification classify_pairs(const TermTable& table);

/// All chains i <= j <= k with (i,j) and (j,k) both in C(n,2,d).
std::vector<std::array<int, 3>> c3_set(const TermTable& table);

/// Nor(w_i w_j) = phi * w_{i'} w_{j'} with (i',j') in C(n,2,d).
struct PhiEntry {
    int i = 0, j = 0;
    LaurentMonomial phi;
    int i_prime = 0, j_prime = 0;

    bool operator==(const PhiEntry&) const = default;
};

PhiEntry phi(int i, int j, const QuantumSpace& space, const TermTable& table);

/// phi for every ordered pair (i,j) in [0,N]^2, indexed i*(N+1)+j.
/// Entries are independent, so the production kernel computes them with an
/// OpenMP parallel loop; Exec::Serial is the reference path.
class PhiTable {
public:
    PhiTable(const QuantumSpace& space, const TermTable& table, Exec exec = Exec::Parallel);

    const PhiEntry& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(count_) +
                        static_cast<std::size_t>(j)];
    }
    int count() const { return count_; }
    bool operator==(const PhiTable&) const = default;

private:
    int count_;
    std::vector<PhiEntry> entries_;
};

struct VeronesePresentation {
    Presentation r1;        // y_j y_i - phi_{ji} y_{i'} y_{j'}, i < j
    Presentation r2;        // y_i y_j - phi_{ij} y_{i'} y_{j'}, (i,j) in MV
    Presentation r1_prime;  // y_j y_i - g_{ji} y_i y_j, i < j
};

struct LiftedKernel {
    Presentation re1;  // free-algebra counterpart of R1
    Presentation re2;  // free-algebra counterpart of R2
};

/// The d-Veronese construction for one quantum space, sharing the term and
/// phi tables across the presentation, matrix, and kernel outputs.
class Veronese {
public:
    Veronese(const QuantumSpace& space, int d, Exec exec = Exec::Parallel);

    const TermTable& table() const { return table_; }
    const PhiTable& phi_table() const { return phi_; }
    const PairClassification& pairs() const { return pairs_; }
    const QuantumSpace& space() const { return space_; }
    int d() const { return d_; }
    int big_n() const { return table_.count() - 1; }

    VeronesePresentation presentation() const;

    /// The (N+1)x(N+1) matrix g with g_{ji} = phi_{ji} / phi_{ij}.
    DeformationMatrix derived_matrix() const;

    /// Reduced Groebner basis of ker(v_{n,d}): one binomial
    /// y_i y_j - phi_{ij} y_{i'} y_{j'} per MV pair, in lex order.
    Presentation kernel_gb() const;

    /// Reduced Groebner basis of the lifted kernel in the free algebra.
    LiftedKernel lifted_kernel_gb() const;

    /// dim of the image in Veronese degree k: binomial(n + k*d, n).
    BigInt image_dim(std::int64_t k) const;

    std::vector<std::string> generator_labels() const;

private:
    QuantumSpace space_;
    int d_;
    TermTable table_;
    PairClassification pairs_;
    PhiTable phi_;
};

}  // namespace qgb

#endif
