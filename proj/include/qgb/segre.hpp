#ifndef QGB_SEGRE_HPP
#define QGB_SEGRE_HPP

#include <tuple>
#include <vector>

#include "qgb/qspace.hpp"

namespace qgb {

/// Generator z_{i,alpha} of the Segre source space, with flat index
/// i*(m+1)+alpha; the flat order is the lexicographic pair order.
struct SegreIndex {
    int i = 0;
    int alpha = 0;

    static SegreIndex of_flat(int flat, int m) { return {flat / (m + 1), flat % (m + 1)}; }
    int flat(int m) const { return i * (m + 1) + alpha; }
};

/// (i, j, beta, alpha) with i < j and alpha < beta; one kernel binomial each.
struct SegreQuadruple {
    int i = 0, j = 0, alpha = 0, beta = 0;
};

/// The image of a Z-word under the Segre map into A^n_q (tensor) A^m_q':
/// the coefficient and the two projected multi-degrees.
struct TensorValue {
    LaurentMonomial coeff;
    ExponentVector x_degree;
    ExponentVector y_degree;

    bool operator==(const TensorValue&) const = default;
};

/// The Segre construction s_{n,m} for a pair of quantum spaces.
class Segre {
public:
    Segre(QuantumSpace x_space, QuantumSpace y_space);

    const QuantumSpace& x_space() const { return x_; }
    const QuantumSpace& y_space() const { return y_; }
    int n() const { return x_.n(); }
    int m() const { return y_.n(); }
    int big_n() const { return (n() + 1) * (m() + 1) - 1; }

    /// g = q (Kronecker) q': g[(i,a),(j,b)] = q_{ij} * q'_{ab}.
    DeformationMatrix matrix() const;

    /// Defining relations of the derived quantum space A^N_g, one per
    /// unordered generator pair.
    Presentation space_relations() const;

    /// Reduced Groebner basis of ker(s_{n,m}):
    /// z_{i,beta} z_{j,alpha} - q'_{beta,alpha} z_{i,alpha} z_{j,beta}
    /// over all quadruples, in lexicographic (i,j,alpha,beta) order.
    Presentation kernel_gb() const;

    std::vector<SegreQuadruple> quadruples() const;

    /// Evaluate a word over Z through z_{i,a} -> x_i (tensor) y_a. The two
    /// projections are normal-formed independently (x and y letters commute
    /// with unit coefficient).
    TensorValue tensor_eval(const Word& w) const;

    /// dim (A^n_q o A^m_q')_t = binomial(n+t,t) * binomial(m+t,t).
    BigInt hilbert_dim(std::int64_t t) const;

    std::vector<std::string> generator_labels() const;

private:
    QuantumSpace x_, y_;
};

}  // namespace qgb

#endif
