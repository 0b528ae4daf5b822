#ifndef QGB_COEFF_HPP
#define QGB_COEFF_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgb/errors.hpp"

namespace qgb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Index of a base parameter within a ParamSet. Distinct parameters of one
/// session have distinct ids.
using ParamId = std::int32_t;

/// Registry of named nonzero parameters (the free entries of deformation
/// matrices). Ids are allocation order, which fixes serialization order.
class ParamSet {
public:
    ParamId add(std::string name) {
        names_.push_back(std::move(name));
        return static_cast<ParamId>(names_.size() - 1);
    }
    const std::string& name(ParamId id) const { return names_.at(static_cast<size_t>(id)); }
    std::size_t size() const { return names_.size(); }

    /// Id of an existing name, or a fresh id if unseen (used by JSON parsing).
    ParamId id_of(const std::string& name) {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == name) return static_cast<ParamId>(k);
        return add(name);
    }

private:
    std::vector<std::string> names_;
};

class ParamAssignment;

/// Exact coefficient: a Laurent monomial ∏ p_k^{e_k} over named nonzero
/// parameters. Canonical form (sorted ids, no zero exponents) makes
/// structural equality semantic equality.
class LaurentMonomial {
public:
    using Exp = std::int64_t;
    using Entry = std::pair<ParamId, Exp>;

    LaurentMonomial() = default;

    static LaurentMonomial unit() { return {}; }

    static LaurentMonomial param(ParamId p, Exp e = 1) {
        LaurentMonomial m;
        if (e != 0) m.exps_.emplace_back(p, e);
        return m;
    }

    /// Builds from arbitrary (id, exp) pairs; merges and canonicalizes.
    static LaurentMonomial from_entries(std::vector<Entry> entries);

    bool is_unit() const { return exps_.empty(); }
    const std::vector<Entry>& entries() const { return exps_; }

    /// Exponent of a parameter (0 when absent).
    Exp exponent(ParamId p) const;

    LaurentMonomial operator*(const LaurentMonomial& rhs) const;
    LaurentMonomial inverse() const;
    /// e-th power (e may be negative or zero).
    LaurentMonomial pow(Exp e) const;

    bool operator==(const LaurentMonomial&) const = default;

    /// ∏ s(p)^{e_p} as an exact rational.
    Rational eval(const ParamAssignment& s, const ParamSet& params) const;

    /// Rendering with factors joined by '*': "q^2", "q20*q21*q10^-1";
    /// the unit renders as "1".
    std::string str(const ParamSet& params) const;

private:
    std::vector<Entry> exps_;  // sorted by ParamId, no zero exponents
};

/// Map ParamId -> exact nonzero rational.
class ParamAssignment {
public:
    void set(ParamId p, Rational v) {
        if (v == 0) throw Error("parameter values must be nonzero");
        if (static_cast<std::size_t>(p) >= values_.size())
            values_.resize(static_cast<std::size_t>(p) + 1);
        values_[static_cast<std::size_t>(p)] = {true, std::move(v)};
    }

    bool has(ParamId p) const {
        return static_cast<std::size_t>(p) < values_.size() &&
               values_[static_cast<std::size_t>(p)].first;
    }

    const Rational& get(ParamId p) const { return values_.at(static_cast<std::size_t>(p)).second; }

private:
    std::vector<std::pair<bool, Rational>> values_;
};

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace qgb

#endif
