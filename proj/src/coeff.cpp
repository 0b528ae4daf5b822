#include "qgb/coeff.hpp"

#include <algorithm>

namespace qgb {

LaurentMonomial LaurentMonomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    LaurentMonomial m;
    for (const auto& [p, e] : entries) {
        if (!m.exps_.empty() && m.exps_.back().first == p)
            m.exps_.back().second += e;
        else
            m.exps_.emplace_back(p, e);
    }
    std::erase_if(m.exps_, [](const Entry& en) { return en.second == 0; });
    return m;
}

LaurentMonomial::Exp LaurentMonomial::exponent(ParamId p) const {
    for (const auto& [id, e] : exps_)
        if (id == p) return e;
    return 0;
}

LaurentMonomial LaurentMonomial::operator*(const LaurentMonomial& rhs) const {
    LaurentMonomial out;
    out.exps_.reserve(exps_.size() + rhs.exps_.size());
    std::size_t a = 0, b = 0;
    while (a < exps_.size() && b < rhs.exps_.size()) {
        if (exps_[a].first < rhs.exps_[b].first) {
            out.exps_.push_back(exps_[a++]);
        } else if (exps_[a].first > rhs.exps_[b].first) {
            out.exps_.push_back(rhs.exps_[b++]);
        } else {
            Exp e = exps_[a].second + rhs.exps_[b].second;
            if (e != 0) out.exps_.emplace_back(exps_[a].first, e);
            ++a, ++b;
        }
    }
    for (; a < exps_.size(); ++a) out.exps_.push_back(exps_[a]);
    for (; b < rhs.exps_.size(); ++b) out.exps_.push_back(rhs.exps_[b]);
    return out;
}

LaurentMonomial LaurentMonomial::inverse() const {
    LaurentMonomial out = *this;
    for (auto& [p, e] : out.exps_) e = -e;
    return out;
}

LaurentMonomial LaurentMonomial::pow(Exp e) const {
    if (e == 0) return unit();
    LaurentMonomial out = *this;
    for (auto& [p, ex] : out.exps_) ex *= e;
    return out;
}

namespace {

Rational rational_pow(const Rational& base, std::int64_t e) {
    using boost::multiprecision::pow;
    const std::int64_t a = e < 0 ? -e : e;
    const BigInt num = pow(numerator(base), static_cast<unsigned>(a));
    const BigInt den = pow(denominator(base), static_cast<unsigned>(a));
    return e < 0 ? Rational(den, num) : Rational(num, den);
}

}  // namespace

Rational LaurentMonomial::eval(const ParamAssignment& s, const ParamSet& params) const {
    Rational out = 1;
    for (const auto& [p, e] : exps_) {
        if (!s.has(p)) throw MissingParameterError(p, params.name(p));
        out *= rational_pow(s.get(p), e);
    }
    return out;
}

std::string LaurentMonomial::str(const ParamSet& params) const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : exps_) {
        if (!out.empty()) out += '*';
        out += params.name(p);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

}  // namespace qgb
