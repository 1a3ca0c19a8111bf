#include "pgraph/spectrum.hpp"

#include <sstream>
#include <stdexcept>

namespace pgraph {

IntPolynomial::IntPolynomial(std::vector<Bigint> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Bigint c) {
    IntPolynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial_x() {
    IntPolynomial p;
    p.coeffs_ = {Bigint(0), Bigint(1)};
    return p;
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == Bigint(1);
}

const Bigint& IntPolynomial::coeff(std::size_t i) const {
    static const Bigint zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Bigint> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Bigint> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Bigint> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j].add_mul(coeffs_[i], o.coeffs_[j]);
    return IntPolynomial(std::move(r));
}

Bigint IntPolynomial::eval(const Bigint& x) const {
    Bigint acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

IntPolynomial IntPolynomial::shifted_arg(const Bigint& c) const {
    // P(x - c) = sum a_i (x - c)^i, built iteratively
    IntPolynomial result;
    IntPolynomial x_minus_c({-c, Bigint(1)});
    IntPolynomial power = IntPolynomial::constant(Bigint(1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero())
            result = result + power * IntPolynomial::constant(coeffs_[i]);
        if (i + 1 < coeffs_.size()) power = power * x_minus_c;
    }
    return result;
}

IntPolynomial IntPolynomial::divexact_linear(const Bigint& root) const {
    if (is_zero()) throw std::domain_error("divexact_linear: zero polynomial");
    // synthetic division: q_{d-1} = a_d; q_{i-1} = a_i + root * q_i
    std::vector<Bigint> q(coeffs_.size() - 1);
    Bigint carry = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + root * carry;
    }
    if (!carry.is_zero())
        throw std::domain_error("divexact_linear: (x - root) is not a factor");
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Bigint& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string mag = c.abs().to_string();
        if (first) {
            if (c.is_negative()) os << '-';
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) return "0";
    return os.str();
}

void FactoredSpectrum::add(const Bigint& eigenvalue, const Bigint& multiplicity) {
    if (eigenvalue.is_negative())
        throw std::invalid_argument("FactoredSpectrum: negative eigenvalue");
    if (multiplicity <= Bigint(0))
        throw std::invalid_argument("FactoredSpectrum: multiplicity must be positive");
    roots_[eigenvalue] += multiplicity;
}

Bigint FactoredSpectrum::total_multiplicity() const {
    Bigint t;
    for (const auto& [ev, mult] : roots_) t += mult;
    return t;
}

Bigint FactoredSpectrum::multiplicity_of(const Bigint& eigenvalue) const {
    auto it = roots_.find(eigenvalue);
    return it == roots_.end() ? Bigint() : it->second;
}

bool FactoredSpectrum::contains(const Bigint& eigenvalue) const {
    return roots_.count(eigenvalue) != 0;
}

const Bigint& FactoredSpectrum::max_eigenvalue() const {
    if (roots_.empty()) throw std::domain_error("FactoredSpectrum: empty spectrum");
    return roots_.rbegin()->first;
}

Bigint FactoredSpectrum::trace() const {
    Bigint t;
    for (const auto& [ev, mult] : roots_) t.add_mul(ev, mult);
    return t;
}

std::string FactoredSpectrum::first_difference(const FactoredSpectrum& o) const {
    auto it = roots_.begin();
    auto jt = o.roots_.begin();
    while (it != roots_.end() || jt != o.roots_.end()) {
        if (it == roots_.end() || (jt != o.roots_.end() && jt->first < it->first)) {
            return "eigenvalue " + jt->first.to_string() + ": 0 vs " + jt->second.to_string();
        }
        if (jt == o.roots_.end() || it->first < jt->first) {
            return "eigenvalue " + it->first.to_string() + ": " + it->second.to_string() +
                   " vs 0";
        }
        if (it->second != jt->second) {
            return "eigenvalue " + it->first.to_string() + ": " + it->second.to_string() +
                   " vs " + jt->second.to_string();
        }
        ++it;
        ++jt;
    }
    return {};
}

std::string FactoredSpectrum::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [ev, mult] : roots_) {
        if (!first) os << ", ";
        first = false;
        os << ev.to_string() << '^' << mult.to_string();
    }
    os << '}';
    return os.str();
}

FactoredSpectrum spectrum_of_complete(const Bigint& k) {
    if (k < Bigint(1))
        throw std::invalid_argument("spectrum_of_complete: need k >= 1");
    FactoredSpectrum s;
    s.add(Bigint(0), Bigint(1));
    if (k > Bigint(1)) s.add(k, k - Bigint(1));
    return s;
}

FactoredSpectrum union_spectrum(
    const std::vector<std::pair<FactoredSpectrum, Bigint>>& parts) {
    if (parts.empty())
        throw std::invalid_argument("union_spectrum: empty part list");
    FactoredSpectrum out;
    for (const auto& [spec, copies] : parts) {
        if (copies < Bigint(1))
            throw std::invalid_argument("union_spectrum: copy count must be >= 1");
        for (const auto& [ev, mult] : spec.roots()) out.add(ev, mult * copies);
    }
    return out;
}

FactoredSpectrum join_spectrum(const FactoredSpectrum& s1, const FactoredSpectrum& s2) {
    if (!s1.contains(Bigint(0)) || !s2.contains(Bigint(0)))
        throw std::invalid_argument(
            "join_spectrum: operand lacks eigenvalue 0 (not a Laplacian spectrum)");
    Bigint n1 = s1.total_multiplicity();
    Bigint n2 = s2.total_multiplicity();
    FactoredSpectrum out;
    out.add(Bigint(0), Bigint(1));
    out.add(n1 + n2, Bigint(1));
    for (const auto& [ev, mult] : s1.roots()) {
        Bigint m = ev.is_zero() ? mult - Bigint(1) : mult;
        if (m > Bigint(0)) out.add(ev + n2, m);
    }
    for (const auto& [ev, mult] : s2.roots()) {
        Bigint m = ev.is_zero() ? mult - Bigint(1) : mult;
        if (m > Bigint(0)) out.add(ev + n1, m);
    }
    return out;
}

IntPolynomial expand(const FactoredSpectrum& s, std::size_t max_degree) {
    Bigint total = s.total_multiplicity();
    if (total > Bigint(static_cast<unsigned long long>(max_degree)))
        throw std::length_error("expand: degree exceeds the expansion limit");
    IntPolynomial p = IntPolynomial::constant(Bigint(1));
    for (const auto& [ev, mult] : s.roots()) {
        IntPolynomial factor({-ev, Bigint(1)});
        for (Bigint i; i < mult; i += Bigint(1)) p = p * factor;
    }
    return p;
}

}  // namespace pgraph
