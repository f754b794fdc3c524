#include "cyclokin/jet.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace cyclokin {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

} // namespace

double Jet::derivative(int k) const {
    if (k < 0 || k > order())
        throw OrderError("derivative order " + std::to_string(k) +
                         " exceeds jet order " + std::to_string(order()));
    return factorial(k) * coeffs_[static_cast<std::size_t>(k)];
}

Jet Jet::operator-() const {
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

Jet Jet::operator+(const Jet& o) const {
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

Jet Jet::operator-(const Jet& o) const {
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

Jet Jet::operator*(const Jet& o) const {
    // Truncated Cauchy product. Coefficient k depends only on prefixes
    // 0..k of both factors, so prefixes are order-independent.
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += coeffs_[j] * o.coeffs_[k - j];
        r.coeffs_[k] = s;
    }
    return r;
}

Jet Jet::operator/(const Jet& o) const {
    if (o.coeffs_[0] == 0.0)
        throw DomainError("division by a jet with zero value");
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        double s = coeffs_[k];
        for (std::size_t j = 0; j < k; ++j) s -= r.coeffs_[j] * o.coeffs_[k - j];
        r.coeffs_[k] = s / o.coeffs_[0];
    }
    return r;
}

Jet Jet::operator+(double s) const {
    Jet r = *this;
    r.coeffs_[0] += s;
    return r;
}

Jet Jet::operator-(double s) const {
    Jet r = *this;
    r.coeffs_[0] -= s;
    return r;
}

Jet Jet::operator*(double s) const {
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * s;
    return r;
}

Jet Jet::operator/(double s) const {
    if (s == 0.0) throw DomainError("division by zero");
    Jet r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] / s;
    return r;
}

Jet operator-(double s, const Jet& j) { return Jet::constant(s, j.order()) - j; }

Jet operator/(double s, const Jet& j) { return Jet::constant(s, j.order()) / j; }

std::pair<Jet, Jet> sin_cos(const Jet& a) {
    const int order = a.order();
    std::vector<double> s(static_cast<std::size_t>(order) + 1);
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    s[0] = std::sin(a.coeff(0));
    c[0] = std::cos(a.coeff(0));
    // From s' = a' cos(a), c' = -a' sin(a) in Taylor-coefficient form:
    //   k s_k =  sum_{j=1..k} j a_j c_{k-j}
    //   k c_k = -sum_{j=1..k} j a_j s_{k-j}
    for (int k = 1; k <= order; ++k) {
        double ss = 0.0;
        double cs = 0.0;
        for (int j = 1; j <= k; ++j) {
            const double ja = static_cast<double>(j) * a.coeff(j);
            ss += ja * c[static_cast<std::size_t>(k - j)];
            cs -= ja * s[static_cast<std::size_t>(k - j)];
        }
        s[static_cast<std::size_t>(k)] = ss / static_cast<double>(k);
        c[static_cast<std::size_t>(k)] = cs / static_cast<double>(k);
    }
    return {Jet(std::move(s)), Jet(std::move(c))};
}

Jet sin(const Jet& a) { return sin_cos(a).first; }

Jet cos(const Jet& a) { return sin_cos(a).second; }

Jet sqrt(const Jet& a) {
    if (a.coeff(0) < 0.0)
        throw DomainError("sqrt of a jet with negative value");
    if (a.coeff(0) == 0.0 && a.order() >= 1)
        throw DomainError("sqrt of a jet with zero value: derivatives are singular");
    const int order = a.order();
    std::vector<double> r(static_cast<std::size_t>(order) + 1);
    r[0] = std::sqrt(a.coeff(0));
    for (int k = 1; k <= order; ++k) {
        double s = a.coeff(k);
        for (int j = 1; j < k; ++j) s -= r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = s / (2.0 * r[0]);
    }
    return Jet(std::move(r));
}

Jet pow(const Jet& a, int exponent) {
    if (exponent < 0)
        return Jet::constant(1.0, a.order()) / pow(a, -exponent);
    Jet result = Jet::constant(1.0, a.order());
    Jet base = a;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

} // namespace cyclokin
