#include "dsh/uniseries.hpp"

#include "dsh/errors.hpp"

namespace dsh {

UniSeries::UniSeries(int cap) : cap_(cap), coeffs_(cap + 1)
{
    if (cap < 0)
        throw StructuralError("negative cap");
}

UniSeries::UniSeries(int cap, std::vector<Rational> coefficients) : UniSeries(cap)
{
    if (coefficients.size() > coeffs_.size())
        throw StructuralError("more coefficients than cap allows");
    for (size_t i = 0; i < coefficients.size(); ++i)
        coeffs_[i] = coefficients[i];
}

UniSeries UniSeries::one(int cap)
{
    UniSeries s(cap);
    s.coeffs_[0] = 1;
    return s;
}

UniSeries UniSeries::variable(int cap)
{
    UniSeries s(cap);
    if (cap >= 1)
        s.coeffs_[1] = 1;
    return s;
}

Rational UniSeries::coefficient(int degree) const
{
    if (degree < 0 || degree > cap_)
        return 0;
    return coeffs_[degree];
}

void UniSeries::set(int degree, const Rational& value)
{
    if (degree < 0 || degree > cap_)
        throw StructuralError("degree " + std::to_string(degree) + " outside cap " + std::to_string(cap_));
    coeffs_[degree] = value;
}

void UniSeries::check_cap(const UniSeries& other) const
{
    if (other.cap_ != cap_)
        throw StructuralError("uniseries cap mismatch: " + std::to_string(cap_) + " vs " + std::to_string(other.cap_));
}

UniSeries& UniSeries::operator+=(const UniSeries& other)
{
    check_cap(other);
    for (int i = 0; i <= cap_; ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& other)
{
    check_cap(other);
    for (int i = 0; i <= cap_; ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

UniSeries& UniSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b)
{
    a.check_cap(b);
    UniSeries r(a.cap_);
    for (int i = 0; i <= a.cap_; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= a.cap_; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

UniSeries UniSeries::operator-() const
{
    UniSeries r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

bool UniSeries::operator==(const UniSeries& other) const
{
    return cap_ == other.cap_ && coeffs_ == other.coeffs_;
}

UniSeries uniseries_exp(const UniSeries& s)
{
    if (s[0] != 0)
        throw DomainError("uniseries_exp: constant term must be 0");
    UniSeries result = UniSeries::one(s.cap());
    UniSeries power = UniSeries::one(s.cap());
    for (int k = 1; k <= s.cap(); ++k) {
        power = power * s;
        power *= Rational(1, k);
        result += power;
    }
    return result;
}

UniSeries uniseries_log(const UniSeries& s)
{
    if (s[0] != 1)
        throw DomainError("uniseries_log: constant term must be 1");
    UniSeries u = s - UniSeries::one(s.cap());
    UniSeries result(s.cap());
    UniSeries power = UniSeries::one(s.cap());
    for (int k = 1; k <= s.cap(); ++k) {
        power = power * u;
        result += power * Rational(k % 2 ? 1 : -1, k);
    }
    return result;
}

UniSeries uniseries_inv(const UniSeries& s)
{
    if (s[0] == 0)
        throw DomainError("uniseries_inv: constant term must be nonzero");
    UniSeries r(s.cap());
    Rational c0 = 1 / s[0];
    r.set(0, c0);
    for (int n = 1; n <= s.cap(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += s[k] * r[n - k];
        r.set(n, -acc * c0);
    }
    return r;
}

} // namespace dsh
