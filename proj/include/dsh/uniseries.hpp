#pragma once

#include "rational.hpp"

#include <vector>

namespace dsh {

// Univariate power series truncated at degree cap.
class UniSeries {
public:
    explicit UniSeries(int cap);
    UniSeries(int cap, std::vector<Rational> coefficients);

    static UniSeries one(int cap);
    static UniSeries variable(int cap);

    int cap() const { return cap_; }
    const Rational& operator[](int degree) const { return coeffs_[degree]; }
    Rational coefficient(int degree) const;
    void set(int degree, const Rational& value);

    UniSeries& operator+=(const UniSeries& other);
    UniSeries& operator-=(const UniSeries& other);
    UniSeries& operator*=(const Rational& scalar);
    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
    friend UniSeries operator*(UniSeries a, const Rational& s) { return a *= s; }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    UniSeries operator-() const;

    bool operator==(const UniSeries& other) const;

private:
    void check_cap(const UniSeries& other) const;

    int cap_;
    std::vector<Rational> coeffs_;
};

UniSeries uniseries_exp(const UniSeries& s);
UniSeries uniseries_log(const UniSeries& s);
UniSeries uniseries_inv(const UniSeries& s);

} // namespace dsh
