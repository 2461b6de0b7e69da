#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "illum/errors.hpp"

namespace illum {

/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline int sign(const Rational& r) { return r.sign(); }

/// Parses "p" or "p/q" (decimal, optional leading minus on p). Rejects q = 0
/// and anything else, including whitespace and a leading plus.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    const std::string_view num_digits = !num.empty() && num.front() == '-' ? num.substr(1) : num;
    if (!digits(num_digits) || (slash != std::string_view::npos && !digits(den))) {
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    const Integer p{std::string(num)};
    const Integer q = den.empty() ? Integer(1) : Integer{std::string(den)};
    if (q == 0) throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
    return Rational(p, q);
}

/// "p" for integers, otherwise "p/q" in lowest terms.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Dense rational vector of fixed dimension.
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t dim) : entries_(dim) {}
    explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

    static QVector unit(std::size_t dim, std::size_t axis) {
        QVector v(dim);
        v[axis] = 1;
        return v;
    }

    std::size_t dim() const { return entries_.size(); }
    const std::vector<Rational>& entries() const { return entries_; }

    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r == 0; });
    }

    QVector& operator+=(const QVector& o) {
        for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o[i];
        return *this;
    }
    QVector& operator-=(const QVector& o) {
        for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o[i];
        return *this;
    }
    QVector& operator*=(const Rational& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
    friend QVector operator-(QVector a) { return a *= Rational(-1); }

    friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
    /// Plain lexicographic order on entries.
    friend bool operator<(const QVector& a, const QVector& b) {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                            b.entries_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const QVector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << to_string(v[i]);
        return os << ')';
    }

private:
    std::vector<Rational> entries_;
};

/// Row-major rational matrix; rows share one dimension.
using QMatrix = std::vector<QVector>;

inline Rational dot(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) throw InputError("dimension mismatch in inner product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

/// Canonical normal order used for every tie-break in the library:
/// lexicographically descending, so e1 precedes e2 precedes -e2 precedes -e1.
inline bool canonical_before(const QVector& a, const QVector& b) { return b < a; }

inline void canonical_sort(std::vector<QVector>& vs) { std::sort(vs.begin(), vs.end(), canonical_before); }

inline std::string to_string(const QVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace illum
