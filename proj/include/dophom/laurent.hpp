#pragma once

#include <map>
#include <string>

#include "dophom/rational.hpp"

namespace dophom {

/// Laurent polynomial in one variable z over the rationals, stored as a
/// finite support map exponent -> coefficient with no zero entries.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exp, Rational coeff) {
        LaurentPoly p;
        p.add_term(exp, std::move(coeff));
        return p;
    }
    static LaurentPoly constant(Rational c) { return monomial(0, std::move(c)); }
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    int min_exp() const { return coeffs_.begin()->first; }    // pre: nonzero
    int max_exp() const { return coeffs_.rbegin()->first; }   // pre: nonzero

    void add_term(int exp, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& s) const {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c * s);
        return r;
    }

    bool operator==(const LaurentPoly&) const = default;

    /// Termwise d/dz.
    LaurentPoly derivative() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_)
            if (e != 0) r.coeffs_.emplace(e - 1, c * e);
        return r;
    }

    LaurentPoly derivative(unsigned n) const {
        LaurentPoly r = *this;
        for (unsigned i = 0; i < n; ++i) r = r.derivative();
        return r;
    }

    /// Coefficient of z^-1.
    Rational residue() const { return coeff(-1); }

    const std::map<int, Rational>& terms() const { return coeffs_; }

    /// "1/2*z^2 - 3*z^-1", exponent-descending; "0" for the zero polynomial.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (e == 0) {
                out += dophom::to_string(mag);
            } else {
                if (mag != 1) out += dophom::to_string(mag) + "*";
                out += "z";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, Rational> coeffs_;
};

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly laurent_derive(const LaurentPoly& a) { return a.derivative(); }
inline Rational residue(const LaurentPoly& a) { return a.residue(); }

}  // namespace dophom
