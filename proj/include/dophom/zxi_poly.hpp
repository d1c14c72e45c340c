#pragma once

#include <compare>
#include <map>
#include <string>

#include "dophom/laurent.hpp"
#include "dophom/rational.hpp"

namespace dophom {

/// Function on T*S^1: Laurent in the base variable z, polynomial (degree >= 0)
/// in the fiber variable xi.
class ZXiPoly {
public:
    struct Key {
        int z;
        int xi;  // always >= 0
        auto operator<=>(const Key&) const = default;
    };

    ZXiPoly() = default;

    static ZXiPoly monomial(int z_exp, int xi_exp, Rational c) {
        ZXiPoly p;
        p.add_term(z_exp, xi_exp, std::move(c));
        return p;
    }
    static ZXiPoly from_laurent(const LaurentPoly& f) {
        ZXiPoly p;
        for (const auto& [e, c] : f.terms()) p.add_term(e, 0, c);
        return p;
    }
    static ZXiPoly one() { return monomial(0, 0, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const ZXiPoly&) const = default;

    void add_term(int z_exp, int xi_exp, const Rational& c) {
        if (c == 0) return;
        Key k{z_exp, xi_exp};
        auto [it, inserted] = coeffs_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    ZXiPoly& operator+=(const ZXiPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.z, k.xi, c);
        return *this;
    }
    ZXiPoly& operator-=(const ZXiPoly& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.z, k.xi, -c);
        return *this;
    }
    friend ZXiPoly operator+(ZXiPoly a, const ZXiPoly& b) { return a += b; }
    friend ZXiPoly operator-(ZXiPoly a, const ZXiPoly& b) { return a -= b; }
    friend ZXiPoly operator-(const ZXiPoly& a) {
        ZXiPoly r;
        for (const auto& [k, c] : a.coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }
    friend ZXiPoly operator*(const ZXiPoly& a, const ZXiPoly& b) {
        ZXiPoly r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_)
                r.add_term(ka.z + kb.z, ka.xi + kb.xi, ca * cb);
        return r;
    }

    ZXiPoly scaled(const Rational& s) const {
        ZXiPoly r;
        if (s == 0) return r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, c * s);
        return r;
    }

    ZXiPoly derive_z() const {
        ZXiPoly r;
        for (const auto& [k, c] : coeffs_)
            if (k.z != 0) r.coeffs_.emplace(Key{k.z - 1, k.xi}, c * k.z);
        return r;
    }
    ZXiPoly derive_xi() const {
        ZXiPoly r;
        for (const auto& [k, c] : coeffs_)
            if (k.xi != 0) r.coeffs_.emplace(Key{k.z, k.xi - 1}, c * k.xi);
        return r;
    }
    ZXiPoly shift_z(int d) const {
        ZXiPoly r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(Key{k.z + d, k.xi}, c);
        return r;
    }

    /// Substitutes xi = 0, leaving a Laurent polynomial in z.
    LaurentPoly at_xi_zero() const {
        LaurentPoly f;
        for (const auto& [k, c] : coeffs_)
            if (k.xi == 0) f.add_term(k.z, c);
        return f;
    }

    const std::map<Key, Rational>& terms() const { return coeffs_; }

    /// "2*z^2*xi - 1/3*xi^2"; "0" when zero. Used by the form printer.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string vars;
            if (k.z != 0) {
                vars += "z";
                if (k.z != 1) vars += "^" + std::to_string(k.z);
            }
            if (k.xi != 0) {
                if (!vars.empty()) vars += "*";
                vars += "xi";
                if (k.xi != 1) vars += "^" + std::to_string(k.xi);
            }
            if (vars.empty()) {
                out += dophom::to_string(mag);
            } else {
                if (mag != 1) out += dophom::to_string(mag) + "*";
                out += vars;
            }
        }
        return out;
    }

private:
    std::map<Key, Rational> coeffs_;
};

}  // namespace dophom
