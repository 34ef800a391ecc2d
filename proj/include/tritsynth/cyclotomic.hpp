#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tritsynth/bigint.hpp"

namespace tritsynth {

/**
 * Element of Z_3, written {0, 1, 2}.
 */
class Parity {
public:
    constexpr Parity() = default;
    constexpr explicit Parity(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr int value() const { return v_; }

    constexpr Parity operator+(Parity o) const { return Parity(v_ + o.v_); }
    constexpr Parity operator-(Parity o) const { return Parity(v_ + 3 - o.v_); }
    constexpr Parity operator*(Parity o) const { return Parity(v_ * o.v_); }
    constexpr bool operator==(const Parity&) const = default;

private:
    std::uint8_t v_ = 0;
};

/**
 * Element of Z[xi], xi = exp(2*pi*i/9), stored as integer coefficients of
 * 1, xi, ..., xi^5. Products are reduced by the minimal polynomial of xi,
 * xi^6 = -1 - xi^3. The cube root of unity is w = xi^3.
 */
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(std::array<Int, 6> c) : c_(std::move(c)) {}

    static CycInt integer(const Int& n) { return CycInt({n, 0, 0, 0, 0, 0}); }
    static CycInt integer(long n) { return integer(Int(n)); }
    static CycInt xi() { return CycInt({0, 1, 0, 0, 0, 0}); }
    static CycInt omega() { return CycInt({0, 0, 0, 1, 0, 0}); }
    static CycInt chi() { return CycInt({1, -1, 0, 0, 0, 0}); } // 1 - xi
    static CycInt xi_pow(int j);                                // j mod 9

    const Int& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    bool is_zero() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator*(const Int& k) const;
    bool operator==(const CycInt& o) const { return c_ == o.c_; }

    // Ring automorphism induced by complex conjugation, xi -> xi^8.
    CycInt conj() const;

    // Multiplication by the unit xi: a coefficient rotation.
    CycInt times_xi() const;

    // Coefficient sum mod 3; ring homomorphism onto Z_3 with kernel (chi).
    Parity parity() const;

    // Exact division by chi = 1 - xi. Empty iff parity != 0.
    std::optional<CycInt> chi_divide() const;

    // Number of times chi divides this element. Requires non-zero input.
    unsigned chi_valuation() const;

    bool divisible_by_3() const;
    CycInt divided_by_3() const;

    // Canonical text form "a0 + a1*x + a2*x^2 + a3*x^3 + a4*x^4 + a5*x^5".
    std::string str() const;
    static std::optional<CycInt> parse(const std::string& text);

private:
    std::array<Int, 6> c_{};
};

/**
 * Element of Z[xi, 1/3]: num / 3^three_exp, kept normalized so that either
 * three_exp == 0 or num is not divisible by 3.
 */
class RingElem {
public:
    RingElem() = default;
    RingElem(CycInt num, unsigned three_exp);

    static RingElem integer(long n) { return RingElem(CycInt::integer(n), 0); }
    static RingElem of(CycInt c) { return RingElem(std::move(c), 0); }

    const CycInt& num() const { return num_; }
    unsigned three_exp() const { return three_exp_; }
    bool is_zero() const { return num_.is_zero(); }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    bool operator==(const RingElem& o) const;

    RingElem conj() const { return RingElem(num_.conj(), three_exp_); }

    // Least k >= 0 with chi^k * this in Z[xi]; d(0) = 0 by convention.
    unsigned denom_exp_chi() const;

    // Canonical text form "(a0 + ... + a5*x^5)/3^n".
    std::string str() const;
    static std::optional<RingElem> parse(const std::string& text);

private:
    CycInt num_;
    unsigned three_exp_ = 0;
};

} // namespace tritsynth
