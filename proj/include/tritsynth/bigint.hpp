#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace tritsynth {

/**
 * Arbitrary-precision integer with an inline machine-word fast path.
 * Coefficient growth is unbounded in the denominator exponent, so
 * fixed-width integers alone are not an option; almost all values in
 * practice are tiny, so heap-backed GMP values are kept only after an
 * overflow-checked promotion.
 */
class Int {
public:
    Int() = default;
    Int(int v) : v_(v) {}
    Int(long v) : v_(v) {}
    explicit Int(const std::string& decimal) {
        mpz_class z(decimal);
        if (z.fits_slong_p())
            v_ = z.get_si();
        else
            big_ = new mpz_class(std::move(z));
    }

    Int(const Int& o) : v_(o.v_), big_(o.big_ ? new mpz_class(*o.big_) : nullptr) {}
    Int(Int&& o) noexcept : v_(o.v_), big_(std::exchange(o.big_, nullptr)) {}
    Int& operator=(const Int& o) {
        if (this != &o) {
            delete big_;
            v_ = o.v_;
            big_ = o.big_ ? new mpz_class(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        if (this != &o) {
            delete big_;
            v_ = o.v_;
            big_ = std::exchange(o.big_, nullptr);
        }
        return *this;
    }
    ~Int() { delete big_; }

    bool is_small() const { return big_ == nullptr; }
    long small() const { return v_; } // valid only when is_small()

    bool is_zero() const { return big_ ? mpz_sgn(big_->get_mpz_t()) == 0 : v_ == 0; }

    friend Int operator+(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long r;
            if (!__builtin_add_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return from_mpz(a.to_mpz() + b.to_mpz());
    }
    friend Int operator-(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long r;
            if (!__builtin_sub_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return from_mpz(a.to_mpz() - b.to_mpz());
    }
    friend Int operator*(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) {
            long r;
            if (!__builtin_mul_overflow(a.v_, b.v_, &r)) return Int(r);
        }
        return from_mpz(a.to_mpz() * b.to_mpz());
    }
    Int operator-() const {
        if (is_small()) {
            long r;
            if (!__builtin_sub_overflow(0L, v_, &r)) return Int(r);
        }
        return from_mpz(-to_mpz());
    }
    Int& operator+=(const Int& o) { return *this = *this + o; }
    Int& operator-=(const Int& o) { return *this = *this - o; }

    friend bool operator==(const Int& a, const Int& b) {
        if (a.is_small() && b.is_small()) return a.v_ == b.v_;
        return a.to_mpz() == b.to_mpz();
    }
    friend bool operator==(const Int& a, long b) { return a == Int(b); }

    // remainder in {0,1,2}
    unsigned mod3() const {
        if (is_small()) return static_cast<unsigned>(((v_ % 3) + 3) % 3);
        return static_cast<unsigned>(mpz_fdiv_ui(big_->get_mpz_t(), 3));
    }
    bool divisible_by_3() const { return mod3() == 0; }
    Int divided_by_3() const { // exact
        if (is_small()) return Int(v_ / 3);
        return from_mpz(*big_ / 3);
    }

    static Int pow3(unsigned e) {
        if (e < 39) { // 3^39 < 2^62
            long r = 1;
            for (unsigned k = 0; k < e; ++k) r *= 3;
            return Int(r);
        }
        mpz_class z;
        mpz_ui_pow_ui(z.get_mpz_t(), 3, e);
        return from_mpz(std::move(z));
    }

    std::string str() const {
        return big_ ? big_->get_str() : std::to_string(v_);
    }

    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(v_); }

private:
    static Int from_mpz(mpz_class z) {
        Int r;
        if (z.fits_slong_p())
            r.v_ = z.get_si();
        else
            r.big_ = new mpz_class(std::move(z));
        return r;
    }

    long v_ = 0;
    mpz_class* big_ = nullptr;
};

} // namespace tritsynth
