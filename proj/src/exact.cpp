#include "holdercover/exact.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include <mpfr.h>

#include "holdercover/errors.hpp"

namespace holdercover {

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
    ~Mpfr() { mpfr_clear(value_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

private:
    mpfr_t value_;
};

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// [lo, hi] enclosing offset + scale * log_4(n) at the given precision.
void enclose(const Rational& offset, const Rational& scale, std::uint64_t n, mpfr_prec_t bits,
             Mpfr& lo, Mpfr& hi) {
    Mpfr log_lo(bits), log_hi(bits);
    mpfr_set_ui(log_lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_set_ui(log_hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_log2(log_lo.get(), log_lo.get(), MPFR_RNDD);
    mpfr_log2(log_hi.get(), log_hi.get(), MPFR_RNDU);
    mpfr_div_2ui(log_lo.get(), log_lo.get(), 1, MPFR_RNDD);
    mpfr_div_2ui(log_hi.get(), log_hi.get(), 1, MPFR_RNDU);
    if (sgn(scale) >= 0) {
        mpfr_mul_q(lo.get(), log_lo.get(), scale.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(hi.get(), log_hi.get(), scale.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(lo.get(), log_hi.get(), scale.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(hi.get(), log_lo.get(), scale.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_add_q(lo.get(), lo.get(), offset.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(hi.get(), hi.get(), offset.get_mpq_t(), MPFR_RNDU);
}

BigInt mpfr_ceil_to_z(const Mpfr& x) {
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDU);
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ValidationError("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string num(text.substr(0, slash));
        std::string den(text.substr(slash + 1));
        auto is_int = [](const std::string& s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i >= s.size()) return false;
            for (; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            return true;
        };
        if (!is_int(num) || !is_int(den)) fail();
        if (num[0] == '+') num.erase(0, 1);
        if (den[0] == '+') den.erase(0, 1);
        const BigInt n(num, 10), q(den, 10);
        if (q == 0) fail();
        Rational r{n, q};
        r.canonicalize();
        return r;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    std::string digits;
    std::size_t fraction_digits = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++fraction_digits;
        } else {
            fail();
        }
    }
    if (digits.empty()) fail();
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fraction_digits);
    Rational r(negative ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

BigInt ceil(const Rational& value) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

BigInt floor(const Rational& value) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

Rational abs(const Rational& value) { return sgn(value) < 0 ? Rational(-value) : value; }

long double pow4_neg(const Rational& e) {
    Mpfr x(256);
    mpfr_set_q(x.get(), e.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_si(x.get(), x.get(), -2, MPFR_RNDN);
    mpfr_exp2(x.get(), x.get(), MPFR_RNDN);
    return mpfr_get_ld(x.get(), MPFR_RNDN);
}

long double pow4_neg_difference(const Rational& a, const Rational& b) {
    Mpfr x(256), y(256);
    mpfr_set_q(x.get(), a.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(y.get(), b.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_si(x.get(), x.get(), -2, MPFR_RNDN);
    mpfr_mul_si(y.get(), y.get(), -2, MPFR_RNDN);
    mpfr_exp2(x.get(), x.get(), MPFR_RNDN);
    mpfr_exp2(y.get(), y.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), y.get(), MPFR_RNDN);
    return mpfr_get_ld(x.get(), MPFR_RNDN);
}

long double to_long_double(const Rational& value) {
    Mpfr x(128);
    mpfr_set_q(x.get(), value.get_mpq_t(), MPFR_RNDN);
    return mpfr_get_ld(x.get(), MPFR_RNDN);
}

Rational from_long_double(long double value) {
    if (!std::isfinite(value)) throw ValidationError("non-finite value has no rational form");
    Mpfr x(64);
    mpfr_set_ld(x.get(), value, MPFR_RNDN);
    mpz_class mantissa;
    mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), x.get());
    Rational r(mantissa);
    if (exponent >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
    }
    return r;
}

bool log4_is_rational(std::uint64_t n) { return is_power_of_two(n); }

Rational log4_exact(std::uint64_t n) {
    if (!is_power_of_two(n)) throw ValidationError("log_4(n) is irrational for n=" + std::to_string(n));
    unsigned bits = 0;
    while ((n >> bits) != 1) ++bits;
    Rational r(bits, 2);
    r.canonicalize();
    return r;
}

BigInt ceil_offset_log4(const Rational& offset, const Rational& scale, std::uint64_t n, int max_bits) {
    if (n == 0) throw ValidationError("log_4(0) is undefined");
    if (sgn(scale) == 0 || is_power_of_two(n)) {
        Rational exact = sgn(scale) == 0 ? offset : Rational(offset + scale * log4_exact(n));
        return ceil(exact);
    }
    for (mpfr_prec_t bits = 64; bits <= max_bits; bits *= 2) {
        Mpfr lo(bits), hi(bits);
        enclose(offset, scale, n, bits, lo, hi);
        BigInt c_lo = mpfr_ceil_to_z(lo);
        BigInt c_hi = mpfr_ceil_to_z(hi);
        if (c_lo == c_hi) return c_lo;
    }
    throw PrecisionError("precision exhausted");
}

int sign_offset_log4(const Rational& offset, const Rational& scale, std::uint64_t n, int max_bits) {
    if (n == 0) throw ValidationError("log_4(0) is undefined");
    if (sgn(scale) == 0 || is_power_of_two(n)) {
        Rational exact = sgn(scale) == 0 ? offset : Rational(offset + scale * log4_exact(n));
        return sgn(exact);
    }
    for (mpfr_prec_t bits = 64; bits <= max_bits; bits *= 2) {
        Mpfr lo(bits), hi(bits);
        enclose(offset, scale, n, bits, lo, hi);
        if (mpfr_sgn(lo.get()) > 0) return 1;
        if (mpfr_sgn(hi.get()) < 0) return -1;
    }
    throw PrecisionError("precision exhausted");
}

Rational approx_offset_log4(const Rational& offset, const Rational& scale, std::uint64_t n, int bits) {
    if (sgn(scale) == 0 || is_power_of_two(n)) {
        return sgn(scale) == 0 ? offset : Rational(offset + scale * log4_exact(n));
    }
    Mpfr lo(bits), hi(bits), mid(bits + 1);
    enclose(offset, scale, n, bits, lo, hi);
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    mpz_class mantissa;
    mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), mid.get());
    Rational r(mantissa);
    if (exponent >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
    }
    return r;
}

}  // namespace holdercover
