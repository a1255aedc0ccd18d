#pragma once

// Integer-coefficient polynomial products. Small operands use the schoolbook
// convolution; large ones go through Kronecker substitution, which packs each
// operand into a single GMP integer so that one big multiplication (GMP picks
// Toom or FFT by size) replaces the quadratic number of coefficient products.

#include <gmp.h>
#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstring>
#include <vector>

namespace grlb::detail {

using IntegerCoefficients = std::vector<mpz_class>;

inline IntegerCoefficients multiply_schoolbook(const IntegerCoefficients& a,
                                               const IntegerCoefficients& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    IntegerCoefficients out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

inline std::size_t max_bit_length(const IntegerCoefficients& c) {
    std::size_t bits = 0;
    for (const auto& x : c) {
        bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    }
    return bits;
}

// Packs signed coefficients into sum c_k 2^(k * slot_limbs * GMP_NUMB_BITS).
inline mpz_class kronecker_pack(const IntegerCoefficients& c, std::size_t slot_limbs) {
    const auto total = static_cast<mp_size_t>(c.size() * slot_limbs);
    mpz_class positive;
    mpz_class negative;
    mp_limb_t* pos = mpz_limbs_write(positive.get_mpz_t(), total);
    mp_limb_t* neg = mpz_limbs_write(negative.get_mpz_t(), total);
    std::memset(pos, 0, sizeof(mp_limb_t) * static_cast<std::size_t>(total));
    std::memset(neg, 0, sizeof(mp_limb_t) * static_cast<std::size_t>(total));
    for (std::size_t k = 0; k < c.size(); ++k) {
        const int sign = sgn(c[k]);
        if (sign == 0) {
            continue;
        }
        mp_limb_t* dst = (sign > 0 ? pos : neg) + k * slot_limbs;
        const std::size_t n = mpz_size(c[k].get_mpz_t());
        std::memcpy(dst, mpz_limbs_read(c[k].get_mpz_t()), sizeof(mp_limb_t) * n);
    }
    mpz_limbs_finish(positive.get_mpz_t(), total);
    mpz_limbs_finish(negative.get_mpz_t(), total);
    return positive - negative;
}

// Inverse of kronecker_pack for `count` slots whose values satisfy
// |c_k| < 2^(slot_bits - 1).
inline IntegerCoefficients kronecker_unpack(const mpz_class& packed, std::size_t count,
                                            std::size_t slot_limbs) {
    const int sign = sgn(packed);
    const mpz_class magnitude = abs(packed);
    const mp_limb_t* limbs = mpz_limbs_read(magnitude.get_mpz_t());
    const std::size_t size = mpz_size(magnitude.get_mpz_t());

    const std::size_t slot_bits = slot_limbs * GMP_NUMB_BITS;
    mpz_class full;
    mpz_class half;
    mpz_setbit(full.get_mpz_t(), slot_bits);
    mpz_setbit(half.get_mpz_t(), slot_bits - 1);

    IntegerCoefficients out(count);
    unsigned long borrow = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t begin = k * slot_limbs;
        mpz_class value;
        if (begin < size) {
            const std::size_t n = std::min(slot_limbs, size - begin);
            mpz_t view;
            mpz_set(value.get_mpz_t(), mpz_roinit_n(view, limbs + begin, static_cast<mp_size_t>(n)));
        }
        value += borrow;
        if (value >= half) {
            value -= full;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[k] = sign < 0 ? mpz_class(-value) : value;
    }
    return out;
}

inline IntegerCoefficients multiply_kronecker(const IntegerCoefficients& a,
                                              const IntegerCoefficients& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    const std::size_t terms = std::min(a.size(), b.size());
    const std::size_t bound_bits =
        max_bit_length(a) + max_bit_length(b) + static_cast<std::size_t>(std::bit_width(terms)) + 2;
    const std::size_t slot_limbs = (bound_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

    const mpz_class product = kronecker_pack(a, slot_limbs) * kronecker_pack(b, slot_limbs);
    return kronecker_unpack(product, a.size() + b.size() - 1, slot_limbs);
}

inline IntegerCoefficients multiply_integer(const IntegerCoefficients& a,
                                            const IntegerCoefficients& b) {
    constexpr std::size_t schoolbook_max_terms = 24;
    if (std::min(a.size(), b.size()) <= schoolbook_max_terms) {
        return multiply_schoolbook(a, b);
    }
    return multiply_kronecker(a, b);
}

} // namespace grlb::detail
