#pragma once

#include <gmpxx.h>

#include <string>

namespace valkit {

// 2x2 integer matrix [[a,b],[c,d]] with arbitrary-precision entries. Word
// matrices for periods of length ~180 have entries of several hundred bits,
// so fixed-width integers are not an option.
struct Mat2 {
    mpz_class a{1}, b{0}, c{0}, d{1};

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    mpz_class det() const { return a * d - b * c; }
    mpz_class trace() const { return a + d; }

    std::string str() const {
        return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
               d.get_str() + "]]";
    }
};

inline Mat2 mat_identity() { return {1, 0, 0, 1}; }
inline Mat2 mat_T(long n = 1) { return {1, n, 0, 1}; }  // upper shear
inline Mat2 mat_V(long n = 1) { return {1, 0, n, 1}; }  // lower shear
inline Mat2 mat_Phi() { return {1, 1, 1, 0}; }          // x -> 1 + 1/x
inline Mat2 mat_Psi() { return {2, 1, 1, 0}; }          // x -> 2 + 1/x
inline Mat2 mat_swap() { return {0, 1, 1, 0}; }         // x -> 1/x, det -1

}  // namespace valkit
