#pragma once

#include "qsl3/rational.hpp"

#include <string>
#include <vector>

namespace qsl3 {

/// Data of the field Q(zeta_N): the cyclotomic polynomial and the reduced powers of x.
struct CycField {
    int N = 0;
    int phi = 0;
    std::vector<long> cyclo;              ///< coefficients of Phi_N, low degree first, monic
    std::vector<std::vector<long>> xpow;  ///< x^k mod Phi_N for 0 <= k < max(N, 2 phi - 1)
};

/// Interned field of order N (4 | N). Pointers are stable for the process lifetime.
const CycField* cyc_field(int N);

/// Coefficients of the N-th cyclotomic polynomial (recursive quotient of x^N - 1).
std::vector<long> cyclotomic_poly(int N);

/**
 * @brief Element of Q(zeta_N) stored as a polynomial in zeta_N of degree < phi(N).
 *
 * The representation is canonical, so equality is coefficientwise.
 */
class CycNum {
public:
    CycNum() = default;
    explicit CycNum(const CycField* f);
    CycNum(const CycField* f, const Rat& r);
    CycNum(const CycField* f, std::vector<Rat> coeffs);

    static CycNum zeta_pow(const CycField* f, long k);

    const CycField* field() const { return f_; }
    int order() const { return f_ ? f_->N : 0; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rat& r);
    /// this += a*b
    void add_mul(const CycNum& a, const CycNum& b);
    void sub_mul(const CycNum& a, const CycNum& b);

    CycNum inv() const;
    CycNum embed(const CycField* target) const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator*(CycNum a, const Rat& r) { return a *= r; }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same(const CycNum& o) const;

    const CycField* f_ = nullptr;
    std::vector<Rat> c_;
};

enum class CycOp { add, mul, inv };
CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);

/// The exact value of i^x in Q(zeta_N), i.e. zeta_N^(x N / 4); requires 4 den(x) | N.
CycNum i_power(const Rat& x, const CycField* f);
CycNum i_power(const Rat& x, int N);

/// Field order forced by QSL3_FIELD_ORDER, or 0 if unset.
int forced_field_order();

} // namespace qsl3
