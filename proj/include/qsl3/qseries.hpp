#pragma once

#include "qsl3/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsl3 {

/**
 * @brief Truncated series q^lead * (c0 + c1 q + c2 q^2 + ...).
 *
 * Exponents above the leading one are integral for every series built here, so the
 * step is 1. coeffs.size() is the truncation order: terms from q^(lead + order) on are unknown.
 */
struct QSeries {
    Rat lead;
    std::vector<mpz_class> coeffs;

    int order() const { return static_cast<int>(coeffs.size()); }
    /// Coefficient of q^(lead + n); zero beyond the known terms is not implied.
    const mpz_class& at(int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
    QSeries truncated(int order) const;
    std::string str(int shown = 8) const;

    friend QSeries operator*(const QSeries& a, const QSeries& b);
    /// Requires the leading exponents to differ by an integer.
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend bool operator==(const QSeries& a, const QSeries& b)
    {
        return a.lead == b.lead && a.coeffs == b.coeffs;
    }
};

/// Pi_{n>=1} (1 - q^n)^k truncated at the given order (leading exponent 0).
QSeries euler_power(int k, int order);
/// q^{-1/12} Pi (1 - q^n)^{-2}, i.e. 1 / eta(q)^2.
QSeries eta_inv_sq(int order);
/// 1 / eta(q)^(2k).
QSeries eta_inv_pow(int two_k, int order);

/// Central charge -8 of the affine vertex algebra at level -3/2.
Rat central_charge();

/// q^{|l|^2 / 3} / eta^2.
QSeries coset8_char(const Weight& l, int order);

/// z^l q^{-|l|^2 / 3} / eta^2.
struct FockChar {
    Weight z;
    QSeries q;
};
FockChar fock_char(const Weight& l, int order);

/// Conformal weight of I8_l (x) F_m read off the leading exponent of the product character.
Rat series_delta(const Weight& l, const Weight& m);

/// z-graded series, one q-series per z-weight.
using ZQSeries = std::map<Weight, QSeries>;

struct CharIdentityReport {
    int order = 0;
    /// Coset weight and Fock weight of each summand on the decomposed side.
    std::vector<std::pair<Weight, Weight>> decomposition;
    int compared = 0;            ///< z-weights compared
    std::vector<std::string> mismatches;
    bool match = true;
    std::string str() const;
};

/// The points mu + a alpha1 + b alpha2 with |a|, |b| <= radius.
std::vector<Weight> lattice_window(const Weight& mu, int radius);

/**
 * Compares the spectral flow sf(omega) of the relaxed character (1/eta^4) sum z^l, computed by
 * flowing z -> z q^omega with the prefactor z^{-3/2 omega} q^{-3/4 |omega|^2}, against the sum
 * over the window of coset8_char(l) * fock_char(l - 3/2 omega), coefficientwise to the given order.
 */
CharIdentityReport standard_char_identity(const Weight& mu, const Weight& omega, int order,
                                          const std::vector<Weight>& cutoff);

/// Leading terms q^{5/12}(1 + q^2 + 2q^3 + 5q^4) of the octuplet vacuum character, as printed.
QSeries octuplet_vacuum_fixture();

} // namespace qsl3
