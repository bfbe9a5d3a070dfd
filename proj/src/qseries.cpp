#include "qsl3/qseries.hpp"

#include "qsl3/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qsl3 {

QSeries QSeries::truncated(int n) const
{
    QSeries out = *this;
    if (n < order())
        out.coeffs.resize(static_cast<std::size_t>(n));
    return out;
}

std::string QSeries::str(int shown) const
{
    std::ostringstream os;
    os << "q^{" << to_string(lead) << "} * (";
    bool first = true;
    int n = std::min(shown, order());
    for (int k = 0; k < n; ++k) {
        const mpz_class& c = coeffs[k];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        mpz_class a = abs(c);
        if (k == 0 || a != 1)
            os << a.get_str();
        if (k == 1)
            os << "q";
        else if (k > 1)
            os << "q^" << k;
    }
    if (first)
        os << "0";
    os << " + O(q^" << order() << "))";
    return os.str();
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out;
    out.lead = a.lead + b.lead;
    const int n = std::min(a.order(), b.order());
    out.coeffs.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b)
{
    const Rat gap = b.lead - a.lead;
    if (!is_integer(gap))
        throw UnsupportedCase("adding q-series with non-integral exponent gap " + to_string(gap));
    if (gap < 0)
        return b + a;
    const int shift = static_cast<int>(gap.get_num().get_si());
    QSeries out;
    out.lead = a.lead;
    const int n = std::min(a.order(), b.order() + shift);
    out.coeffs.assign(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        out.coeffs[k] = a.coeffs[k];
        if (k >= shift)
            out.coeffs[k] += b.coeffs[k - shift];
    }
    return out;
}

QSeries euler_power(int k, int order)
{
    if (order < 1)
        throw UnsupportedCase("q-series order must be positive");
    QSeries s;
    s.lead = 0;
    s.coeffs.assign(static_cast<std::size_t>(order), 0);
    s.coeffs[0] = 1;
    const int reps = k < 0 ? -k : k;
    for (int n = 1; n < order; ++n)
        for (int r = 0; r < reps; ++r) {
            if (k > 0) {
                for (int m = order - 1; m >= n; --m)
                    s.coeffs[m] -= s.coeffs[m - n];
            } else {
                for (int m = n; m < order; ++m)
                    s.coeffs[m] += s.coeffs[m - n];
            }
        }
    return s;
}

QSeries eta_inv_pow(int two_k, int order)
{
    QSeries s = euler_power(-two_k, order);
    s.lead = Rat(-two_k, 24);
    s.lead.canonicalize();
    return s;
}

QSeries eta_inv_sq(int order)
{
    return eta_inv_pow(2, order);
}

Rat central_charge()
{
    return Rat(-8);
}

QSeries coset8_char(const Weight& l, int order)
{
    QSeries s = eta_inv_sq(order);
    s.lead += norm2(l) / 3;
    return s;
}

FockChar fock_char(const Weight& l, int order)
{
    FockChar f{l, eta_inv_sq(order)};
    f.q.lead -= norm2(l) / 3;
    return f;
}

Rat series_delta(const Weight& l, const Weight& m)
{
    QSeries prod = coset8_char(l, 1) * fock_char(m, 1).q;
    return prod.lead + central_charge() / 24;
}

std::vector<Weight> lattice_window(const Weight& mu, int radius)
{
    std::vector<Weight> out;
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            out.push_back(mu + Rat(a) * wt::alpha(1) + Rat(b) * wt::alpha(2));
    return out;
}

std::string CharIdentityReport::str() const
{
    std::ostringstream os;
    os << (match ? "equal" : "differ") << " on " << compared << " z-weights to order " << order
       << "\n";
    for (const auto& m : mismatches)
        os << "  " << m << "\n";
    return os.str();
}

CharIdentityReport standard_char_identity(const Weight& mu, const Weight& omega, int order,
                                          const std::vector<Weight>& cutoff)
{
    CharIdentityReport rep;
    rep.order = order;
    const Weight shift = Rat(3, 2) * omega;

    ZQSeries flowed, decomposed;
    const QSeries relaxed = eta_inv_pow(4, order);
    for (const auto& l : cutoff) {
        if (!lattice_member(l - mu, Lattice::Q))
            throw UnsupportedCase("window point " + l.str() + " is not in " + mu.str() + " + Q");
        QSeries f = relaxed;
        f.lead += killing(l, omega) - Rat(3, 4) * norm2(omega);
        flowed.emplace(l - shift, f);

        FockChar fock = fock_char(l - shift, order);
        decomposed.emplace(fock.z, coset8_char(l, order) * fock.q);
        rep.decomposition.emplace_back(l, l - shift);
    }

    for (const auto& [z, s] : flowed) {
        ++rep.compared;
        auto it = decomposed.find(z);
        if (it == decomposed.end()) {
            rep.mismatches.push_back("z^" + z.str() + " missing from the decomposition");
        } else if (!(it->second == s)) {
            rep.mismatches.push_back("z^" + z.str() + ": " + s.str() + " vs " + it->second.str());
        }
    }
    rep.match = rep.mismatches.empty() && flowed.size() == decomposed.size();
    return rep;
}

QSeries octuplet_vacuum_fixture()
{
    return QSeries{Rat(5, 12), {1, 0, 1, 2, 5}};
}

} // namespace qsl3
