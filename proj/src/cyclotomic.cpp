#include "qsl3/cyclotomic.hpp"

#include "qsl3/errors.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qsl3 {

std::vector<long> cyclotomic_poly(int N)
{
    if (N < 1)
        throw FieldMismatch("cyclotomic order must be positive");
    // start from x^N - 1 and divide out Phi_d for every proper divisor d
    std::vector<long> p(N + 1, 0);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d)
            continue;
        std::vector<long> q = cyclotomic_poly(d);
        int dq = static_cast<int>(q.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        std::vector<long> quot(dp - dq + 1, 0);
        for (int k = dp; k >= dq; --k) {
            long c = p[k];
            quot[k - dq] = c;
            if (c == 0)
                continue;
            for (int t = 0; t <= dq; ++t)
                p[k - dq + t] -= c * q[t];
        }
        p = std::move(quot);
    }
    return p;
}

static std::unique_ptr<CycField> build_field(int N)
{
    auto f = std::make_unique<CycField>();
    f->N = N;
    f->cyclo = cyclotomic_poly(N);
    f->phi = static_cast<int>(f->cyclo.size()) - 1;
    int top = std::max(N, 2 * f->phi - 1);
    f->xpow.assign(top, std::vector<long>(f->phi, 0));
    f->xpow[0][0] = 1;
    for (int k = 1; k < top; ++k) {
        const auto& prev = f->xpow[k - 1];
        auto& cur = f->xpow[k];
        long carry = prev[f->phi - 1];
        for (int t = f->phi - 1; t >= 1; --t)
            cur[t] = prev[t - 1];
        cur[0] = 0;
        if (carry != 0)
            for (int t = 0; t < f->phi; ++t)
                cur[t] -= carry * f->cyclo[t];
    }
    return f;
}

const CycField* cyc_field(int N)
{
    if (N <= 0 || N % 4 != 0)
        throw FieldMismatch("field order must be a positive multiple of 4, got " +
                            std::to_string(N));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycField>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(N);
    if (it == table.end())
        it = table.emplace(N, build_field(N)).first;
    return it->second.get();
}

int forced_field_order()
{
    const char* env = std::getenv("QSL3_FIELD_ORDER");
    if (!env || !*env)
        return 0;
    int N = std::atoi(env);
    if (N <= 0 || N % 4 != 0)
        throw FieldMismatch(std::string("QSL3_FIELD_ORDER must be a positive multiple of 4: ") +
                            env);
    return N;
}

CycNum::CycNum(const CycField* f) : f_(f), c_(f->phi) {}

CycNum::CycNum(const CycField* f, const Rat& r) : f_(f), c_(f->phi)
{
    c_[0] = r;
}

CycNum::CycNum(const CycField* f, std::vector<Rat> coeffs) : f_(f), c_(f->phi)
{
    // reduce an arbitrary-length polynomial in zeta
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) == 0)
            continue;
        const auto& xp = f->xpow[k % f->N];
        for (int t = 0; t < f->phi; ++t)
            if (xp[t])
                c_[t] += coeffs[k] * xp[t];
    }
}

CycNum CycNum::zeta_pow(const CycField* f, long k)
{
    long r = ((k % f->N) + f->N) % f->N;
    CycNum out(f);
    const auto& xp = f->xpow[r];
    for (int t = 0; t < f->phi; ++t)
        out.c_[t] = xp[t];
    return out;
}

bool CycNum::is_zero() const
{
    for (const auto& c : c_)
        if (sgn(c) != 0)
            return false;
    return true;
}

bool CycNum::is_rational() const
{
    for (std::size_t t = 1; t < c_.size(); ++t)
        if (sgn(c_[t]) != 0)
            return false;
    return true;
}

bool CycNum::is_one() const
{
    return is_rational() && !c_.empty() && c_[0] == 1;
}

void CycNum::check_same(const CycNum& o) const
{
    if (f_ != o.f_)
        throw FieldMismatch("operands live in Q(zeta_" + std::to_string(order()) +
                            ") and Q(zeta_" + std::to_string(o.order()) + ")");
}

CycNum CycNum::operator-() const
{
    CycNum out = *this;
    for (auto& c : out.c_)
        c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o)
{
    check_same(o);
    for (std::size_t t = 0; t < c_.size(); ++t)
        if (sgn(o.c_[t]) != 0)
            c_[t] += o.c_[t];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o)
{
    check_same(o);
    for (std::size_t t = 0; t < c_.size(); ++t)
        if (sgn(o.c_[t]) != 0)
            c_[t] -= o.c_[t];
    return *this;
}

CycNum& CycNum::operator*=(const Rat& r)
{
    if (sgn(r) == 0) {
        for (auto& c : c_)
            c = 0;
        return *this;
    }
    for (auto& c : c_)
        if (sgn(c) != 0)
            c *= r;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o)
{
    *this = *this * o;
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b)
{
    a.check_same(b);
    if (b.is_rational())
        return CycNum(a) *= b.c_[0];
    if (a.is_rational())
        return CycNum(b) *= a.c_[0];
    const CycField* f = a.f_;
    const int n = f->phi;
    std::vector<Rat> prod(2 * n - 1);
    for (int s = 0; s < n; ++s) {
        if (sgn(a.c_[s]) == 0)
            continue;
        for (int t = 0; t < n; ++t)
            if (sgn(b.c_[t]) != 0)
                prod[s + t] += a.c_[s] * b.c_[t];
    }
    CycNum out(f);
    for (int t = 0; t < n; ++t)
        out.c_[t] = prod[t];
    for (int k = n; k < 2 * n - 1; ++k) {
        if (sgn(prod[k]) == 0)
            continue;
        const auto& xp = f->xpow[k];
        for (int t = 0; t < n; ++t)
            if (xp[t])
                out.c_[t] += prod[k] * xp[t];
    }
    return out;
}

void CycNum::add_mul(const CycNum& a, const CycNum& b)
{
    if (a.is_zero() || b.is_zero())
        return;
    *this += a * b;
}

void CycNum::sub_mul(const CycNum& a, const CycNum& b)
{
    if (a.is_zero() || b.is_zero())
        return;
    *this -= a * b;
}

CycNum CycNum::inv() const
{
    if (!f_ || is_zero())
        throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    if (is_rational())
        return CycNum(f_, Rat(1) / c_[0]);
    // Solve (multiplication by this) * x = 1 over Q.
    const int n = f_->phi;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int col = 0; col < n; ++col) {
        CycNum basis = zeta_pow(f_, col);
        CycNum img = *this * basis;
        for (int row = 0; row < n; ++row)
            m[row][col] = img.c_[row];
    }
    m[0][n] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && sgn(m[piv][col]) == 0)
            ++piv;
        if (piv == n)
            throw InternalInconsistency("multiplication matrix singular in a field");
        std::swap(m[piv], m[col]);
        Rat p = m[col][col];
        for (int k = col; k <= n; ++k)
            m[col][k] /= p;
        for (int row = 0; row < n; ++row) {
            if (row == col || sgn(m[row][col]) == 0)
                continue;
            Rat fct = m[row][col];
            for (int k = col; k <= n; ++k)
                m[row][k] -= fct * m[col][k];
        }
    }
    CycNum out(f_);
    for (int row = 0; row < n; ++row)
        out.c_[row] = m[row][n];
    return out;
}

CycNum CycNum::embed(const CycField* target) const
{
    if (target == f_)
        return *this;
    if (target->N % f_->N != 0)
        throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(f_->N) + ") into Q(zeta_" +
                            std::to_string(target->N) + ")");
    const int step = target->N / f_->N;
    CycNum out(target);
    for (int t = 0; t < f_->phi; ++t)
        if (sgn(c_[t]) != 0)
            out += zeta_pow(target, static_cast<long>(t) * step) * CycNum(target, c_[t]);
    return out;
}

bool operator==(const CycNum& a, const CycNum& b)
{
    a.check_same(b);
    return a.c_ == b.c_;
}

std::string CycNum::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t < c_.size(); ++t) {
        const Rat& c = c_[t];
        if (sgn(c) == 0)
            continue;
        Rat a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (t == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << "z" << order();
        if (t > 1)
            os << "^" << t;
    }
    if (first)
        os << "0";
    return os.str();
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op)
{
    switch (op) {
    case CycOp::add:
        return a + b;
    case CycOp::mul:
        return a * b;
    case CycOp::inv:
        return a.inv();
    }
    return a;
}

CycNum i_power(const Rat& x, const CycField* f)
{
    Rat e = x * f->N / 4;
    e.canonicalize();
    if (!is_integer(e))
        throw FieldMismatch("i^(" + x.get_str() + ") is not in Q(zeta_" + std::to_string(f->N) +
                            ")");
    mpz_class r = e.get_num();
    mpz_class n = f->N;
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return CycNum::zeta_pow(f, m.get_si());
}

CycNum i_power(const Rat& x, int N)
{
    return i_power(x, cyc_field(N));
}

} // namespace qsl3
