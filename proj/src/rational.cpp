#include "qsl3/rational.hpp"

#include "qsl3/errors.hpp"

#include <cctype>

namespace qsl3 {

Rat make_rat(long num, long den)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

static mpz_class parse_int(std::string_view s, std::string_view whole)
{
    std::size_t k = 0;
    bool neg = false;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
        neg = s[k] == '-';
        ++k;
    }
    if (k == s.size())
        throw ParseError("empty integer in '" + std::string(whole) + "'");
    for (std::size_t j = k; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("bad digit at position " + std::to_string(j) + " in '" +
                             std::string(whole) + "'");
    mpz_class z(std::string(s.substr(k)));
    return neg ? mpz_class(-z) : z;
}

Rat parse_rat(std::string_view text)
{
    std::string buf;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            buf.push_back(c);
    // accept the unicode minus sign as well
    for (std::size_t p; (p = buf.find("\xE2\x88\x92")) != std::string::npos;)
        buf.replace(p, 3, "-");
    if (buf.empty())
        throw ParseError("empty rational");
    auto slash = buf.find('/');
    mpz_class num = parse_int(std::string_view(buf).substr(0, slash), text);
    mpz_class den = 1;
    if (slash != std::string::npos)
        den = parse_int(std::string_view(buf).substr(slash + 1), text);
    if (den == 0)
        throw DivisionByZero("rational with zero denominator: " + std::string(text));
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

bool is_odd(const Rat& r)
{
    return is_integer(r) && mpz_odd_p(r.get_num_mpz_t());
}

bool is_even(const Rat& r)
{
    return is_integer(r) && mpz_even_p(r.get_num_mpz_t());
}

mpz_class floor(const Rat& r)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rat mod(const Rat& r, const Rat& m)
{
    Rat q = r / m;
    Rat out = r - Rat(floor(q)) * m;
    out.canonicalize();
    return out;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b)
{
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace qsl3
