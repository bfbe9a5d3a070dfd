#include "qsl3/errors.hpp"
#include "qsl3/weights.hpp"

#include <doctest.h>

#include <random>

using namespace qsl3;

namespace {

Rat random_rat(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Weight random_weight(std::mt19937& rng)
{
    return Weight(random_rat(rng), random_rat(rng));
}

bool odd(const Rat& x)
{
    return x.get_den() == 1 && x.get_num() % 2 != 0;
}

/// Root-coordinate Gram form: <a1,a1> = <a2,a2> = 2, <a1,a2> = -1.
Rat gram(const Weight& x, const Weight& y)
{
    // omega coordinates -> root coordinates via the inverse Cartan matrix
    Rat xa = (2 * x.c1 + x.c2) / 3, xb = (x.c1 + 2 * x.c2) / 3;
    Rat ya = (2 * y.c1 + y.c2) / 3, yb = (y.c1 + 2 * y.c2) / 3;
    return 2 * xa * ya - xa * yb - xb * ya + 2 * xb * yb;
}

} // namespace

TEST_CASE("weights parse and print")
{
    Weight w = parse_weight(" [ -1/2 , 3 ] ");
    CHECK(w == Weight(Rat(-1, 2), Rat(3)));
    CHECK(parse_weight(w.str()) == w);
    CHECK_THROWS_AS(parse_weight("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_weight("1,2]"), ParseError);
    CHECK_THROWS_AS(parse_weight("[1,2"), ParseError);
}

TEST_CASE("roots, fundamental weights and the form")
{
    using namespace wt;
    CHECK(alpha(1) == Weight(2, -1));
    CHECK(alpha(2) == Weight(-1, 2));
    CHECK(alpha(3) == rho());
    CHECK(omega(3) == Weight(-1, 1));
    CHECK(norm2(rho()) == 2);
    CHECK(norm2(alpha(1)) == 2);
    CHECK(killing(omega(1), alpha(1)) == 1);
    CHECK(killing(omega(1), alpha(2)) == 0);
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        Weight x = random_weight(rng), y = random_weight(rng);
        CHECK(killing(x, y) == gram(x, y));
        CHECK(norm2(x) == gram(x, x));
        auto rc = root_coords(x);
        CHECK(rc[0] * alpha(1) + rc[1] * alpha(2) == x);
    }
}

TEST_CASE("typicality classes follow the index parities")
{
    std::mt19937 rng(5);
    std::vector<Weight> ws;
    for (int t = 0; t < 300; ++t)
        ws.push_back(random_weight(rng));
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            ws.emplace_back(Rat(a, 2), Rat(b, 2));
    for (const auto& w : ws) {
        Rat l1 = w.c1 + 1, l2 = w.c2 + 1, l3 = w.c1 + w.c2 + 2;
        auto idx = indices(w);
        CHECK(idx[0] == l1);
        CHECK(idx[1] == l2);
        CHECK(idx[2] == l3);
        int nodd = odd(l1) + odd(l2) + odd(l3);
        TypicalityClass c = classify(w);
        CHECK(c.degree() == nodd);
        if (nodd == 0) {
            CHECK(c.tag == ClassTag::Typical);
            CHECK(irrep_dim(w) == 8);
        } else if (nodd == 1) {
            CHECK(c.tag == ClassTag::Atyp1);
            CHECK(odd(idx[c.i - 1]));
            CHECK(irrep_dim(w) == 4);
        } else if (odd(l3)) {
            CHECK(c.tag == ClassTag::Atyp2Root3Odd);
            CHECK(odd(idx[c.i - 1]));
            CHECK(irrep_dim(w) == 3);
        } else {
            CHECK(c.tag == ClassTag::Atyp2Root3Even);
            CHECK(irrep_dim(w) == 1);
        }
    }
}

TEST_CASE("the affine map sends simple roots to twice the fundamental weights")
{
    using namespace wt;
    CHECK(phi(alpha(1)) == Rat(2) * omega(1));
    CHECK(phi(alpha(2)) == Rat(2) * omega(3));
    CHECK(phi(alpha(3)) == Rat(2) * omega(2));
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
        Weight w = random_weight(rng);
        CHECK(phi_inv(phi(w)) == w);
        CHECK(phi(phi_inv(w)) == w);
    }
}

TEST_CASE("lattice membership")
{
    using namespace wt;
    CHECK(lattice_member(alpha(1), Lattice::Q));
    CHECK_FALSE(lattice_member(omega(1), Lattice::Q));
    CHECK(lattice_member(omega(1), Lattice::P));
    CHECK(lattice_member(Rat(1, 2) * alpha(2), Lattice::HalfQ));
    CHECK_FALSE(lattice_member(Rat(1, 2) * omega(1), Lattice::HalfQ));
    CHECK(lattice_member(Rat(3, 2) * omega(2), Lattice::ThreeHalvesP));
    CHECK(coset_member(Weight(Rat(-1, 2), Rat(-1, 2)) + alpha(1), Rat(-1, 2) * rho(), Lattice::Q));
    // 3 omega_i lies in Q
    CHECK(lattice_member(Rat(3) * omega(1), Lattice::Q));
}
