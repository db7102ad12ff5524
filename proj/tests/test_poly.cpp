#include <doctest.h>

#include "krylovium/poly.hpp"
#include "krylovium/rng.hpp"

using namespace krylovium;

namespace {

Poly random_poly(std::int64_t max_deg, const PrimeModulus& mod, CounterRng& rng) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(rng.next_u64() % (max_deg + 1)) + 1);
    for (auto& v : c) v = rng.next_mod(mod);
    return Poly(std::move(c), mod);
}

}  // namespace

TEST_CASE("normalization and degree sentinel") {
    PrimeModulus p(97);
    Poly z({0, 0, 0}, p);
    CHECK(z.is_zero());
    CHECK(z.degree() == kNegInfDegree);
    CHECK(Poly({5}, p).degree() == 0);
    CHECK(Poly({0, 0, 1}, p).degree() == 2);
}

TEST_CASE("product and division examples") {
    PrimeModulus p(97);
    Poly one_plus_x({1, 1}, p);
    CHECK(one_plus_x * one_plus_x == Poly({1, 2, 1}, p));

    Poly x3({0, 0, 0, 1}, p), xm1({96, 1}, p);
    auto [q, r] = x3.divrem(xm1);
    CHECK(q == Poly({1, 1, 1}, p));
    CHECK(r == Poly({1}, p));

    CHECK(Poly::gcd(Poly({96, 0, 1}, p), xm1) == xm1.make_monic());
    CHECK_THROWS_AS(x3.divrem(Poly::zero(p)), DivisionByZeroError);
}

TEST_CASE("gcd of two zeros is zero") {
    PrimeModulus p(97);
    CHECK(Poly::gcd(Poly::zero(p), Poly::zero(p)).is_zero());
}

TEST_CASE("powmod examples") {
    PrimeModulus p(97);
    Poly x2 = Poly::monomial(1, 2, p);
    CHECK(Poly::powmod_x(BigNat(5), x2).is_zero());

    Poly x2m1({96, 0, 1}, p);
    CHECK(Poly::powmod_x(BigNat(3), x2m1) == Poly({0, 1}, p));

    CHECK_THROWS_AS(Poly::powmod_x(BigNat(3), Poly({2, 0, 1}, p).scaled(2)), std::invalid_argument);
    CHECK_THROWS_AS(Poly::powmod_x(BigNat(3), Poly({5}, p)), std::invalid_argument);
}

TEST_CASE("powmod agrees with naive repeated multiplication") {
    PrimeModulus p(97);
    CounterRng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = random_poly(6, p, rng);
        if (f.degree() < 1) continue;
        f = f.make_monic();
        std::uint64_t k = rng.next_u64() % 65;
        Poly naive = Poly::one(p);
        Poly x = Poly::monomial(1, 1, p);
        for (std::uint64_t i = 0; i < k; ++i) naive = (naive * x).divrem(f).second;
        CHECK(Poly::powmod_x(BigNat(k), f) == naive);
    }
}

TEST_CASE("truncate and reverse") {
    PrimeModulus p(97);
    Poly f({1, 1, 1}, p);
    CHECK(f.truncated(2) == Poly({1, 1}, p));
    CHECK(Poly({1, 2}, p).reversed(1) == Poly({2, 1}, p));
    CHECK_THROWS_AS(f.reversed(1), std::invalid_argument);

    CounterRng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Poly g = random_poly(8, p, rng);
        if (g.is_zero() || g.coeff(0) == 0) continue;
        std::int64_t d = g.degree();
        CHECK(g.reversed(d).reversed(d) == g);  // involution when g(0) != 0
    }
}

TEST_CASE("ring axioms and divrem identity on random polynomials") {
    for (std::uint64_t pv : {2ull, 97ull, 4179340454199820289ull}) {
        PrimeModulus p(pv);
        CounterRng rng(pv);
        for (int trial = 0; trial < 25; ++trial) {
            Poly a = random_poly(10, p, rng), b = random_poly(10, p, rng), c = random_poly(10, p, rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * (b * c) == (a * b) * c);
            if (!b.is_zero()) {
                auto [q, r] = a.divrem(b);
                CHECK(q * b + r == a);
                CHECK(r.degree() < b.degree());
            }
            if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("karatsuba and ntt paths match schoolbook") {
    PrimeModulus p(4179340454199820289ull);
    CounterRng rng(3);
    std::vector<std::uint64_t> ca(700), cb(650);
    for (auto& v : ca) v = rng.next_mod(p);
    for (auto& v : cb) v = rng.next_mod(p);
    Poly a(ca, p), b(cb, p);

    std::size_t saved_kara = poly_karatsuba_threshold();
    bool saved_ntt = poly_ntt_enabled();
    poly_karatsuba_threshold() = 100000;  // schoolbook only
    poly_ntt_enabled() = false;
    Poly schoolbook = a * b;
    poly_karatsuba_threshold() = saved_kara;  // Karatsuba, no NTT
    Poly karatsuba = a * b;
    poly_ntt_enabled() = true;  // NTT path (length 1350 over an NTT prime)
    Poly ntt = a * b;
    CHECK(karatsuba == schoolbook);
    CHECK(ntt == schoolbook);

    // small prime: no NTT support at this length, Karatsuba must handle it
    PrimeModulus q(97);
    std::vector<std::uint64_t> da(300), db(410);
    for (auto& v : da) v = rng.next_mod(q);
    for (auto& v : db) v = rng.next_mod(q);
    Poly f(da, q), g(db, q);
    poly_ntt_enabled() = false;
    poly_karatsuba_threshold() = 100000;
    Poly slow = f * g;
    poly_karatsuba_threshold() = saved_kara;
    poly_ntt_enabled() = saved_ntt;
    CHECK(f * g == slow);
}
