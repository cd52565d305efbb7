#include "cutkit/cyclotomic.hpp"
#include "cutkit/numtheory.hpp"

#include <gtest/gtest.h>

using namespace cutkit;

TEST(NumTheory, Basics)
{
    EXPECT_EQ(gcd(12, 18), 6u);
    EXPECT_EQ(lcm(4, 6), 12u);
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(mod_pow(3, 6, 7), 1u);
    EXPECT_EQ(units_mod(15).size(), 8u);
    EXPECT_EQ(prime_divisors(420), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_EQ(multiplicative_order(3, 7), 6u);
    EXPECT_EQ(squarefree_part(20), 5u);
}

TEST(Cyclotomic, ReductionAndGalois)
{
    // 1 + z + z^2 = 0 in Q(z_3)
    const Cyclotomic z = Cyclotomic::zeta_power(3, 1);
    const Cyclotomic sum = Cyclotomic::integer(3, 1) + z + z * z;
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(z.galois(2), z * z);
    EXPECT_EQ(z.conjugate(), z * z);
    // Gaussian period z + z^2 + z^4 of conductor 7 is not rational
    Cyclotomic eta = Cyclotomic::zeta_power(7, 1) + Cyclotomic::zeta_power(7, 2) + Cyclotomic::zeta_power(7, 4);
    EXPECT_FALSE(eta.is_rational());
    EXPECT_EQ((eta + eta.conjugate()).integer_value(), -1);
}
