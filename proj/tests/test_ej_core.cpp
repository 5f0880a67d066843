#include <doctest.h>

#include <cstdint>
#include <set>

#include "ejnet/ej_int.hpp"
#include "ejnet/rational.hpp"
#include "ejnet/units.hpp"
#include "oracles.hpp"

using namespace ejnet;

TEST_CASE("rho powers follow rho^2 = -1 + rho") {
    const EjInt rho{0, 1};
    CHECK(rho * rho == EjInt{-1, 1});
    CHECK(rho * rho * rho == EjInt{-1, 0});
    CHECK(rho * rho * rho * rho == EjInt{0, -1});
    CHECK(rho * rho * rho * rho * rho == EjInt{1, -1});
    CHECK(rho * rho * rho * rho * rho * rho == EjInt{1, 0});
}

TEST_CASE("conjugate clears to the norm") {
    for (EjInt z : {EjInt{3, 4}, EjInt{2, 3}, EjInt{-5, 2}, EjInt{0, 7}, EjInt{1, -9}}) {
        CHECK(z * ej_conj(z) == EjInt{ej_norm(z), 0});
        CHECK(ej_norm(z) == z.x * z.x + z.x * z.y + z.y * z.y);
    }
    CHECK(ej_norm(EjInt{3, 4}) == 37);
    CHECK(ej_norm(EjInt{2, 3}) == 19);
    CHECK(ej_norm(EjInt{1, 2}) == 7);
}

TEST_CASE("free weight closed form equals the three-term minimum") {
    for (int64_t x = -6; x <= 6; ++x)
        for (int64_t y = -6; y <= 6; ++y) {
            EjInt z{x, y};
            CHECK(free_weight(z) == oracle::lattice_weight(z));
        }
    CHECK(free_weight(EjInt{3, 0}) == 3);
    CHECK(free_weight(EjInt{2, -1}) == 2);  // 1 - rho^2
    CHECK(free_weight(EjInt{0, 0}) == 0);
    for (Unit u : kAllUnits) CHECK(free_weight(unit_value(u)) == 1);
}

TEST_CASE("unit tables are consistent") {
    for (Unit u : kAllUnits) {
        CHECK(unit_value(unit_negate(u)) == -unit_value(u));
        CHECK(ej_norm(unit_value(u)) == 1);
    }
    // sector j spans rho^(j-1) (minor) and rho^j (major)
    const EjInt rho{0, 1};
    EjInt power{1, 0};
    for (int j = 1; j <= 6; ++j) {
        EjInt next = power * rho;
        CHECK(unit_value(sector_minor(j)) == power);
        CHECK(unit_value(sector_major(j)) == next);
        power = next;
    }
}

TEST_CASE("phase unit sets never mix a direction with its opposite") {
    for (int p = 1; p <= 3; ++p) {
        auto snd = phase_send_units(p);
        for (Unit a : snd)
            for (Unit b : snd) CHECK(a != unit_negate(b));
        auto rcv = phase_receive_units(p);
        for (size_t i = 0; i < snd.size(); ++i) CHECK(rcv[i] == unit_negate(snd[i]));
    }
    // the three phases jointly use every unit as a send direction
    std::set<int> used;
    for (int p = 1; p <= 3; ++p)
        for (Unit u : phase_send_units(p)) used.insert(static_cast<int>(u));
    CHECK(used.size() == 6);
}

TEST_CASE("checked arithmetic refuses to wrap") {
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), ArithmeticOverflow);
    CHECK(checked_add(2, 3) == 5);
}

TEST_CASE("value rendering") {
    CHECK(to_string(EjInt{0, 0}) == "0");
    CHECK(to_string(EjInt{3, 4}) == "3+4rho");
    CHECK(to_string(EjInt{0, -3}) == "-3rho");
    CHECK(to_string(EjInt{2, -1}) == "2-rho");
    CHECK(to_string(EjInt{0, 1}) == "rho");
    CHECK(to_string(EjInt{-1, 0}) == "-1");
}

TEST_CASE("rationals reduce and compare exactly") {
    CHECK(Rational(417888, 50652) == Rational(11608, 1407));
    CHECK(Rational(344988, 50652) == Rational(9583, 1407));
    CHECK(Rational(344988, 50652) < Rational(417888, 50652));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(6, 2).str() == "3");
    CHECK(Rational(11, 3).is_integer() == false);
    CHECK_THROWS_AS(Rational(1, 0), ConfigError);
}
