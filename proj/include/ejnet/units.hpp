#pragma once

#include <array>

#include "ejnet/ej_int.hpp"
#include "ejnet/errors.hpp"

namespace ejnet {

// The six lattice units, i.e. the neighbour directions within one dimension.
enum class Unit : int {
    PlusOne = 0,
    PlusRho = 1,
    PlusRhoSq = 2,
    MinusOne = 3,
    MinusRho = 4,
    MinusRhoSq = 5,
};

constexpr int kUnitCount = 6;

constexpr std::array<Unit, 6> kAllUnits = {
    Unit::PlusOne,  Unit::PlusRho,  Unit::PlusRhoSq,
    Unit::MinusOne, Unit::MinusRho, Unit::MinusRhoSq,
};

inline EjInt unit_value(Unit u) {
    switch (u) {
        case Unit::PlusOne:    return {1, 0};
        case Unit::PlusRho:    return {0, 1};
        case Unit::PlusRhoSq:  return {-1, 1};
        case Unit::MinusOne:   return {-1, 0};
        case Unit::MinusRho:   return {0, -1};
        case Unit::MinusRhoSq: return {1, -1};
    }
    throw ConfigError("bad unit");
}

inline Unit unit_negate(Unit u) { return static_cast<Unit>((static_cast<int>(u) + 3) % 6); }

inline const char* unit_name(Unit u) {
    switch (u) {
        case Unit::PlusOne:    return "+1";
        case Unit::PlusRho:    return "+rho";
        case Unit::PlusRhoSq:  return "+rho2";
        case Unit::MinusOne:   return "-1";
        case Unit::MinusRho:   return "-rho";
        case Unit::MinusRhoSq: return "-rho2";
    }
    return "?";
}

// Sector j (1..6) grows along its major axis rho^j and fills inward along
// the minor direction rho^(j-1). Sector 6 is the +1 axis, sector 1 the +rho
// axis, and so on counterclockwise.
inline Unit sector_major(int sector) {
    switch (sector) {
        case 1: return Unit::PlusRho;
        case 2: return Unit::PlusRhoSq;
        case 3: return Unit::MinusOne;
        case 4: return Unit::MinusRho;
        case 5: return Unit::MinusRhoSq;
        case 6: return Unit::PlusOne;
    }
    throw ConfigError("sector out of range");
}

inline Unit sector_minor(int sector) {
    switch (sector) {
        case 1: return Unit::PlusOne;
        case 2: return Unit::PlusRho;
        case 3: return Unit::PlusRhoSq;
        case 4: return Unit::MinusOne;
        case 5: return Unit::MinusRho;
        case 6: return Unit::MinusRhoSq;
    }
    throw ConfigError("sector out of range");
}

// One directed port of a node: dimension (1-based, n is the highest) plus
// the unit stepped within it.
struct LinkLabel {
    int dim = 1;
    Unit unit = Unit::PlusOne;

    friend bool operator==(const LinkLabel&, const LinkLabel&) = default;
};

enum class Algorithm { Previous, Improved };

inline const char* algorithm_name(Algorithm a) {
    return a == Algorithm::Previous ? "previous" : "improved";
}

// All-to-all runs three phases, each driving two adjacent sectors so that a
// node sends on three ports and receives on the opposite three.
inline std::array<int, 2> phase_sectors(int phase) {
    switch (phase) {
        case 1: return {6, 1};
        case 2: return {2, 3};
        case 3: return {4, 5};
    }
    throw ConfigError("phase out of range");
}

inline std::array<Unit, 3> phase_send_units(int phase) {
    auto [sa, sb] = phase_sectors(phase);
    // major+minor of both sectors; the pair shares one unit, leaving three.
    std::array<Unit, 3> out = {sector_major(sa), sector_major(sb), sector_minor(sa)};
    return out;
}

inline std::array<Unit, 3> phase_receive_units(int phase) {
    auto s = phase_send_units(phase);
    return {unit_negate(s[0]), unit_negate(s[1]), unit_negate(s[2])};
}

} // namespace ejnet
