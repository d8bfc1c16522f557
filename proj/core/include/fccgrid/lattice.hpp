// Face-centered cubic grid in doubled integer coordinates.
//
// A grid vertex (i, j, k) -- with i and j half-integers on odd layers -- is
// stored as (x, y, z) = (2i, 2j, k), so x and y always share the parity of z.
// This keeps every coordinate an exact integer.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fcc {

struct ParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Site {
    int x = 0;
    int y = 0;
    int z = 0;

    friend constexpr bool operator==(const Site&, const Site&) = default;

    // Canonical order: (z, y, x) lexicographic.
    friend constexpr std::strong_ordering operator<=>(const Site& a, const Site& b) {
        if (auto c = a.z <=> b.z; c != 0) return c;
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

struct Displacement {
    int dx = 0;
    int dy = 0;
    int dz = 0;

    friend constexpr bool operator==(const Displacement&, const Displacement&) = default;

    friend constexpr std::strong_ordering operator<=>(const Displacement& a, const Displacement& b) {
        if (auto c = a.dz <=> b.dz; c != 0) return c;
        if (auto c = a.dy <=> b.dy; c != 0) return c;
        return a.dx <=> b.dx;
    }
};

constexpr bool same_parity(int a, int b) { return ((a ^ b) & 1) == 0; }

constexpr bool is_valid_site(int x, int y, int z) {
    return same_parity(x, z) && same_parity(y, z);
}

constexpr bool is_valid_site(const Site& s) { return is_valid_site(s.x, s.y, s.z); }

// A displacement maps valid sites to valid sites iff dx and dy share dz's parity.
constexpr bool is_valid_displacement(const Displacement& d) {
    return same_parity(d.dx, d.dz) && same_parity(d.dy, d.dz);
}

// Checked constructor; throws ParityError for coordinates off the grid.
Site make_site(int x, int y, int z);

constexpr Displacement delta(const Site& from, const Site& to) {
    return Displacement{to.x - from.x, to.y - from.y, to.z - from.z};
}

constexpr Site translate(const Site& s, const Displacement& d) {
    return Site{s.x + d.dx, s.y + d.dy, s.z + d.dz};
}

// Positive part, p+(t) = max(t, 0).
constexpr int p_plus(int t) { return t > 0 ? t : 0; }

// Exact graph distance in the grid:
//   p+((|dx| - |dz|)/2) + p+((|dy| - |dz|)/2) + |dz|
// (the halved quantities are integers by the parity invariant).
constexpr int distance(const Site& u, const Site& v) {
    const int dx = u.x > v.x ? u.x - v.x : v.x - u.x;
    const int dy = u.y > v.y ? u.y - v.y : v.y - u.y;
    const int dz = u.z > v.z ? u.z - v.z : v.z - u.z;
    return p_plus((dx - dz) / 2) + p_plus((dy - dz) / 2) + dz;
}

constexpr bool is_adjacent(const Site& u, const Site& v) {
    const int dx = u.x > v.x ? u.x - v.x : v.x - u.x;
    const int dy = u.y > v.y ? u.y - v.y : v.y - u.y;
    const int dz = u.z > v.z ? u.z - v.z : v.z - u.z;
    if (dz == 0) return (dx == 2 && dy == 0) || (dx == 0 && dy == 2);
    return dz == 1 && dx == 1 && dy == 1;
}

// The 12 unit displacements: 4 in-layer, 4 to the layer above, 4 below.
constexpr std::array<Displacement, 12> kNeighborSteps = {{
    {2, 0, 0}, {-2, 0, 0}, {0, 2, 0}, {0, -2, 0},
    {1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1},
    {1, 1, -1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, -1},
}};

constexpr std::array<Site, 12> neighbors(const Site& s) {
    std::array<Site, 12> out{};
    for (std::size_t i = 0; i < kNeighborSteps.size(); ++i) out[i] = translate(s, kNeighborSteps[i]);
    return out;
}

struct SiteHash {
    std::size_t operator()(const Site& s) const {
        std::uint64_t h = static_cast<std::uint32_t>(s.x);
        h = h * 0x9E3779B97F4A7C15ull + static_cast<std::uint32_t>(s.y);
        h = h * 0x9E3779B97F4A7C15ull + static_cast<std::uint32_t>(s.z);
        h ^= h >> 29;
        h *= 0xBF58476D1CE4E5B9ull;
        h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }
};

std::string to_string(const Site& s);

}  // namespace fcc
