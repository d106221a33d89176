#pragma once

// Published values of S_{3,3}(n,k) and S_{2,1}(n,k) (= Lah numbers), as
// printed; a zero marks an empty cell.

#include <array>
#include <cstdint>

namespace genbell::reference {

/// S_{3,3}(n,k) for n = 1..5 (rows) and k = 3..10 (columns).
inline constexpr unsigned s33_first_k = 3;
inline constexpr std::array<std::array<std::uint64_t, 8>, 5> s33_table{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {6, 18, 9, 1, 0, 0, 0, 0},
    {36, 540, 1242, 882, 243, 27, 1, 0},
    {216, 13608, 94284, 186876, 149580, 56808, 11025, 1107},
    {1296, 330480, 6148872, 28245672, 49658508, 41392620, 18428400, 4691412},
}};

/// B_{3,3}(n) for n = 1..4.
inline constexpr std::array<std::uint64_t, 4> b33_prefix{1, 34, 2971, 513559};

/// S_{2,1}(n,k) for n = 1..9 (rows) and k = 1..9 (columns).
inline constexpr std::array<std::array<std::uint64_t, 9>, 9> s21_table{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {2, 1, 0, 0, 0, 0, 0, 0, 0},
    {6, 6, 1, 0, 0, 0, 0, 0, 0},
    {24, 36, 12, 1, 0, 0, 0, 0, 0},
    {120, 240, 120, 20, 1, 0, 0, 0, 0},
    {720, 1800, 1200, 300, 30, 1, 0, 0, 0},
    {5040, 15120, 12600, 4200, 630, 42, 1, 0, 0},
    {40320, 141120, 141120, 58800, 11760, 1176, 56, 1, 0},
    {362880, 1451520, 1693440, 846720, 211680, 28224, 2016, 72, 1},
}};

/// The eighteen 4-colourings of 2K_3 with vertices a,b,c (first triangle) and
/// d,e,f (second triangle).
inline constexpr std::array<char const*, 18> two_triangles_4_colourings{
    "a|d|be|cf", "a|d|bf|ce", "a|e|bd|cf", "a|e|bf|cd", "a|f|bd|ce", "a|f|be|cd",
    "ad|b|e|cf", "ad|b|f|ce", "ae|b|d|cf", "ae|b|f|cd", "af|b|d|ce", "af|b|e|cd",
    "ad|be|c|f", "ad|bf|c|e", "ae|bd|c|f", "ae|bf|c|d", "af|bd|c|e", "af|be|c|d",
};

}  // namespace genbell::reference
