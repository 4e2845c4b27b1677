#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace fermatst {

// A character of G_m^n, stored as the tuple (a_0, ..., a_{n+1}) of residues
// in [0, m) with zero sum.  Length is n + 2 >= 3.
struct Character {
    long m = 0;
    std::vector<long> entries;

    Character() = default;
    Character(long m_, std::vector<long> raw);

    long length() const { return (long)entries.size(); }
    bool operator==(const Character&) const = default;
    auto operator<=>(const Character&) const = default;

    // Entrywise multiplication by a unit u mod m.
    Character unit_multiple(long u) const;

    std::string str() const;
};

Character gamma_char(long m, long i);
Character concat(const Character& a, const Character& b);

// Sum of [t * a_i]/m over the entries, [x] in [0, m-1].
mpq_class weight(const Character& a, long t);

// True iff every entry is nonzero and weight(a, t) is constant over units t.
bool is_tate_character(const Character& a);

struct CharacterOrbit {
    long m = 0;
    std::vector<Character> members;  // sorted
    const Character& canonical() const { return members.front(); }
};

CharacterOrbit orbit(const Character& a);

// A character given as a concatenation gamma_{i_1} * ... * gamma_{i_q},
// stored as the sorted multiset of indices i_r in [1, m-1].  This is the
// form every Tate class on a power of the Fermat curve carries.
struct GammaWord {
    long m = 0;
    std::vector<long> idx;  // sorted, each in [1, m-1]

    GammaWord() = default;
    GammaWord(long m_, std::vector<long> indices);

    long q() const { return (long)idx.size(); }
    Character character() const;
    GammaWord unit_multiple(long u) const;  // indices [u * i_r]
    GammaWord negated() const { return unit_multiple(-1); }

    bool operator==(const GammaWord&) const = default;
    auto operator<=>(const GammaWord&) const = default;

    std::string str() const;
};

// <alpha> = weight(alpha, 1); an integer for Tate words.
long weight_integer(const GammaWord& w);

bool is_tate_word(const GammaWord& w);

struct WordOrbit {
    long m = 0;
    std::vector<GammaWord> members;  // sorted, canonical first
    const GammaWord& canonical() const { return members.front(); }
    long index_of(const GammaWord& w) const;
};

WordOrbit word_orbit(const GammaWord& w);

}  // namespace fermatst
