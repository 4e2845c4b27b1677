#include "fermatst/characters.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fermatst/modarith.hpp"

namespace fermatst {

Character::Character(long m_, std::vector<long> raw) : m(m_) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("Character: modulus must be odd >= 3");
    if (raw.size() < 3) throw std::invalid_argument("Character: length must be >= 3");
    entries.reserve(raw.size());
    long sum = 0;
    for (long x : raw) {
        long r = mod_lo(x, m);
        entries.push_back(r);
        sum = (sum + r) % m;
    }
    if (sum != 0) throw std::invalid_argument("Character: entries must sum to 0 mod m");
}

Character Character::unit_multiple(long u) const {
    if (!is_unit_mod(u, m)) throw std::invalid_argument("Character::unit_multiple: not a unit");
    std::vector<long> e(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) e[i] = mod_lo(entries[i] * u, m);
    Character c;
    c.m = m;
    c.entries = std::move(e);
    return c;
}

std::string Character::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
    os << ") mod " << m;
    return os.str();
}

Character gamma_char(long m, long i) {
    if (mod_lo(i, m) == 0) throw std::invalid_argument("gamma_char: index divisible by m");
    return Character(m, {i, i, -2 * i});
}

Character concat(const Character& a, const Character& b) {
    if (a.m != b.m) throw std::invalid_argument("concat: modulus mismatch");
    std::vector<long> e = a.entries;
    e.insert(e.end(), b.entries.begin(), b.entries.end());
    Character c;
    c.m = a.m;
    c.entries = std::move(e);
    return c;
}

mpq_class weight(const Character& a, long t) {
    if (!is_unit_mod(t, a.m)) throw std::invalid_argument("weight: t is not a unit");
    long num = 0;
    for (long x : a.entries) num += mod_lo(t * x, a.m);
    mpq_class w(num, a.m);
    w.canonicalize();
    return w;
}

bool is_tate_character(const Character& a) {
    for (long x : a.entries)
        if (x == 0) return false;
    mpq_class w1 = weight(a, 1);
    for (long u : units_mod(a.m))
        if (weight(a, u) != w1) return false;
    return true;
}

CharacterOrbit orbit(const Character& a) {
    std::set<Character> seen;
    for (long u : units_mod(a.m)) seen.insert(a.unit_multiple(u));
    CharacterOrbit o;
    o.m = a.m;
    o.members.assign(seen.begin(), seen.end());
    return o;
}

GammaWord::GammaWord(long m_, std::vector<long> indices) : m(m_), idx(std::move(indices)) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("GammaWord: modulus must be odd >= 3");
    for (long& i : idx) {
        i = mod_lo(i, m);
        if (i == 0) throw std::invalid_argument("GammaWord: index divisible by m");
    }
    std::sort(idx.begin(), idx.end());
}

Character GammaWord::character() const {
    if (idx.empty()) throw std::logic_error("GammaWord::character: empty word");
    Character c = gamma_char(m, idx[0]);
    for (size_t r = 1; r < idx.size(); ++r) c = concat(c, gamma_char(m, idx[r]));
    return c;
}

GammaWord GammaWord::unit_multiple(long u) const {
    std::vector<long> e(idx.size());
    for (size_t r = 0; r < idx.size(); ++r) e[r] = mod_lo(idx[r] * u, m);
    return GammaWord(m, std::move(e));
}

std::string GammaWord::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "} mod " << m;
    return os.str();
}

long weight_integer(const GammaWord& w) {
    mpq_class q = weight(w.character(), 1);
    if (q.get_den() != 1) throw std::invalid_argument("weight_integer: non-integral weight");
    return (long)q.get_num().get_si();
}

bool is_tate_word(const GammaWord& w) { return is_tate_character(w.character()); }

WordOrbit word_orbit(const GammaWord& w) {
    std::set<GammaWord> seen;
    for (long u : units_mod(w.m)) seen.insert(w.unit_multiple(u));
    WordOrbit o;
    o.m = w.m;
    o.members.assign(seen.begin(), seen.end());
    return o;
}

long WordOrbit::index_of(const GammaWord& w) const {
    auto it = std::lower_bound(members.begin(), members.end(), w);
    if (it == members.end() || !(*it == w)) throw std::invalid_argument("WordOrbit::index_of: not a member");
    return (long)(it - members.begin());
}

}  // namespace fermatst
