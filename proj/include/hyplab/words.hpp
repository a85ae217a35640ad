#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyplab/errors.hpp"

namespace hyplab {

// One generator or inverse generator of a free group of rank <= 26.
// Codes are packed so that the fixed letter order a < a^-1 < b < b^-1 < ...
// is just integer order on the code.
struct Letter {
    std::uint8_t code = 0; // 2 * generator_index + (sign < 0 ? 1 : 0)

    constexpr int index() const { return code >> 1; }
    constexpr int sign() const { return (code & 1u) ? -1 : +1; }
    constexpr Letter inverse() const { return Letter{static_cast<std::uint8_t>(code ^ 1u)}; }

    friend constexpr auto operator<=>(Letter a, Letter b) = default;
};

constexpr int kMaxRank = 26;

constexpr Letter make_letter(int index, int sign) {
    return Letter{static_cast<std::uint8_t>(2 * index + (sign < 0 ? 1 : 0))};
}

// A freely reduced word; the empty word is the identity. Immutable after
// construction, so words can be shared freely between trial workers.
class Word {
public:
    Word() = default;

    // Normal form of an arbitrary letter sequence.
    static Word reduced(std::span<const Letter> raw) {
        std::vector<Letter> out;
        out.reserve(raw.size());
        for (Letter l : raw) {
            if (!out.empty() && out.back() == l.inverse())
                out.pop_back();
            else
                out.push_back(l);
        }
        return Word(std::move(out), trusted_tag{});
    }

    // Adopts a vector the caller guarantees is already reduced (hot paths:
    // walkers maintain reduction incrementally).
    static Word from_reduced(std::vector<Letter> letters) {
        return Word(std::move(letters), trusted_tag{});
    }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::span<const Letter> span() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    struct trusted_tag {};
    Word(std::vector<Letter> v, trusted_tag) : letters_(std::move(v)) {}
    std::vector<Letter> letters_;
};

inline Word reduce(std::span<const Letter> raw) { return Word::reduced(raw); }

inline Word invert(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(it->inverse());
    return Word::from_reduced(std::move(out));
}

// Appends one letter to a reduced letter stack, cancelling if possible.
inline void push_reduced(std::vector<Letter>& stack, Letter l) {
    if (!stack.empty() && stack.back() == l.inverse())
        stack.pop_back();
    else
        stack.push_back(l);
}

// Reduced product uv; |uv| = |u| + |v| - 2 * (cancellation length).
inline Word concat(const Word& u, const Word& v) {
    std::vector<Letter> out(u.letters());
    out.reserve(u.size() + v.size());
    for (Letter l : v)
        push_reduced(out, l);
    return Word::from_reduced(std::move(out));
}

// Longest common prefix of two reduced words.
inline std::size_t common_prefix(const Word& u, const Word& v) {
    std::size_t m = std::min(u.size(), v.size());
    std::size_t i = 0;
    while (i < m && u[i] == v[i])
        ++i;
    return i;
}

namespace detail {

// Booth's least-rotation algorithm; index of the lexicographically least
// rotation of w, in O(n).
inline std::size_t least_rotation(std::span<const Letter> w) {
    const std::size_t n = w.size();
    if (n == 0)
        return 0;
    auto at = [&](std::size_t i) { return w[i % n].code; };
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && at(j) != at(k + i + 1)) {
            if (at(j) < at(k + i + 1))
                k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && at(j) != at(k)) {
            if (at(j) < at(k))
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

// Smallest period of a letter sequence via the classical failure function.
inline std::size_t smallest_period(std::span<const Letter> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && w[i] != w[k])
            k = fail[k];
        if (w[i] == w[k])
            ++k;
        fail[i + 1] = k;
    }
    return n - fail[n];
}

} // namespace detail

// A conjugacy class: cyclically reduced core plus its canonical
// (lexicographically least) rotation, so equal classes compare equal.
class CyclicWord {
public:
    CyclicWord() = default;

    // Requires a cyclically reduced core.
    explicit CyclicWord(Word core) : core_(std::move(core)) {
        if (core_.size() >= 2 && core_[0] == core_[core_.size() - 1].inverse())
            throw std::invalid_argument("CyclicWord: core is not cyclically reduced");
        canonical_rotation_ = detail::least_rotation(core_.span());
    }

    const Word& core() const { return core_; }
    std::size_t size() const { return core_.size(); }
    std::size_t canonical_rotation_index() const { return canonical_rotation_; }

    // Core rotated to its canonical representative.
    Word canonical() const {
        std::vector<Letter> out;
        out.reserve(core_.size());
        const std::size_t n = core_.size();
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(core_[(canonical_rotation_ + i) % n]);
        return Word::from_reduced(std::move(out));
    }

    friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
        return a.canonical() == b.canonical();
    }

private:
    Word core_;
    std::size_t canonical_rotation_ = 0;
};

struct CyclicReduction {
    Word conjugator; // w = conjugator * core * conjugator^-1, all reduced
    CyclicWord core;
};

inline CyclicReduction cyclic_reduce(const Word& w) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    std::vector<Letter> conj(w.letters().begin(), w.letters().begin() + lo);
    std::vector<Letter> core(w.letters().begin() + lo, w.letters().begin() + hi);
    return CyclicReduction{Word::from_reduced(std::move(conj)),
                           CyclicWord(Word::from_reduced(std::move(core)))};
}

struct PrimitiveRoot {
    Word root; // w = root^exponent as group elements
    int exponent = 1;
};

// Maximal-root decomposition through string periodicity of the cyclic core.
inline PrimitiveRoot primitive_root(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("identity has no root");
    CyclicReduction cr = cyclic_reduce(w);
    const Word& core = cr.core.core();
    const std::size_t n = core.size();
    const std::size_t p = detail::smallest_period(core.span());
    int exponent = 1;
    std::size_t root_len = n;
    if (p < n && n % p == 0) {
        exponent = static_cast<int>(n / p);
        root_len = p;
    }
    std::vector<Letter> root_core(core.letters().begin(), core.letters().begin() + root_len);
    Word root = concat(concat(cr.conjugator, Word::from_reduced(std::move(root_core))),
                       invert(cr.conjugator));
    return PrimitiveRoot{std::move(root), exponent};
}

inline bool is_primitive(const Word& w) { return primitive_root(w).exponent == 1; }

// Conjugacy in a free group is equality of canonical cyclic words.
inline bool are_conjugate(const Word& u, const Word& v) {
    return cyclic_reduce(u).core == cyclic_reduce(v).core;
}

inline bool conjugate_to_inverse(const Word& w) { return are_conjugate(w, invert(w)); }

// ---- text format: a..z generators, A..Z their inverses, "e" the identity.

inline char letter_to_char(Letter l) {
    return static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.index());
}

inline Letter letter_from_char(char c, int rank) {
    int index, sign;
    if (c >= 'a' && c <= 'z') {
        index = c - 'a';
        sign = +1;
    } else if (c >= 'A' && c <= 'Z') {
        index = c - 'A';
        sign = -1;
    } else {
        throw config_error(std::string("invalid word character '") + c + "'");
    }
    if (index >= rank)
        throw config_error(std::string("letter '") + c + "' is outside rank " +
                           std::to_string(rank) + " alphabet");
    return make_letter(index, sign);
}

// Parses and freely reduces. Accepts "e" or "1" for the identity.
inline Word parse_word(std::string_view text, int rank) {
    if (rank < 1 || rank > kMaxRank)
        throw config_error("rank must be between 1 and 26");
    if (text == "e" || text == "1" || text.empty())
        return Word();
    std::vector<Letter> raw;
    raw.reserve(text.size());
    for (char c : text)
        raw.push_back(letter_from_char(c, rank));
    return reduce(raw);
}

inline std::string format_word(const Word& w) {
    if (w.empty())
        return "e";
    std::string s;
    s.reserve(w.size());
    for (Letter l : w)
        s.push_back(letter_to_char(l));
    return s;
}

struct WordHash {
    std::size_t operator()(const Word& w) const {
        // FNV-1a over the letter codes
        std::uint64_t h = 0xCBF29CE484222325ull;
        for (Letter l : w) {
            h ^= l.code;
            h *= 0x100000001B3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace hyplab
