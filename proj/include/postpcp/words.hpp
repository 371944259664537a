#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "postpcp/errors.hpp"

namespace postpcp {

// The closed letter universe. a, b are the base alphabet; c, d, f are the
// markers introduced by the reductions. Ordered a < b < c < d < f.
enum class Letter : char { a = 'a', b = 'b', c = 'c', d = 'd', f = 'f' };

inline constexpr Letter kAllLetters[] = {Letter::a, Letter::b, Letter::c, Letter::d, Letter::f};

constexpr char to_char(Letter l) noexcept { return static_cast<char>(l); }
bool is_letter(char ch) noexcept;
Letter letter_from_char(char ch);

// A finite word over the five-letter universe. Stored as a plain string of
// letter characters so it can be hashed and compared cheaply.
class Word {
public:
    Word() = default;
    explicit Word(std::string_view letters);
    Word(std::initializer_list<Letter> letters);
    static Word from_letters(std::span<const Letter> letters);
    // Repeats one letter n times (c^j markers).
    static Word power(Letter l, std::size_t n);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

    const std::string& str() const noexcept { return letters_; }
    std::string_view view() const noexcept { return letters_; }

    bool contains(Letter l) const noexcept;
    bool starts_with(const Word& prefix) const noexcept { return view().starts_with(prefix.view()); }
    bool ends_with(const Word& suffix) const noexcept { return view().ends_with(suffix.view()); }
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t pos) const;

    Word& operator+=(const Word& rhs) {
        letters_ += rhs.letters_;
        return *this;
    }
    Word& operator+=(Letter l) {
        letters_ += to_char(l);
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
    friend Word operator+(Word lhs, Letter l) { return lhs += l; }
    friend Word operator+(Letter l, const Word& rhs) { return Word{l} += rhs; }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

private:
    std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// File/CLI form: letters as-is, the empty word as "()".
std::string serialize_word(const Word& w);
Word parse_word(std::string_view text);

Word reverse(const Word& v);

// Desynchronizing morphisms: ell_d puts d before every letter, r_d after it.
// Both reject input that already contains d.
Word ell_d(const Word& v);
Word r_d(const Word& v);

// Words over an indexed alphabet a_1..a_k, the domain of the binary encoding.
struct IndexedWord {
    std::size_t alphabet_size = 1;
    std::vector<std::size_t> symbols;  // each in 1..alphabet_size

    friend bool operator==(const IndexedWord&, const IndexedWord&) = default;
};

// phi(a_i) = a^i b, extended as a morphism.
Word phi_encode(const IndexedWord& v);

} // namespace postpcp

template <>
struct std::hash<postpcp::Word> {
    std::size_t operator()(const postpcp::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
