#include "postpcp/words.hpp"

#include <algorithm>
#include <ostream>

namespace postpcp {

bool is_letter(char ch) noexcept {
    return ch == 'a' || ch == 'b' || ch == 'c' || ch == 'd' || ch == 'f';
}

Letter letter_from_char(char ch) {
    if (!is_letter(ch)) {
        throw InputError(std::string("not a letter of {a,b,c,d,f}: '") + ch + "'");
    }
    return static_cast<Letter>(ch);
}

Word::Word(std::string_view letters) : letters_(letters) {
    for (char ch : letters_) letter_from_char(ch);
}

Word::Word(std::initializer_list<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) letters_ += to_char(l);
}

Word Word::from_letters(std::span<const Letter> letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (Letter l : letters) w.letters_ += to_char(l);
    return w;
}

Word Word::power(Letter l, std::size_t n) {
    Word w;
    w.letters_.assign(n, to_char(l));
    return w;
}

bool Word::contains(Letter l) const noexcept {
    return letters_.find(to_char(l)) != std::string::npos;
}

Word Word::prefix(std::size_t n) const {
    Word w;
    w.letters_ = letters_.substr(0, n);
    return w;
}

Word Word::suffix_from(std::size_t pos) const {
    Word w;
    if (pos < letters_.size()) w.letters_ = letters_.substr(pos);
    return w;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << serialize_word(w); }

std::string serialize_word(const Word& w) { return w.empty() ? std::string("()") : w.str(); }

Word parse_word(std::string_view text) {
    if (text == "()") return Word{};
    if (text.empty()) throw InputError("empty word must be written as ()");
    return Word(text);
}

Word reverse(const Word& v) {
    std::string s = v.str();
    std::reverse(s.begin(), s.end());
    return Word(s);
}

namespace {

Word interleave_d(const Word& v, bool before) {
    if (v.contains(Letter::d)) {
        throw InputError("marker collision: desynchronization input already contains d: " + v.str());
    }
    std::string out;
    out.reserve(2 * v.size());
    for (char ch : v.str()) {
        if (before) out += 'd';
        out += ch;
        if (!before) out += 'd';
    }
    return Word(out);
}

} // namespace

Word ell_d(const Word& v) { return interleave_d(v, true); }
Word r_d(const Word& v) { return interleave_d(v, false); }

Word phi_encode(const IndexedWord& v) {
    if (v.alphabet_size < 1) throw InputError("indexed alphabet must have k >= 1");
    std::string out;
    for (std::size_t i : v.symbols) {
        if (i < 1 || i > v.alphabet_size) {
            throw InputError("indexed letter a_" + std::to_string(i) + " outside a_1..a_" +
                             std::to_string(v.alphabet_size));
        }
        out.append(i, 'a');
        out += 'b';
    }
    return Word(out);
}

} // namespace postpcp
