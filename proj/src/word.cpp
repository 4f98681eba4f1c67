#include "twistlab/word.hpp"

namespace twistlab {

std::optional<Letter> letter_from_char(char c) {
    switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
    }
}

Word Word::reduce(const std::vector<Letter>& raw) {
    Word w;
    for (Letter l : raw) {
        if (!w.ls_.empty() && w.ls_.back() == twistlab::inverse(l))
            w.ls_.pop_back();
        else
            w.ls_.push_back(l);
    }
    return w;
}

std::optional<Word> Word::parse(const std::string& text) {
    if (text == "e") return Word();
    if (text.empty()) return std::nullopt;
    std::vector<Letter> raw;
    raw.reserve(text.size());
    for (char c : text) {
        auto l = letter_from_char(c);
        if (!l) return std::nullopt;
        raw.push_back(*l);
    }
    return reduce(raw);
}

Word Word::inverse() const {
    Word w;
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
        w.ls_.push_back(twistlab::inverse(*it));
    return w;
}

long Word::a_exponent() const {
    long s = 0;
    for (Letter l : ls_) {
        if (l == Letter::a) ++s;
        if (l == Letter::A) --s;
    }
    return s;
}

long Word::b_exponent() const {
    long s = 0;
    for (Letter l : ls_) {
        if (l == Letter::b) ++s;
        if (l == Letter::B) --s;
    }
    return s;
}

Word operator*(const Word& u, const Word& v) {
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return Word::reduce(raw);
}

std::string to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    s.reserve(w.size());
    for (Letter l : w.letters()) s.push_back(to_char(l));
    return s;
}

std::vector<Word> all_reduced_words(std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::size_t first = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t last = out.size();
        for (std::size_t i = first; i < last; ++i) {
            for (int c = 0; c < 4; ++c) {
                Letter l = static_cast<Letter>(c);
                const Word& base = out[i];
                if (!base.empty() && base[base.size() - 1] == inverse(l))
                    continue;
                std::vector<Letter> raw = base.letters();
                raw.push_back(l);
                out.push_back(Word::reduce(raw));
            }
        }
        first = last;
    }
    return out;
}

} // namespace twistlab
