#include "twistlab/sampling.hpp"
#include "twistlab/word.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace twistlab;

namespace {

// Reduction oracle: scan for an adjacent inverse pair, erase, repeat to a
// fixed point. Quadratic, but independent of the stack pass.
std::vector<Letter> reduce_fixpoint(std::vector<Letter> raw) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
            if (raw[i + 1] == inverse(raw[i])) {
                raw.erase(raw.begin() + i, raw.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return raw;
}

std::vector<Letter> random_letters(Sampler& rng, std::size_t len) {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(rng.letter());
    return out;
}

} // namespace

TEST_CASE("letter inverses pair up") {
    CHECK(inverse(Letter::a) == Letter::A);
    CHECK(inverse(Letter::A) == Letter::a);
    CHECK(inverse(Letter::b) == Letter::B);
    CHECK(inverse(Letter::B) == Letter::b);
    for (Letter d : {Letter::a, Letter::A, Letter::b, Letter::B})
        CHECK(inverse(inverse(d)) == d);
}

TEST_CASE("stack reduction matches the fixpoint oracle") {
    Sampler rng(11, 0);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Letter> raw = random_letters(rng, rng.below(12));
        Word stack = Word::reduce(raw);
        std::vector<Letter> oracle = reduce_fixpoint(raw);
        CHECK(stack.letters() == oracle);
    }
}

TEST_CASE("parsing and rendering round-trip") {
    CHECK(to_string(Word()) == "e");
    CHECK(Word::parse("e"));
    CHECK(Word::parse("e")->empty());
    CHECK(to_string(*Word::parse("abAB")) == "abAB");
    CHECK(to_string(*Word::parse("aA")) == "e");
    CHECK_FALSE(Word::parse(""));
    CHECK_FALSE(Word::parse("xyz"));
    CHECK_FALSE(Word::parse("ae"));
    CHECK_FALSE(Word::parse("a b"));

    Sampler rng(12, 0);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = rng.word(8);
        auto back = Word::parse(to_string(w));
        REQUIRE(back);
        CHECK(*back == w);
    }
}

TEST_CASE("group laws") {
    Sampler rng(13, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        Word u = rng.word(6), v = rng.word(6), w = rng.word(6);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * Word() == u);
        CHECK(Word() * u == u);
        CHECK(u * u.inverse() == Word());
        CHECK(u.inverse() * u == Word());
        CHECK(u.inverse().inverse() == u);
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
    }
}

TEST_CASE("exponent maps are homomorphisms") {
    CHECK(Word::parse("abAB")->a_exponent() == 0);
    CHECK(Word::parse("abAB")->b_exponent() == 0);
    CHECK(Word::parse("aab")->a_exponent() == 2);
    CHECK(Word::parse("aab")->b_exponent() == 1);
    CHECK(Word::parse("BBB")->b_exponent() == -3);

    Sampler rng(14, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        Word u = rng.word(6), v = rng.word(6);
        CHECK((u * v).a_exponent() == u.a_exponent() + v.a_exponent());
        CHECK((u * v).b_exponent() == u.b_exponent() + v.b_exponent());
        CHECK(u.inverse().a_exponent() == -u.a_exponent());
        CHECK(u.inverse().b_exponent() == -u.b_exponent());
    }
}

TEST_CASE("reduced word enumeration") {
    // 4 * 3^(n-1) reduced words of length n.
    CHECK(all_reduced_words(0).size() == 1);
    CHECK(all_reduced_words(1).size() == 5);
    CHECK(all_reduced_words(2).size() == 17);
    CHECK(all_reduced_words(3).size() == 53);
    CHECK(all_reduced_words(4).size() == 161);
    CHECK(all_reduced_words(6).size() == 1457);

    std::vector<Word> words = all_reduced_words(3);
    CHECK(to_string(words[0]) == "e");
    CHECK(to_string(words[1]) == "a");
    CHECK(to_string(words[2]) == "A");
    CHECK(to_string(words[3]) == "b");
    CHECK(to_string(words[4]) == "B");
    CHECK(to_string(words[5]) == "aa");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < words.size(); ++i) {
        seen.insert(to_string(words[i]));
        CHECK(Word::reduce(words[i].letters()) == words[i]);
        if (i > 0) CHECK(words[i - 1].size() <= words[i].size());
    }
    CHECK(seen.size() == words.size());
}

TEST_CASE("sampler words are reduced and deterministic") {
    Sampler rng1(99, 5), rng2(99, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Word w1 = rng1.word(7);
        Word w2 = rng2.word(7);
        CHECK(w1 == w2);
        CHECK(w1.size() <= 7);
        CHECK(Word::reduce(w1.letters()) == w1);
    }
}
