#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "autfp/word.hpp"

using namespace autfp;

namespace {

GroupFamily family_z3_z2() { return GroupFamily::of({FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)}); }

// oracle: full-scan rewriting until no adjacent pair shares a label and no
// identity letter remains, independent of the seam-based constructor
std::vector<Letter> reduce_naive(std::vector<Letter> letters, const GroupFamily& fam) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (letters[i].element == 0) {
                letters.erase(letters.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if (i + 1 < letters.size() && letters[i].label == letters[i + 1].label) {
                letters[i].element =
                    fam.factor(letters[i].label).mul(letters[i].element, letters[i + 1].element);
                letters.erase(letters.begin() + static_cast<long>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    return letters;
}

Word random_word(std::mt19937_64& rng, const GroupFamily& fam, int len) {
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) {
        int label = static_cast<int>(rng() % fam.size());
        int elt = static_cast<int>(rng() % fam.factor(label).order());
        letters.push_back({label, elt});
    }
    return Word(std::move(letters), fam);
}

}  // namespace

TEST_CASE("multiplying by the empty word is the identity") {
    GroupFamily fam = family_z3_z2();
    Word w = Word::letter(0, 1, fam);
    CHECK(w.mul(Word::empty(), fam) == w);
    CHECK(Word::empty().mul(w, fam) == w);
}

TEST_CASE("an involution cancels against itself") {
    GroupFamily fam = GroupFamily::of({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)});
    Word a = Word::letter(0, 1, fam);
    CHECK(a.mul(a, fam).is_empty());
}

TEST_CASE("seam reduction matches the hand computation in Z/3 * Z/2") {
    GroupFamily fam = family_z3_z2();
    // (0:g)(1:h) * (1:h)(0:g) = (0:g)(0:g) = (0:g^2)
    Word left = Word({{0, 1}, {1, 1}}, fam);
    Word right = Word({{1, 1}, {0, 1}}, fam);
    Word prod = left.mul(right, fam);
    CHECK(prod == Word({{0, 2}}, fam));
}

TEST_CASE("constructor normalizes like the naive rewriter") {
    GroupFamily fam = family_z3_z2();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> raw;
        const int len = static_cast<int>(rng() % 9);
        for (int i = 0; i < len; ++i) {
            int label = static_cast<int>(rng() % fam.size());
            raw.push_back({label, static_cast<int>(rng() % fam.factor(label).order())});
        }
        Word built(raw, fam);
        std::vector<Letter> oracle = reduce_naive(raw, fam);
        CHECK(built.letters() == oracle);
    }
}

TEST_CASE("associativity and inverses on random words") {
    GroupFamily fam = GroupFamily::of(
        {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::klein_four()});
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        Word a = random_word(rng, fam, 6);
        Word b = random_word(rng, fam, 6);
        Word c = random_word(rng, fam, 6);
        CHECK(a.mul(b, fam).mul(c, fam) == a.mul(b.mul(c, fam), fam));
        CHECK(a.mul(a.inverse(fam), fam).is_empty());
        CHECK(a.inverse(fam).mul(a, fam).is_empty());
    }
}

TEST_CASE("normal-form invariants hold after arbitrary products") {
    GroupFamily fam = family_z3_z2();
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, fam, 5).mul(random_word(rng, fam, 5), fam);
        const auto& ls = w.letters();
        for (size_t i = 0; i < ls.size(); ++i) {
            CHECK(ls[i].element != 0);
            if (i + 1 < ls.size()) CHECK(ls[i].label != ls[i + 1].label);
        }
    }
}

TEST_CASE("unknown labels are rejected") {
    GroupFamily fam = family_z3_z2();
    CHECK_THROWS_AS(Word({{5, 1}}, fam), StructuralError);
}
