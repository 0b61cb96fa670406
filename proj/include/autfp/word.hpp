#pragma once

#include "autfp/group.hpp"

namespace autfp {

/// One letter of a free-product word: a nontrivial element of a named factor.
struct Letter {
    int label;    // index into the family
    int element;  // element index in that factor, never 0
    bool operator==(const Letter&) const = default;
};

/// Normal-form element of the free product of a family: no identity letters,
/// adjacent letters from distinct factors. Constructors normalize eagerly;
/// values are immutable.
class Word {
public:
    Word() = default;
    /// Normalizes the letter sequence against the family.
    Word(std::vector<Letter> letters, const GroupFamily& fam);

    static Word empty() { return Word(); }
    static Word letter(int label, int element, const GroupFamily& fam) {
        return Word({{label, element}}, fam);
    }

    bool is_empty() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }

    bool operator==(const Word&) const = default;

    Word mul(const Word& o, const GroupFamily& fam) const;
    Word inverse(const GroupFamily& fam) const;

    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

inline Word word_mul(const Word& a, const Word& b, const GroupFamily& fam) {
    return a.mul(b, fam);
}

}  // namespace autfp
