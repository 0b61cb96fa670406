#include "autfp/word.hpp"

#include <sstream>

namespace autfp {

namespace {

// Push a letter onto a normal-form prefix, merging at the seam.
void push_reduced(std::vector<Letter>& out, Letter l, const GroupFamily& fam) {
    if (l.label < 0 || l.label >= fam.size()) throw StructuralError("Word: unknown label");
    if (l.element < 0 || l.element >= fam.factor(l.label).order())
        throw StructuralError("Word: element out of range");
    if (l.element == 0) return;
    if (!out.empty() && out.back().label == l.label) {
        int prod = fam.factor(l.label).mul(out.back().element, l.element);
        out.pop_back();
        if (prod != 0) push_reduced(out, {l.label, prod}, fam);
        return;
    }
    out.push_back(l);
}

}  // namespace

Word::Word(std::vector<Letter> letters, const GroupFamily& fam) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) push_reduced(letters_, l, fam);
}

Word Word::mul(const Word& o, const GroupFamily& fam) const {
    std::vector<Letter> out = letters_;
    for (const Letter& l : o.letters_) push_reduced(out, l, fam);
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word Word::inverse(const GroupFamily& fam) const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.push_back({it->label, fam.factor(it->label).inv(it->element)});
    Word w;
    w.letters_ = std::move(out);  // inverse of a normal form is a normal form
    return w;
}

std::string Word::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ".";
        os << "(" << letters_[i].label << ":" << letters_[i].element << ")";
    }
    return os.str();
}

}  // namespace autfp
