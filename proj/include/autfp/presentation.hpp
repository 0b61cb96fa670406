#pragma once

#include <string>
#include <unordered_map>

#include "autfp/abgroup.hpp"

namespace autfp {

/// Group presentation: named generators and relator words. A relator is a
/// sequence of signed 1-based generator ids (+k = generator k-1, -k = its
/// inverse); juxtaposition is read left to right.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;

    int ngens() const { return static_cast<int>(generators.size()); }
    int add_generator(const std::string& name);
    void add_relator(std::vector<int> word);
    int generator_id(const std::string& name) const;  // -1 when absent

    void validate() const;

    /// Exponent-sum matrix, one column per relator.
    IntMatrix relation_matrix() const;
    FgAbGroup abelianization() const;
};

struct IncompatibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Generator-level homomorphism data between presentations and the induced
/// map on abelianizations, in Smith-normalized coordinates.
struct InducedH1 {
    FgAbGroup src, dst;
    IntMatrix exponent_matrix;  // dst gens x src gens
    IntMatrix normalized;       // between normalized coordinate systems
    bool epi = false, mono = false, iso = false;
};

/// images[g] = the image of src generator g as a signed word in dst
/// generators. Relators are checked in the abelianization; a violated
/// relator raises IncompatibilityError.
InducedH1 h1_induced_map(const Presentation& src, const Presentation& dst,
                         const std::vector<std::vector<int>>& images);

}  // namespace autfp
