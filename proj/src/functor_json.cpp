#include "autfp/functor_json.hpp"

namespace autfp {

nlohmann::ordered_json matrix_to_json(const IntMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(m.at(i, c).get_str());
    j["entries"] = std::move(entries);
    return j;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    IntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != m.rows() * m.cols())
        throw StructuralError("matrix_from_json: entry count mismatch");
    int k = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m.at(i, c) = mpz_class(entries[k++].get<std::string>());
    return m;
}

nlohmann::ordered_json functor_to_json(const TabulatedFunctor& t) {
    nlohmann::ordered_json j;
    j["variance"] = t.variance() == Variance::Contravariant ? "contravariant" : "covariant";
    j["name"] = t.name();
    auto objects = nlohmann::ordered_json::array();
    for (int id = 0; id < t.object_count(); ++id) {
        const FunctorObject& o = t.object(id);
        nlohmann::ordered_json jo;
        jo["shape"] = [&] {
            std::vector<int> counts;
            for (int e = 0; e < o.shape.coords(); ++e) counts.push_back(o.shape.parts_at(e));
            return counts;
        }();
        jo["generators"] = o.ngens;
        jo["relations"] = matrix_to_json(o.relations);
        objects.push_back(std::move(jo));
    }
    j["objects"] = std::move(objects);
    auto morphisms = nlohmann::ordered_json::array();
    for (const SlotMorphism& f : t.stored_morphisms()) {
        nlohmann::ordered_json jm;
        jm["source"] = f.src;
        jm["target"] = f.dst;
        jm["slot_map"] = f.map;
        jm["action"] = matrix_to_json(t.action(f));
        morphisms.push_back(std::move(jm));
    }
    j["morphisms"] = std::move(morphisms);
    return j;
}

TabulatedFunctor functor_from_json(const nlohmann::json& j) {
    Variance v = j.at("variance").get<std::string>() == "contravariant" ? Variance::Contravariant
                                                                        : Variance::Covariant;
    TabulatedFunctor t(v, j.at("name").get<std::string>());
    for (const auto& jo : j.at("objects"))
        t.add_object(PointedSetTuple::shape(jo.at("shape").get<std::vector<int>>()),
                     jo.at("generators").get<int>(), matrix_from_json(jo.at("relations")));
    for (const auto& jm : j.at("morphisms")) {
        SlotMorphism f{jm.at("source").get<int>(), jm.at("target").get<int>(),
                       jm.at("slot_map").get<std::vector<int>>()};
        t.set_action(f, matrix_from_json(jm.at("action")));
    }
    return t;
}

}  // namespace autfp
