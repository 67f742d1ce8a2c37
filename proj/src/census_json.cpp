#include "deza/census_json.hpp"

#include <json.hpp>

#include "deza/errors.hpp"

namespace deza {

namespace {

using nlohmann::ordered_json;

ordered_json types_to_json(const TypeCensus& t)
{
    return {{"A1", t.a1}, {"A2", t.a2}, {"B", t.b}, {"C", t.c}};
}

} // namespace

std::string census_to_json_line(const CensusRecord& r)
{
    ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.params.n;
    j["k"] = r.params.k;
    j["b"] = r.params.b;
    j["a"] = r.params.a;
    j["parameters"] = r.params.to_string();
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["types"] = r.types ? types_to_json(*r.types) : ordered_json(nullptr);
    j["theorem1"] = {{"applicable", r.theorem1.applicable},
                     {"holds", r.theorem1.holds},
                     {"reason", r.theorem1.reason}};
    return j.dump();
}

CensusRecord census_from_json_line(std::string_view line)
{
    try {
        const auto j = ordered_json::parse(line);
        CensusRecord r;
        r.graph6 = j.at("graph6").get<std::string>();
        r.params = {j.at("n").get<int>(), j.at("k").get<int>(), j.at("b").get<int>(), j.at("a").get<int>()};
        r.alpha = j.at("alpha").get<int>();
        r.beta = j.at("beta").get<int>();
        if (const auto& t = j.at("types"); !t.is_null())
            r.types = TypeCensus{t.at("A1").get<int>(), t.at("A2").get<int>(), t.at("B").get<int>(),
                                 t.at("C").get<int>()};
        const auto& t1 = j.at("theorem1");
        r.theorem1 = {t1.at("applicable").get<bool>(), t1.at("holds").get<bool>(),
                      t1.at("reason").get<std::string>()};
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid census record: ") + e.what(), 0);
    }
}

} // namespace deza
