#include "shimin/serialize.hpp"

#include "shimin/errors.hpp"

namespace shimin {

namespace {

Json signs_json(const SignType& v)
{
    Json arr = Json::array();
    for (Sign s : v.signs) arr.push_back(std::string(1, to_char(s)));
    return arr;
}

void check_kind(const RootSystem& rs, const Json& j)
{
    if (j.contains("family") && parse_family(j.at("family").get<std::string>()) != rs.family())
        throw DomainError("family field does not match " + rs.kind().to_string());
    if (j.contains("rank") && j.at("rank").get<int>() != rs.rank())
        throw DomainError("rank field does not match " + rs.kind().to_string());
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed JSON input: ") + e.what());
    }
}

} // namespace

Json to_json(const Root& r)
{
    return Json(std::vector<int>(r.coords().begin(), r.coords().end()));
}

Root root_from_json(const Json& j)
{
    return guarded([&] { return Root(j.get<std::vector<int>>()); });
}

Json to_json(const RootSystem& rs)
{
    Json pos = Json::array();
    for (const Root& r : rs.positive_roots()) pos.push_back(to_json(r));
    Json simple = Json::array();
    for (const Root& r : rs.simple_roots()) simple.push_back(to_json(r));
    return Json{{"family", to_string(rs.family())},
                {"rank", rs.rank()},
                {"positive_roots", std::move(pos)},
                {"simple_roots", std::move(simple)}};
}

Json to_json(const RootSystemKind& kind, const SignType& v)
{
    return Json{{"family", to_string(kind.family)}, {"rank", kind.rank}, {"signs", signs_json(v)}};
}

SignType sign_type_from_json(const RootSystem& rs, const Json& j)
{
    return guarded([&] {
        check_kind(rs, j);
        SignType v;
        for (const auto& s : j.at("signs")) {
            const auto text = s.get<std::string>();
            if (text.size() != 1) throw DomainError("not a sign: '" + text + "'");
            v.signs.push_back(parse_sign(text[0]));
        }
        if (v.size() != rs.size()) throw DomainError("sign type has the wrong length");
        return v;
    });
}

Json to_json(const ShiVector& v)
{
    return Json{{"entries", v.entries}};
}

ShiVector shi_vector_from_json(const Json& j)
{
    return guarded([&] { return ShiVector{j.at("entries").get<std::vector<long long>>()}; });
}

Json to_json(const ParkingFunction& pf)
{
    Json p = Json::array();
    for (const Root& r : pf.partition.roots) p.push_back(to_json(r));
    return Json{{"w", std::vector<int>(pf.w.images().begin(), pf.w.images().end())}, {"P", std::move(p)}};
}

ParkingFunction parking_function_from_json(const RootSystem& rs, const Json& j)
{
    return guarded([&] {
        check_kind(rs, j);
        SignedPermutation w(rs.kind(), j.at("w").get<std::vector<int>>());
        std::vector<Root> roots;
        for (const auto& r : j.at("P")) roots.push_back(root_from_json(r));
        return make_parking_function(rs, std::move(w), std::move(roots));
    });
}

Json alcove_record(const Alcove& a)
{
    return Json{{"kvec", a.kvec.entries}, {"depth", a.depth}};
}

Json region_summary(const SignType& sign, std::size_t size, const ShiVector& min)
{
    return Json{{"sign", signs_json(sign)}, {"size", size}, {"min", min.entries}};
}

} // namespace shimin
