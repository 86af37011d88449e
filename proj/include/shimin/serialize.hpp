#ifndef SHIMIN_SERIALIZE_HPP
#define SHIMIN_SERIALIZE_HPP

#include "shimin/oracle.hpp"
#include "shimin/rootsys.hpp"
#include "shimin/shi.hpp"
#include "shimin/weyl.hpp"

#include <json.hpp>

/*
 * JSON shapes:
 *   Root            [1, -1, 0]
 *   RootSystem      {"family":"B","rank":2,"positive_roots":[...],"simple_roots":[...]}
 *   SignType        {"family":"A","rank":2,"signs":["+","0","-"]}
 *   ShiVector       {"entries":[1,2,1]}
 *   ParkingFunction {"w":[2,-1],"P":[[1,-1],[0,1]]}   (family/rank optional)
 *   alcove record   {"kvec":[...],"depth":3}
 *   region summary  {"sign":["+",...],"size":12,"min":[...]}
 * Parsing throws DomainError on malformed input.
 */
namespace shimin {

using Json = nlohmann::json;

Json to_json(const Root& r);
Root root_from_json(const Json& j);

Json to_json(const RootSystem& rs);

Json to_json(const RootSystemKind& kind, const SignType& v);
/// Reads "signs"; family/rank fields, when present, must match `rs`.
SignType sign_type_from_json(const RootSystem& rs, const Json& j);

Json to_json(const ShiVector& v);
ShiVector shi_vector_from_json(const Json& j);

Json to_json(const ParkingFunction& pf);
/// Validates (w, P) against `rs`; extra fields are ignored.
ParkingFunction parking_function_from_json(const RootSystem& rs, const Json& j);

Json alcove_record(const Alcove& a);
Json region_summary(const SignType& sign, std::size_t size, const ShiVector& min);

} // namespace shimin

#endif // SHIMIN_SERIALIZE_HPP
