#pragma once

#include <string>

#include <json.hpp>

#include "jtlab/bisympl.hpp"
#include "jtlab/forms.hpp"
#include "jtlab/triple.hpp"

namespace jtlab {

using Json = nlohmann::ordered_json;

// {"family":"typeI","p":2,"q":3,"coords":[[[re,im],...],...]} or
// {"family":"polydisc","r":3,"coords":[[re,im],...]}; doubles round-trip bit-exactly.
Json element_to_json(const Element& z);
Element element_from_json(const Json& j);

Json descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const Json& j);

// {"base": <element>, "matrix": [[...], ...]} row-major.
Json two_form_to_json(const TwoFormMatrix& f);
TwoFormMatrix two_form_from_json(const Json& j);

Json bisympl_to_json(const Bisymplectomorphism& phi);
Bisymplectomorphism bisympl_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace jtlab
