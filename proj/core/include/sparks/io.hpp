#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "sparks/deligne.hpp"
#include "sparks/nerve.hpp"

namespace sparks::io {

using Json = nlohmann::json;

/// Malformed input text or a document with the wrong shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

/// {"num": [...], "den": [...]} by pi-power. Readers also accept a bare
/// rational string or integer.
Json scalar_to_json(const ExactScalar& x);
ExactScalar scalar_from_json(const Json& j);

Json polytrig_to_json(const PolyTrig& f);
PolyTrig polytrig_from_json(const Json& j);

Json spark0_to_json(const CircleSpark0& s);
CircleSpark0 spark0_from_json(const Json& j);

Json nerve_to_json(const Nerve& n);
Nerve nerve_from_json(const Json& j);

using AnyCochain =
    std::variant<Cochain<Integer>, Cochain<Rational>, Cochain<ExactScalar>, Cochain<double>>;

/// Ring tag of a cochain: "Z", "Q", "QPi" or "float".
std::string ring_name(const AnyCochain& c);
int degree_of(const AnyCochain& c);
Json cochain_to_json(const AnyCochain& c);
AnyCochain cochain_from_json(const Json& j);

Json chain_to_json(const Chain& c);
/// Degree is read off the simplices; `empty_degree` is used for an empty list.
Chain chain_from_json(const Json& j, int empty_degree = 0);

Json bicochain_to_json(const BiCochain& c);
BiCochain bicochain_from_json(const Json& j);

Json deligne_to_json(const DeligneCochain& c);
DeligneCochain deligne_from_json(const Json& j);

}  // namespace sparks::io
