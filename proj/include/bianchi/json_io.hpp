#pragma once

#include <json.hpp>

#include "bianchi/hecke.hpp"
#include "bianchi/verify.hpp"

// Canonical JSON forms: insertion-ordered keys, all numeric payloads as
// exact element strings; identical inputs produce byte-identical output.

namespace bianchi {

using Json = nlohmann::ordered_json;

Json to_json(const KMatrix& m);
Json to_json(const Mat2& g);
Json cf_json(const CFExpansion& cf);
Json poly_json(const PolyKK& p);
Json wkk_json(int d_code, int k, const WkkBasis& wb);
Json hecke_json(const HeckeMatrix& h);
Json eigen_json(int d_code, int k,
                const std::vector<std::pair<QuadInt, QuadElem>>& pairs,
                const EigenSpace& es);
Json verify_json(const VerifyReport& report);

}  // namespace bianchi
