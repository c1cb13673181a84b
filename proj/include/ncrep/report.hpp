#ifndef NCREP_REPORT_HPP
#define NCREP_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ncrep/double_derivation.hpp"
#include "ncrep/kr.hpp"
#include "ncrep/rep.hpp"

namespace ncrep
{

using Json = nlohmann::ordered_json;

// Machine-readable and plain-text renderings. Key order is fixed, so equal
// inputs serialize byte-identically.
Json to_json(const BiSymplecticCertificate &c, const Quiver &q);
std::string to_text(const BiSymplecticCertificate &c, const Quiver &q);

Json to_json(const KRReport &r, const RepSetup &s);
std::string to_text(const KRReport &r, const RepSetup &s);

// Variable inventory of the coordinate ring.
Json inventory_json(const RepSetup &s);
std::string inventory_text(const RepSetup &s);

} // namespace ncrep

#endif
