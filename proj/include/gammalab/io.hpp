#pragma once

#include "gammalab/classify.hpp"
#include "gammalab/homology.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab::io {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the source and the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads and parses a JSON document; syntax errors report line and column.
Json read_json(const std::filesystem::path& path);

struct GroupData {
  std::string name;
  FiniteGroup group;
  /// Named characters from the file; "trivial" is always available.
  std::vector<OrientationChar> characters;
};

/// {"name": ..., "order": n, "labels": [...], "table": [[...]], "characters": {"w1": [1, -1, ...]}}
GroupData parse_group(const Json& j, const std::string& source);
GroupData load_group(const std::filesystem::path& path);
Json group_to_json(const std::string& name, const FiniteGroup& g,
                   const std::vector<OrientationChar>& characters);

/// Looks up a character by name; "trivial" needs no entry in the file.
OrientationChar find_character(const GroupData& g, const std::string& name);

/// {"ngens": n, "relations": [[...]]}
AbelianPresentation parse_presentation(const Json& j, const std::string& source);
AbelianPresentation load_presentation(const std::filesystem::path& path);
Json presentation_to_json(const AbelianPresentation& a);

/**
 * Module over the group ring. Accepted shapes:
 *   {"ngens": n, "relations": [[...]], "action": {"<element>": [[...]], ...}}
 *     (elements by index or label; missing elements follow by composition)
 *   {"free_rank": k}
 *   {"norm_quotient": true}            (uses the job's character)
 *   {"character": "name"}              (Z with g acting by the named sign)
 *   {"sum": [module, module, ...]}
 */
ZPiModule parse_module(const Json& j, const GroupData& g, const OrientationChar& w,
                       const std::string& source);
ZPiModule load_module(const std::filesystem::path& path, const GroupData& g, const OrientationChar& w);

/**
 * Hermitian form on pi2. Accepted shapes:
 *   {"rank": k, "matrix": [[coefficient vector, ...], ...], "basis": "group_ring" | "integral"}
 *   {"diagonal": [e_1, ..., e_k]}                  (group ring basis)
 *   {"integral_matrix": [[...]]}                   (ev0 values on the Z-basis of pi2)
 * Without "basis", group ring is used when pi2 is a standard free module.
 */
HermitianForm parse_form(const Json& j, const ZPiModule& pi2, const OrientationChar& w,
                         const std::string& source);
HermitianForm load_form(const std::filesystem::path& path, const ZPiModule& pi2,
                        const OrientationChar& w);
Json form_to_json(const HermitianForm& f);

/// {"boundaries": [d_1, d_2, ...]} with d_n a rank(F_{n-1}) x rank(F_n) matrix of coefficient vectors;
/// optional "ranks": [r_0, r_1, ...] disambiguates empty matrices.
Resolution parse_resolution(const Json& j, const FiniteGroup& g, const std::string& source);
Resolution load_resolution(const std::filesystem::path& path, const FiniteGroup& g);

Json integer_to_json(const Integer& x);
Json vector_to_json(const IntVector& v);
Json matrix_to_json(const IntMatrix& m);
Json invariants_to_json(const InvariantFactors& f);

}  // namespace gammalab::io
