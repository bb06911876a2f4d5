#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "symdyn/analysis.hpp"
#include "symdyn/freegroup.hpp"
#include "symdyn/recognizability.hpp"
#include "symdyn/subshift.hpp"

namespace symdyn {

using Json = nlohmann::ordered_json;

// Words and alphabets travel as JSON arrays of symbol strings; presentations
// as {"type": "full"|"sft"|"substitution"|"image"|"double", ...}; morphisms
// as maps symbol -> array of symbols; free-group homs the same with the
// "^-1" suffix marking inverse letters. Set-valued output is ordered by
// symbol-name lexicographic order so artifacts are byte-stable.

Json alphabet_to_json(const Alphabet& alphabet);
AlphabetPtr alphabet_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const AlphabetPtr& alphabet, const Json& j);

Json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j);

Json subshift_to_json(const Subshift& shift);
SubshiftPtr subshift_from_json(const Json& j);
SubshiftPtr load_subshift(const std::string& path);

Json hom_to_json(const FreeGroupHom& phi);
FreeGroupHom hom_from_json(const Json& j);
FreeGroupHom load_hom(const std::string& path);

Json certificate_to_json(const RecognizabilityCertificate& cert);

Json word_set_to_json(const WordSet& words);

std::string table_to_csv(const ComplexityTable& table);   // header "n,p"
std::string table_hash(const ComplexityTable& table);     // fnv1a64 of the csv, hex

std::string profile_to_csv(const EntropyProfile& profile);  // "n,p,log_p_over_n"

Json bound_report_to_json(const BoundReport& report);
std::string bound_report_to_text(const BoundReport& report);

Json theta_report_to_json(const ThetaReport& report);
Json basis_change_report_to_json(const BasisChangeReport& report);
Json bundle_to_json(const CounterexampleBundle& bundle);

std::string nat_to_string(const Nat& value);
std::string format_double(double value);  // shortest round-trip form

}  // namespace symdyn
