#ifndef COMPCAT_DOCUMENT_HPP
#define COMPCAT_DOCUMENT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "compcat/compcat.hpp"
#include "compcat/fincat.hpp"
#include "compcat/structures.hpp"

namespace compcat {

// On-disk unit: {"body": <kind-specific tables>, "kind": ..., "version": "1"}.
// Canonical form is nlohmann dump(2) with a trailing newline; object keys are
// sorted, arrays are required to be in canonical (ascending key) order, and
// unknown or missing fields are rejected, so parse accepts exactly the
// canonical documents up to whitespace and emit(parse(t)) reproduces any
// canonical t byte for byte.
struct Document {
  std::string kind;
  std::string version;
  nlohmann::json body;
};

inline constexpr const char* document_version = "1";

const std::vector<std::string>& document_kinds();
bool is_document_kind(const std::string& kind);

// Errors: SyntaxError (malformed JSON with the line in the message, or a
// shape violation with the offending path), UnknownKind, VersionMismatch.
Document parse_document(const std::string& text);

// Shape-checks the body (SyntaxError on violation) and prints canonically.
std::string emit_document(const Document& d);

// Typed bridges. Encoders emit canonical bodies; decoders shape-check and
// rebuild derived endpoints (arrow categories, functor dom/cod, term-presheaf
// bases) instead of reading them from the document. Decoding a document of
// the wrong kind throws Error{"KindMismatch"}. Decoders do not run semantic
// validators; feed the result to the matching validate_* for that.
Document encode_category(const FinCategory& c);
FinCategory decode_category(const Document& d);

Document encode_functor(const FinFunctor& f);
FinFunctor decode_functor(const Document& d);

Document encode_compcat(const CompCat& cc);
CompCat decode_compcat(const Document& d);

// kind must be dmc, sdmc or clan; the three share one body schema. The kind
// records the contract claim checked by the kind's validator (sdmc: stable
// class; dmc: stable and replete; clan: validate_clan).
Document encode_display(const DisplayClass& d, const std::string& kind);
DisplayClass decode_display(const Document& d);

Document encode_cwa(const CwA& a);
CwA decode_cwa(const Document& d);

Document encode_cwf(const CwF& w);
CwF decode_cwf(const Document& d);

Document encode_natmod(const NaturalModel& n);
NaturalModel decode_natmod(const Document& d);

Document encode_cxlcat(const ContextualCategory& x);
ContextualCategory decode_cxlcat(const Document& d);

// Maps embed both endpoint compcats so the file is self-contained; phi is
// stored as its component table only (validate_map rebuilds the endpoints).
Document encode_map(const CompCatMap& m);
CompCatMap decode_map(const Document& d);

Document encode_transformation(const CompCatTransformation& t);
CompCatTransformation decode_transformation(const Document& d);

}  // namespace compcat

#endif
